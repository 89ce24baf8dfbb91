#include "towerlab/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace towerlab {

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::one(const FieldPtr& field) {
    return constant(field->one());
}

Polynomial Polynomial::x(const FieldPtr& field) {
    Polynomial p(field);
    p.c_ = {field->zero(), field->one()};
    return p;
}

Polynomial Polynomial::constant(const FieldElement& c) {
    Polynomial p(c.field());
    if (!c.is_zero()) p.c_ = {c};
    return p;
}

Polynomial Polynomial::from_coeffs(FieldPtr field, std::vector<FieldElement> coeffs) {
    Polynomial p(std::move(field));
    for (const auto& c : coeffs) {
        if (!c.valid() || !c.field()->same(*p.k_))
            throw std::invalid_argument("coefficient from a different field");
    }
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

Polynomial Polynomial::from_int_coeffs(const FieldPtr& field, const std::vector<std::int64_t>& coeffs) {
    std::vector<FieldElement> c;
    c.reserve(coeffs.size());
    for (std::int64_t v : coeffs) c.push_back(field->from_int(v));
    return from_coeffs(field, std::move(c));
}

Polynomial Polynomial::monic_from_code(const FieldPtr& field, int deg, std::uint64_t code) {
    if (deg < 0) throw std::invalid_argument("monic_from_code needs degree >= 0");
    std::vector<FieldElement> c;
    c.reserve(deg + 1);
    const std::uint64_t q = field->size();
    for (int i = 0; i < deg; ++i) {
        c.push_back(field->from_code(code % q));
        code /= q;
    }
    if (code != 0) throw std::invalid_argument("code out of range for degree");
    c.push_back(field->one());
    return from_coeffs(field, std::move(c));
}

FieldElement Polynomial::coeff(std::size_t i) const {
    if (i < c_.size()) return c_[i];
    return k_->zero();
}

const FieldElement& Polynomial::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r(k_);
    const std::size_t n = std::max(c_.size(), o.c_.size());
    r.c_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) r.c_.push_back(coeff(i) + o.coeff(i));
    r.trim();
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r(k_);
    const std::size_t n = std::max(c_.size(), o.c_.size());
    r.c_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) r.c_.push_back(coeff(i) - o.coeff(i));
    r.trim();
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(k_);
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(-c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial(k_);
    Polynomial r(k_);
    r.c_.assign(c_.size() + o.c_.size() - 1, k_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

Polynomial Polynomial::scaled(const FieldElement& s) const {
    Polynomial r(k_);
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(c * s);
    r.trim();
    return r;
}

Polynomial Polynomial::shifted(std::size_t powers) const {
    if (is_zero()) return *this;
    Polynomial r(k_);
    r.c_.assign(powers, k_->zero());
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    Polynomial q(k_), r = *this;
    const int dd = divisor.degree();
    if (r.degree() < dd) return {q, r};
    q.c_.assign(r.degree() - dd + 1, k_->zero());
    const FieldElement li = divisor.leading().inverse();
    while (!r.is_zero() && r.degree() >= dd) {
        const int shift = r.degree() - dd;
        const FieldElement c = r.leading() * li;
        q.c_[shift] = c;
        for (int i = 0; i <= dd; ++i)
            r.c_[shift + i] = r.c_[shift + i] - c * divisor.c_[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

Polynomial Polynomial::div_exact(const Polynomial& o) const {
    auto [q, r] = divmod(o);
    if (!r.is_zero()) throw std::logic_error("div_exact with nonzero remainder");
    return q;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!k_->same(*o.k_)) return false;
    return c_ == o.c_;
}

FieldElement Polynomial::eval(const FieldElement& at) const {
    FieldElement acc = k_->zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    Polynomial r(k_);
    if (c_.size() < 2) return r;
    r.c_.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        r.c_.push_back(c_[i] * k_->from_int(static_cast<std::int64_t>(i)));
    r.trim();
    return r;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) throw std::domain_error("monic of zero polynomial");
    if (is_monic()) return *this;
    return scaled(leading().inverse());
}

Polynomial Polynomial::pth_root() const {
    const std::int64_t p = k_->characteristic();
    Polynomial r(k_);
    if (is_zero()) return r;
    if (degree() % p != 0 && degree() != 0)
        throw std::logic_error("pth_root of a polynomial that is not a p-th power");
    const int kdeg = k_->degree();
    // c^(1/p) = c^(p^(k-1)) in F_{p^k}
    std::uint64_t e = 1;
    for (int i = 0; i + 1 < kdeg; ++i) e *= static_cast<std::uint64_t>(p);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i % static_cast<std::size_t>(p) == 0) {
            r.c_.push_back(c_[i].pow(e));
        } else if (!c_[i].is_zero()) {
            throw std::logic_error("pth_root of a polynomial that is not a p-th power");
        }
    }
    r.trim();
    return r;
}

Polynomial Polynomial::reversed(int n) const {
    if (n < degree()) throw std::invalid_argument("reversed: n below degree");
    Polynomial r(k_);
    r.c_.assign(n + 1, k_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[n - i] = c_[i];
    r.trim();
    return r;
}

Polynomial Polynomial::mapped_into(const FieldPtr& K) const {
    if (K->same(*k_)) return *this;
    const Embedding& e = Embedding::get(k_, K);
    Polynomial r(K);
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(e(c));
    r.trim();
    return r;
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const FieldElement c = c_[i];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        const std::string cs = c.str();
        const bool composite = cs.find('+') != std::string::npos;
        if (i == 0) {
            os << (composite ? "(" + cs + ")" : cs);
        } else {
            if (!c.is_one()) os << (composite ? "(" + cs + ")" : cs) << '*';
            os << var;
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial r0 = a, r1 = b;
    while (!r1.is_zero()) {
        Polynomial r = r0 % r1;
        r0 = std::move(r1);
        r1 = std::move(r);
    }
    if (r0.is_zero()) return r0;
    return r0.monic();
}

Polynomial powmod(Polynomial base, std::uint64_t e, const Polynomial& m) {
    Polynomial acc = Polynomial::one(base.field());
    acc = acc % m;
    base = base % m;
    while (e) {
        if (e & 1u) acc = (acc * base) % m;
        base = (base * base) % m;
        e >>= 1u;
    }
    return acc;
}

Polynomial powmod_big(Polynomial base, Int e, const Polynomial& m) {
    Polynomial acc = Polynomial::one(base.field());
    acc = acc % m;
    base = base % m;
    while (e > 0) {
        if ((e & 1) != 0) acc = (acc * base) % m;
        base = (base * base) % m;
        e >>= 1;
    }
    return acc;
}

bool canonical_less(const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        const std::uint64_t ca = a.coeff(i).code(), cb = b.coeff(i).code();
        if (ca != cb) return ca < cb;
    }
    return false;
}

}  // namespace towerlab
