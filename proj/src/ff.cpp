#include "towerlab/ff.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace towerlab {

namespace {

bool is_prime_word(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Raw dense polynomial arithmetic over F_p, little-endian coefficient
// vectors. Used only to bootstrap modulus validation and the canonical
// modulus search; everything else goes through Field/Polynomial.
using Raw = std::vector<std::uint32_t>;

void raw_trim(Raw& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Raw raw_mod(Raw a, const Raw& m, std::int64_t p) {
    raw_trim(a);
    if (m.empty()) throw std::invalid_argument("raw_mod by zero");
    const std::int64_t lead_inv = [&] {
        // modulus is monic in all call sites; keep general via Fermat inverse
        std::int64_t acc = 1, b = m.back(), e = p - 2;
        while (e) {
            if (e & 1) acc = acc * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return acc;
    }();
    while (a.size() >= m.size()) {
        std::int64_t c = static_cast<std::int64_t>(a.back()) * lead_inv % p;
        std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) {
            std::int64_t v = static_cast<std::int64_t>(a[shift + i]) - c * m[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((v % p + p) % p);
        }
        raw_trim(a);
        if (a.empty()) break;
    }
    return a;
}

Raw raw_mulmod(const Raw& a, const Raw& b, const Raw& m, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    Raw r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>(
                (r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
    return raw_mod(std::move(r), m, p);
}

Raw raw_gcd(Raw a, Raw b, std::int64_t p) {
    raw_trim(a);
    raw_trim(b);
    while (!b.empty()) {
        Raw r = raw_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// x^(p^e) mod m via repeated p-th powering.
Raw raw_x_pth_power(const Raw& m, std::int64_t p, int e) {
    Raw x = {0, 1};
    Raw acc = raw_mod(x, m, p);
    for (int i = 0; i < e; ++i) {
        // acc^p mod m by square-and-multiply on the exponent p
        Raw r = {1};
        Raw base = acc;
        std::int64_t exp = p;
        while (exp) {
            if (exp & 1) r = raw_mulmod(r, base, m, p);
            base = raw_mulmod(base, base, m, p);
            exp >>= 1;
        }
        acc = std::move(r);
    }
    return acc;
}

// Rabin irreducibility test for a monic polynomial of degree k over F_p.
bool raw_irreducible(const Raw& m, std::int64_t p) {
    const int k = static_cast<int>(m.size()) - 1;
    if (k < 1) return false;
    if (k == 1) return true;
    // x^(p^k) == x mod m
    Raw xk = raw_x_pth_power(m, p, k);
    Raw x = raw_mod({0, 1}, m, p);
    if (xk != x) return false;
    // gcd(x^(p^(k/t)) - x, m) == 1 for every prime t | k
    int rem = k;
    for (int t = 2; t <= rem; ++t) {
        if (rem % t != 0) continue;
        while (rem % t == 0) rem /= t;
        Raw xe = raw_x_pth_power(m, p, k / t);
        Raw diff = xe;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = static_cast<std::uint32_t>((static_cast<std::int64_t>(diff[1]) - 1 + p) % p);
        raw_trim(diff);
        Raw g = raw_gcd(m, diff, p);
        if (g.size() != 1) return false;
    }
    return true;
}

Raw canonical_irreducible(std::int64_t p, int k) {
    if (k == 1) return {0, 1};  // x itself
    // Candidates are monic of degree k; the low part is enumerated by its
    // code sum c_i p^i ascending, which is lexicographic order on the
    // coefficient vector read from the leading end down.
    std::uint64_t bound = 1;
    for (int i = 0; i < k; ++i) bound *= static_cast<std::uint64_t>(p);
    for (std::uint64_t code = 0; code < bound; ++code) {
        Raw m(k + 1, 0);
        std::uint64_t c = code;
        for (int i = 0; i < k; ++i) {
            m[i] = static_cast<std::uint32_t>(c % p);
            c /= static_cast<std::uint64_t>(p);
        }
        m[k] = 1;
        if (raw_irreducible(m, p)) return m;
    }
    throw std::logic_error("no irreducible found (unreachable)");
}

}  // namespace

Field::Field(std::int64_t p, int k, Raw mod) : p_(p), k_(k), mod_(std::move(mod)) {
    size_ = 1;
    for (int i = 0; i < k_; ++i) {
        if (size_ > (std::uint64_t(1) << 40))
            throw std::invalid_argument("field size beyond supported range");
        size_ *= static_cast<std::uint64_t>(p_);
    }
    std::uint64_t mcode = 0, w = 1;
    for (std::uint32_t c : mod_) {
        mcode += c * w;
        w *= static_cast<std::uint64_t>(p_);
    }
    std::ostringstream os;
    os << p_ << '^' << k_ << ':' << mcode;
    key_ = os.str();
}

FieldPtr Field::make(std::int64_t p, int k) {
    if (!is_prime_word(p)) throw std::invalid_argument("characteristic is not prime");
    if (k < 1) throw std::invalid_argument("extension degree must be >= 1");
    return FieldPtr(new Field(p, k, canonical_irreducible(p, k)));
}

FieldPtr Field::make(std::int64_t p, int k, const std::vector<std::int64_t>& modulus) {
    if (!is_prime_word(p)) throw std::invalid_argument("characteristic is not prime");
    if (k < 1) throw std::invalid_argument("extension degree must be >= 1");
    Raw m(modulus.size());
    for (std::size_t i = 0; i < modulus.size(); ++i)
        m[i] = static_cast<std::uint32_t>(((modulus[i] % p) + p) % p);
    raw_trim(m);
    if (static_cast<int>(m.size()) != k + 1)
        throw std::invalid_argument("modulus degree does not match extension degree");
    if (m.back() != 1) throw std::invalid_argument("modulus must be monic");
    if (!raw_irreducible(m, p)) throw std::invalid_argument("modulus is reducible");
    return FieldPtr(new Field(p, k, std::move(m)));
}

bool Field::same(const Field& other) const {
    return p_ == other.p_ && k_ == other.k_ && mod_ == other.mod_;
}

FieldElement Field::zero() const {
    return FieldElement(shared_from_this(), Raw(k_, 0));
}

FieldElement Field::one() const {
    Raw c(k_, 0);
    c[0] = 1;
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement Field::generator() const {
    if (k_ < 2) throw std::invalid_argument("prime field has no extension generator");
    Raw c(k_, 0);
    c[1] = 1;
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement Field::from_code(std::uint64_t code) const {
    if (code >= size_) throw std::invalid_argument("element code out of range");
    Raw c(k_, 0);
    for (int i = 0; i < k_; ++i) {
        c[i] = static_cast<std::uint32_t>(code % static_cast<std::uint64_t>(p_));
        code /= static_cast<std::uint64_t>(p_);
    }
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement Field::from_int(std::int64_t n) const {
    Raw c(k_, 0);
    c[0] = static_cast<std::uint32_t>(((n % p_) + p_) % p_);
    return FieldElement(shared_from_this(), std::move(c));
}

void require_same_field(const FieldElement& a, const FieldElement& b, const char* op) {
    if (!a.valid() || !b.valid() || !a.field()->same(*b.field())) {
        throw std::invalid_argument(std::string("field mismatch in ") + op);
    }
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
    require_same_field(a, b, "add");
    Raw c(k_);
    for (int i = 0; i < k_; ++i)
        c[i] = static_cast<std::uint32_t>((a.c_[i] + static_cast<std::uint64_t>(b.c_[i])) % p_);
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
    require_same_field(a, b, "sub");
    Raw c(k_);
    for (int i = 0; i < k_; ++i) {
        std::int64_t v = static_cast<std::int64_t>(a.c_[i]) - b.c_[i];
        c[i] = static_cast<std::uint32_t>((v + p_) % p_);
    }
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement Field::neg(const FieldElement& a) const {
    Raw c(k_);
    for (int i = 0; i < k_; ++i)
        c[i] = static_cast<std::uint32_t>((p_ - a.c_[i]) % p_);
    return FieldElement(shared_from_this(), std::move(c));
}

std::vector<std::uint32_t> Field::raw_mul(std::span<const std::uint32_t> a,
                                          std::span<const std::uint32_t> b) const {
    Raw r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>(
                (r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p_);
    }
    return r;
}

void Field::raw_reduce(Raw& v) const {
    v = raw_mod(std::move(v), mod_, p_);
    v.resize(k_, 0);
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
    require_same_field(a, b, "mul");
    Raw r = raw_mul(a.c_, b.c_);
    raw_reduce(r);
    return FieldElement(shared_from_this(), std::move(r));
}

FieldElement Field::inv(const FieldElement& a) const {
    if (a.is_zero()) throw std::domain_error("inverse of zero field element");
    // extended Euclid on (a, modulus)
    Raw r0 = mod_;
    Raw r1(a.c_.begin(), a.c_.end());
    raw_trim(r1);
    Raw s0 = {}, s1 = {1};
    auto scale = [&](const Raw& v, std::int64_t c) {
        Raw out(v.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            out[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v[i]) * c % p_);
        return out;
    };
    auto sub_shifted = [&](Raw& acc, const Raw& v, std::int64_t c, std::size_t shift) {
        if (acc.size() < v.size() + shift) acc.resize(v.size() + shift, 0);
        for (std::size_t i = 0; i < v.size(); ++i) {
            std::int64_t x = static_cast<std::int64_t>(acc[i + shift]) -
                             static_cast<std::int64_t>(v[i]) * c % p_;
            acc[i + shift] = static_cast<std::uint32_t>((x % p_ + p_) % p_);
        }
        raw_trim(acc);
    };
    auto inv_mod_p = [&](std::int64_t x) {
        std::int64_t acc = 1, b = x % p_, e = p_ - 2;
        while (e) {
            if (e & 1) acc = acc * b % p_;
            b = b * b % p_;
            e >>= 1;
        }
        return acc;
    };
    while (!r1.empty()) {
        // one full division r0 = q*r1 + r, updating s0 -= q*s1 in lockstep
        std::int64_t li = inv_mod_p(r1.back());
        while (!r0.empty() && r0.size() >= r1.size()) {
            std::int64_t c = static_cast<std::int64_t>(r0.back()) * li % p_;
            std::size_t shift = r0.size() - r1.size();
            sub_shifted(r0, r1, c, shift);
            sub_shifted(s0, s1, c, shift);
        }
        std::swap(r0, r1);
        std::swap(s0, s1);
    }
    raw_trim(r0);
    if (r0.size() != 1) throw std::logic_error("element not invertible (modulus not irreducible?)");
    Raw out = scale(s0, inv_mod_p(r0[0]));
    out.resize(k_, 0);
    return FieldElement(shared_from_this(), std::move(out));
}

FieldElement Field::pow(const FieldElement& a, std::uint64_t e) const {
    FieldElement acc = one();
    FieldElement base = a;
    while (e) {
        if (e & 1u) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1u;
    }
    return acc;
}

FieldElement Field::frobenius(const FieldElement& a, std::uint64_t q) const {
    std::uint64_t v = q;
    int d = 0;
    while (v > 1 && v % static_cast<std::uint64_t>(p_) == 0) {
        v /= static_cast<std::uint64_t>(p_);
        ++d;
    }
    if (v != 1 || d == 0) throw std::invalid_argument("frobenius exponent is not a power of p");
    if (k_ % d != 0) throw std::invalid_argument("frobenius subfield degree does not divide k");
    return pow(a, q);
}

std::string Field::element_str(const FieldElement& a) const {
    if (k_ == 1) return std::to_string(a.c_.empty() ? 0 : a.c_[0]);
    std::ostringstream os;
    bool first = true;
    for (int i = k_ - 1; i >= 0; --i) {
        std::uint32_t c = a.c_[i];
        if (c == 0) continue;
        if (!first) os << '+';
        first = false;
        if (i == 0) {
            os << c;
        } else {
            if (c != 1) os << c << '*';
            os << 'w';
            if (i > 1) os << '^' << i;
        }
    }
    if (first) os << '0';
    return os.str();
}

bool FieldElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](std::uint32_t c) { return c == 0; });
}

bool FieldElement::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](std::uint32_t c) { return c == 0; });
}

std::uint64_t FieldElement::code() const {
    std::uint64_t code = 0, w = 1;
    const std::uint64_t p = static_cast<std::uint64_t>(k_->characteristic());
    for (std::uint32_t c : c_) {
        code += c * w;
        w *= p;
    }
    return code;
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (!valid() || !o.valid()) return valid() == o.valid();
    return k_->same(*o.k_) && c_ == o.c_;
}

}  // namespace towerlab
