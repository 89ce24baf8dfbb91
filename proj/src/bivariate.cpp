#include "towerlab/bivariate.hpp"

#include <sstream>
#include <stdexcept>

namespace towerlab {

void BivariatePoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BivariatePoly BivariatePoly::parse(const FieldPtr& K, const std::string& text,
                                   const std::string& xvar, const std::string& yvar) {
    auto terms = parse_poly_expr(K, text, xvar, yvar);
    BivariatePoly out(K);
    for (const auto& [e, coeff] : terms) {
        const auto [ex, ey] = e;
        if (static_cast<std::size_t>(ey) >= out.c_.size())
            out.c_.resize(ey + 1, Polynomial::zero(K));
        Polynomial mono = Polynomial::constant(coeff).shifted(ex);
        out.c_[ey] = out.c_[ey] + mono;
    }
    out.trim();
    return out;
}

BivariatePoly BivariatePoly::from_y_coeffs(FieldPtr K, std::vector<Polynomial> coeffs) {
    BivariatePoly out(std::move(K));
    for (const auto& c : coeffs)
        if (!c.field()->same(*out.k_))
            throw std::invalid_argument("bivariate coefficient over a different field");
    out.c_ = std::move(coeffs);
    out.trim();
    return out;
}

int BivariatePoly::deg_x() const {
    int d = -1;
    for (const auto& c : c_) d = std::max(d, c.degree());
    return d;
}

const Polynomial& BivariatePoly::y_coeff(int j) const {
    if (j >= 0 && static_cast<std::size_t>(j) < c_.size()) return c_[j];
    throw std::out_of_range("y_coeff beyond degree");
}

BivariatePoly BivariatePoly::mapped_into(const FieldPtr& L) const {
    if (L->same(*k_)) return *this;
    BivariatePoly out(L);
    out.c_.reserve(c_.size());
    for (const auto& c : c_) out.c_.push_back(c.mapped_into(L));
    return out;
}

Polynomial BivariatePoly::eval_at_x(const FieldElement& alpha) const {
    std::vector<FieldElement> coeffs;
    coeffs.reserve(c_.size());
    for (const auto& c : c_) coeffs.push_back(c.eval(alpha));
    return Polynomial::from_coeffs(alpha.field(), std::move(coeffs));
}

Polynomial BivariatePoly::x_leading_form() const {
    const int dx = deg_x();
    if (dx < 0) return Polynomial::zero(k_);
    std::vector<FieldElement> coeffs;
    coeffs.reserve(c_.size());
    for (const auto& c : c_) coeffs.push_back(c.coeff(dx));
    return Polynomial::from_coeffs(k_, std::move(coeffs));
}

BivariatePoly BivariatePoly::derivative_y() const {
    BivariatePoly out(k_);
    for (std::size_t j = 1; j < c_.size(); ++j)
        out.c_.push_back(c_[j].scaled(k_->from_int(static_cast<std::int64_t>(j))));
    out.trim();
    return out;
}

Polynomial BivariatePoly::content_y() const {
    Polynomial g = Polynomial::zero(k_);
    for (const auto& c : c_) g = gcd(g, c);
    return g;
}

std::string BivariatePoly::str(const std::string& xvar, const std::string& yvar) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int j = deg_y(); j >= 0; --j) {
        const Polynomial& c = c_[j];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (j == 0) {
            os << c.str(xvar);
            continue;
        }
        const bool needs_parens = c.degree() > 0 || c.str(xvar).find('+') != std::string::npos;
        if (!c.is_one()) os << (needs_parens ? "(" + c.str(xvar) + ")" : c.str(xvar)) << '*';
        os << yvar;
        if (j > 1) os << '^' << j;
    }
    return os.str();
}

Polynomial resultant_y(const BivariatePoly& a, const BivariatePoly& b) {
    const FieldPtr& K = a.field();
    if (!K->same(*b.field())) throw std::invalid_argument("resultant over mismatched fields");
    const int m = a.deg_y(), n = b.deg_y();
    if (m < 0 || n < 0) return Polynomial::zero(K);
    if (m == 0 && n == 0) return Polynomial::one(K);
    const int size = m + n;
    const Polynomial zero = Polynomial::zero(K);

    // Sylvester matrix rows: n shifted copies of a's coefficients, then m of b's.
    std::vector<std::vector<Polynomial>> M(size, std::vector<Polynomial>(size, zero));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) M[i][i + j] = a.y_coeff(m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) M[n + i][i + j] = b.y_coeff(n - j);

    // Bareiss fraction-free elimination; divisions are exact in K[X].
    Polynomial prev = Polynomial::one(K);
    bool negate = false;
    for (int k = 0; k < size - 1; ++k) {
        if (M[k][k].is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < size; ++i)
                if (!M[i][k].is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return Polynomial::zero(K);
            std::swap(M[k], M[swap_row]);
            negate = !negate;
        }
        for (int i = k + 1; i < size; ++i) {
            for (int j = k + 1; j < size; ++j) {
                Polynomial num = M[k][k] * M[i][j] - M[i][k] * M[k][j];
                M[i][j] = num.div_exact(prev);
            }
            M[i][k] = zero;
        }
        prev = M[k][k];
    }
    Polynomial det = M[size - 1][size - 1];
    return negate ? -det : det;
}

Polynomial discriminant_y(const BivariatePoly& phi) {
    BivariatePoly d = phi.derivative_y();
    if (d.is_zero()) return Polynomial::zero(phi.field());
    return resultant_y(phi, d);
}

}  // namespace towerlab
