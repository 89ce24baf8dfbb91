#pragma once

#include "towerlab/parse.hpp"
#include "towerlab/poly.hpp"

#include <string>
#include <vector>

namespace towerlab {

/// Polynomial in two variables over a finite field, stored as a vector of
/// X-polynomials indexed by the Y-power (denominators already cleared).
/// Used for tower relations Phi(X, Y) and for composite minimal
/// polynomials phi(T) with coefficients in K[x].
class BivariatePoly {
public:
    /// Invalid placeholder (no field); assign before use.
    BivariatePoly() = default;

    explicit BivariatePoly(FieldPtr K) : k_(std::move(K)) {}

    static BivariatePoly parse(const FieldPtr& K, const std::string& text,
                               const std::string& xvar = "X", const std::string& yvar = "Y");
    static BivariatePoly from_y_coeffs(FieldPtr K, std::vector<Polynomial> coeffs);

    const FieldPtr& field() const { return k_; }
    bool is_zero() const { return c_.empty(); }
    int deg_y() const { return static_cast<int>(c_.size()) - 1; }
    int deg_x() const;

    /// Coefficient of Y^j as a polynomial in X; throws beyond deg_y().
    const Polynomial& y_coeff(int j) const;
    const std::vector<Polynomial>& y_coeffs() const { return c_; }

    /// Coefficient-wise image over an extension field of the base.
    BivariatePoly mapped_into(const FieldPtr& L) const;

    /// Phi(alpha, Y) for alpha in the coefficient field.
    Polynomial eval_at_x(const FieldElement& alpha) const;

    /// The Y-polynomial of X-leading coefficients: sum_j a_{dx,j} Y^j where
    /// dx = deg_x(). Governs the fiber over the infinite place.
    Polynomial x_leading_form() const;

    /// d/dY as a bivariate polynomial.
    BivariatePoly derivative_y() const;

    /// gcd over j of the y_coeff polynomials (monic); constant iff the
    /// relation has no factor independent of Y.
    Polynomial content_y() const;

    std::string str(const std::string& xvar = "X", const std::string& yvar = "Y") const;

private:
    void trim();

    FieldPtr k_;
    std::vector<Polynomial> c_;  // c_[j] = coefficient of Y^j, in X
};

/// Resultant with respect to Y of two bivariate polynomials, as a
/// polynomial in X. Fraction-free (Bareiss) elimination on the Sylvester
/// matrix, exact over K[X].
Polynomial resultant_y(const BivariatePoly& a, const BivariatePoly& b);

/// Res_Y(Phi, dPhi/dY): vanishes exactly at the X-values with a multiple
/// Y-root; identically zero iff the generic fiber is inseparable.
Polynomial discriminant_y(const BivariatePoly& phi);

}  // namespace towerlab
