#pragma once

#include "towerlab/ff.hpp"
#include "towerlab/numeric.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace towerlab {

/// Dense univariate polynomial over a fixed coefficient field.
/// Little-endian coefficient vector with no trailing zeros; the zero
/// polynomial has an empty vector and degree() == -1.
class Polynomial {
public:
    /// Invalid placeholder (no field); assign before use.
    Polynomial() = default;

    explicit Polynomial(FieldPtr field) : k_(std::move(field)) {}

    static Polynomial zero(FieldPtr field) { return Polynomial(std::move(field)); }
    static Polynomial one(const FieldPtr& field);
    static Polynomial x(const FieldPtr& field);
    static Polynomial constant(const FieldElement& c);
    static Polynomial from_coeffs(FieldPtr field, std::vector<FieldElement> coeffs);
    static Polynomial from_int_coeffs(const FieldPtr& field, const std::vector<std::int64_t>& coeffs);
    /// Monic polynomial of degree deg whose lower coefficients are the
    /// base-q digits of code (constant term = least significant digit).
    static Polynomial monic_from_code(const FieldPtr& field, int deg, std::uint64_t code);

    const FieldPtr& field() const { return k_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    /// Coefficient of x^i (zero element beyond the degree).
    FieldElement coeff(std::size_t i) const;
    const FieldElement& leading() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const FieldElement& c) const;
    Polynomial shifted(std::size_t powers) const;  // * x^powers

    /// Euclidean division; divisor must be nonzero.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
    Polynomial operator/(const Polynomial& o) const { return divmod(o).first; }
    Polynomial operator%(const Polynomial& o) const { return divmod(o).second; }
    /// Exact division; throws std::logic_error if a remainder appears.
    Polynomial div_exact(const Polynomial& o) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    FieldElement eval(const FieldElement& at) const;
    Polynomial derivative() const;
    Polynomial monic() const;
    /// Coefficient-wise p-th root of f(x) = g(x^p); requires such a g to exist.
    Polynomial pth_root() const;

    /// Reverse-coefficient polynomial x^n f(1/x) padded to length n+1;
    /// n must be >= degree().
    Polynomial reversed(int n) const;

    /// Coefficient-wise image under the embedding into K (or identity if
    /// K is the same field).
    Polynomial mapped_into(const FieldPtr& K) const;

    std::string str(const std::string& var = "x") const;

private:
    void trim();

    FieldPtr k_;
    std::vector<FieldElement> c_;
};

Polynomial gcd(const Polynomial& a, const Polynomial& b);  // monic gcd

Polynomial powmod(Polynomial base, std::uint64_t e, const Polynomial& m);
Polynomial powmod_big(Polynomial base, Int e, const Polynomial& m);

/// Canonical total order: by degree, then by coefficient vectors compared
/// from the leading end down (element codes). Gives the deterministic
/// factor ordering and the irreducible enumeration order.
bool canonical_less(const Polynomial& a, const Polynomial& b);

}  // namespace towerlab
