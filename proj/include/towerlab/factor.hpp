#pragma once

#include "towerlab/poly.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace towerlab {

inline constexpr std::uint64_t kDefaultFactorSeed = 0x746f776572736565ULL;

/// Complete factorization: unit * prod factors[i].first ^ factors[i].second
/// reproduces the input exactly. Factors are monic irreducible, pairwise
/// distinct, sorted canonically (degree, then coefficients).
struct Factorization {
    FieldElement unit;
    std::vector<std::pair<Polynomial, int>> factors;

    Polynomial expand() const;
};

/// Squarefree -> distinct-degree -> equal-degree pipeline. Deterministic:
/// the equal-degree stage draws its splitting elements from a generator
/// seeded once per call, so identical (f, seed) give identical output.
/// Throws std::domain_error on the zero polynomial.
Factorization factor(const Polynomial& f, std::uint64_t seed = kDefaultFactorSeed);

/// Rabin irreducibility test (x^{q^d} == x mod f and gcd checks at the
/// maximal proper subextension degrees).
bool is_irreducible(const Polynomial& f);

bool is_squarefree(const Polynomial& f);

/// (squarefree part, multiplicity) list with multiplicities >= 1; handles
/// inseparable p-th power parts.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& f);

/// Distinct roots of f in K, where K equals or extends the coefficient
/// field of f via the cached embedding. Sorted by element code.
std::vector<FieldElement> roots_in_field(const Polynomial& f, const FieldPtr& K);

/// Roots with multiplicities; same field rules as roots_in_field.
std::vector<std::pair<FieldElement, int>> roots_with_multiplicity(const Polynomial& f,
                                                                  const FieldPtr& K);

/// Exact number of monic irreducible polynomials of degree d over F_q:
/// (1/d) sum_{e | d} mu(d/e) q^e.
Int count_irreducibles(const Int& q, int d);

/// The (seed mod count)-th monic irreducible of degree deg over K in
/// canonical order. Distinct seeds below the count give distinct
/// polynomials. Throws CapExceededError when the enumeration space
/// exceeds desk scale.
Polynomial irreducible_of_degree(const FieldPtr& K, int deg, std::uint64_t seed);

}  // namespace towerlab
