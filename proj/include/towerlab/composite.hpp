#pragma once

#include "towerlab/invariants.hpp"
#include "towerlab/tower.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace towerlab {

/// The explicit extension data E = F(y) over F = F_{q^2}(x): prescribed
/// residue degrees N (a multiset), pairwise distinct seeded irreducibles
/// g_f(T), the shift s(x) = x^{q^2} - x, and the assembled minimal
/// polynomial phi(T) = prod g_f(T) - s(x) with coefficients in F_{q^2}[x].
struct CompositePlan {
    Int q;                            // the tower parameter (a prime power)
    FieldPtr k2;                      // F_{q^2}
    std::vector<int> residue_degrees; // sorted multiset N
    int m{};                          // sum of N
    bool coprime{};                   // gcd(m, q) == 1
    std::vector<Polynomial> g;        // chosen irreducibles over k2, in T
    Polynomial shift;                 // s(x), over k2 in x
    BivariatePoly phi;                // variables (x, T): y_coeff(j) = b_j(x)
    std::uint64_t seed{};

    std::string id() const;
};

/// Builds the plan. Throws std::invalid_argument when gcd(m, q) != 1 or
/// when N asks for more distinct irreducibles of some degree than exist
/// over F_{q^2}.
CompositePlan build_phi(const Int& q, std::vector<int> N, std::uint64_t seed = 0);

/// Test/diagnostic variant: custom shift polynomial, optional coprimality
/// waiver (the Eisenstein certificate then reports the failure).
CompositePlan build_phi_custom(const Int& q, std::vector<int> N, std::uint64_t seed,
                               const Polynomial& shift, bool require_coprime);

/// Valuation data of phi at the infinite place of F_{q^2}(x) and the
/// verdict of the generalized Eisenstein criterion there: v(b_m) = 0,
/// v(b_0) < 0, v(b_i) >= 0 for 0 < i < m, gcd(m, -v(b_0)) = 1. A pass
/// certifies that phi is irreducible over F and the infinite place is
/// totally ramified in E.
struct EisensteinCertificate {
    bool pass{};
    std::string violation;            // empty iff pass
    int v_b0{};                       // valuation of the constant coefficient
    int v_bm{};
    int min_middle_valuation{};       // over 0 < i < m (0 when m <= 1)
    long long gcd_m_v0{};
    bool irreducible_over_F{};        // consequence of pass
    bool totally_ramified_at_infinity{};
};

EisensteinCertificate eisenstein_check(const CompositePlan& plan);

/// Splitting profile of one base place of F_{q^2}(x) in E, read from the
/// factorization of phi reduced at the place: pairs (relative degree f_i,
/// multiplicity eps_i) with sum eps_i * f_i = m. At the infinite place the
/// profile comes from the Eisenstein certificate instead of Kummer.
struct SplittingData {
    BasePlace place;
    std::vector<std::pair<int, int>> profile;  // (f_i, eps_i), sorted
    bool via_eisenstein{};

    bool unramified() const;
    int sum_ef() const;
};

SplittingData kummer_split(const CompositePlan& plan, const BasePlace& place,
                           const EngineLimits& limits = {});

/// Local nu data of the base tower at one support place.
struct SupportPlaceNu {
    int deg_p{};
    std::map<int, Rat> nu;  // d -> nu_d(P, F)
};

/// Composite invariants from the general local formula
/// nu_s(E) = sum_{f in N} (f/s) sum_{P, d : lcm(f deg P, d) = s} d nu_d(P, F),
/// summed over the multiset N. When the input data is pure (every place
/// supports only its own degree), the simpler convolution
/// nu_s = sum_{f d = s} nu_d(F) is evaluated as well and must agree.
struct CompositeNu {
    std::map<int, Rat> nu;
    std::vector<int> positive_params;  // s with nu_s > 0
    bool pure_input{};
};

CompositeNu nu_composite_general(const std::vector<SupportPlaceNu>& support,
                                 const std::vector<int>& N);

/// Checks the upper bound nu_s(E) <= sum_{d|s, d >= s/m} (m d / s) nu_d(F)
/// and the lower bound nu_s(E) >= split_lower[s] (count of degree-s places
/// of E over completely splitting base places).
struct BoundsCheck {
    bool pass{};
    std::string violation;
};

BoundsCheck nu_bounds_check(const std::map<int, Rat>& nu_E, const std::map<int, Rat>& nu_F,
                            int m, const std::map<int, Rat>& split_lower = {});

/// Count of degree-s places of E_n = E F_n above P, computed BOTH from the
/// local census formula B_s = sum_Q (f(Q|P)/s) sum_{lcm(deg Q, d) = s} d B_d(P, F_n)
/// and by independent enumeration: for every chain-orbit degree d' the
/// reduced phi is factored over the degree-d' residue field and factor
/// degrees are tallied. The two routes must agree exactly; a mismatch
/// raises DiscrepancyError. Requires P in the good locus and unramified
/// in E.
long long composite_level_census(const TowerSpec& spec, const CompositePlan& plan,
                                 const BasePlace& place, int level, int s,
                                 const EngineLimits& limits = {});

struct GenusBounds {
    Rat lower;   // m * gamma(F)
    Rat upper;   // g(E) - 1 + m (1 - g(F) + gamma(F))
};

GenusBounds genus_bounds(int m, const Rat& g_E, const Rat& g_F, const Rat& gamma_F);

/// Hypotheses of the exact genus formula; all must be asserted by the
/// caller (they are properties of the tower, not of the inputs).
struct GenusExactFlags {
    bool ramification_locus_finite{};
    bool alpha_invariant_zero{};
    bool tame_in_E{};
};

/// gamma(E) = g(E) - 1 - delta/2 + m (1 - g(F) + gamma(F)) where delta is
/// the different-degree sum over places of E above the ramification locus.
Rat genus_exact(int m, const Rat& g_E, const Rat& g_F, const Rat& gamma_F,
                const Rat& delta_diff, const GenusExactFlags& flags);

/// Full worked report for the composite E * F of the optimal q-tower over
/// F_{q^2} with the plan (N, seed): support splitting verified place by
/// place, invariants from the general formula, genus by the exact formula
/// cross-checked against its closed form, bounds checked, deficiency exact.
struct CompositeReport {
    CompositePlan plan;
    EisensteinCertificate eisenstein;
    std::vector<SplittingData> support_splits;
    CompositeNu nu;
    Rat g_E;                      // genus of the bottom field E
    Rat gamma_F;                  // tower genus of the base tower (q + 1)
    Rat delta_diff;               // different-degree sum (m - 1)
    GenusBounds bounds;
    Rat gamma_E;                  // exact formula route
    Rat gamma_E_closed_form;      // (m (q^2 + 2q + 2) - q^2) / 2
    Rat deficiency_closed_form;   // 1 - beta * sum_{f in N} f/(q^f - 1)
    InvariantReport invariants;
};

CompositeReport gs_composite_report(const Int& q, std::vector<int> N, std::uint64_t seed = 0,
                                    const EngineLimits& limits = {});

/// The optimal tower relation x_{n+1}^q x_n^{q-1} + x_{n+1} = x_n^q as a
/// TowerSpec over F_{q^2}.
TowerSpec gs_tower_spec(const Int& q);

/// Decomposes a prime power; throws std::invalid_argument otherwise.
std::pair<std::int64_t, int> prime_power_decompose(const Int& q);

}  // namespace towerlab
