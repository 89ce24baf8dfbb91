#pragma once

#include "towerlab/bivariate.hpp"
#include "towerlab/numeric.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace towerlab {

/// Desk-scale guard rails. Census operations throw CapExceededError rather
/// than start a computation whose state would not fit.
struct EngineLimits {
    std::uint64_t max_field_size = std::uint64_t(1) << 20;
    std::uint64_t max_materialized_chains = 200000;
    int max_level = 64;
};

/// A recursive tower: base field F_q and defining relation Phi(X, Y) with
/// denominators cleared. Construction enforces the structural requirements
/// (deg_Y >= 2, no Y-free factor, separable generic fiber); the point at
/// infinity is handled through the chart-swapped forms derived on demand.
class TowerSpec {
public:
    static TowerSpec make(FieldPtr base, BivariatePoly relation);
    static TowerSpec parse(const FieldPtr& base, const std::string& relation_text);

    const FieldPtr& base_field() const { return base_; }
    const BivariatePoly& relation() const { return rel_; }
    int step_degree() const { return rel_.deg_y(); }
    const Polynomial& leading_y() const { return rel_.y_coeffs().back(); }
    const Polynomial& discriminant_x() const { return disc_x_; }

private:
    TowerSpec(FieldPtr base, BivariatePoly rel, Polynomial disc);

    FieldPtr base_;
    BivariatePoly rel_;
    Polynomial disc_x_;
};

/// Validation report for a tower relation: step degree, separability data,
/// and whether a specialization certificate for irreducibility over
/// F_q(X) was found (an X-value whose fiber polynomial is irreducible of
/// full degree; existence rules out a Y-factorization of the relation).
struct TowerDiagnostics {
    int step_degree{};
    Polynomial discriminant_x;
    Polynomial leading_y;
    bool infinity_degenerate{};
    bool irreducible_certified{};
    int certificate_extension_degree{};  // 0 when not certified
};

TowerDiagnostics validate_tower(const TowerSpec& spec, int certificate_search_bound = 6);

/// Finite bad X-values in K: roots of lc_Y(Phi) * disc_Y(Phi), sorted by
/// element code. The infinite point is reported by infinity_is_bad.
std::vector<FieldElement> bad_x_values(const TowerSpec& spec, const FieldPtr& K);
bool infinity_is_bad(const TowerSpec& spec);

/// Point of the projective line over some extension of the base field.
struct ProjectivePoint {
    bool infinite{};
    FieldElement value;  // valid iff !infinite

    static ProjectivePoint at(FieldElement v) { return {false, std::move(v)}; }
    static ProjectivePoint infinity() { return {true, {}}; }
    std::string str() const;
};

/// One tower step: the Y-solutions of Phi(alpha, Y) = 0 in the field of
/// alpha. For finite alpha only finite solutions are reported; a fiber
/// that lost solutions (leading coefficient vanished) or has a multiple
/// geometric root is flagged degenerate. Over alpha = infinity the
/// chart-swapped relation decides, and the infinite solution is included.
struct StepRoots {
    std::vector<ProjectivePoint> points;
    bool degenerate{};
};

StepRoots step_roots(const TowerSpec& spec, const ProjectivePoint& alpha,
                     const FieldPtr& in_field);

/// A place of the base rational function field F_q(x): either the monic
/// irreducible p(x) of degree d with a designated root in F_{q^d}, or the
/// infinite place.
struct BasePlace {
    bool infinite{};
    Polynomial min_poly;     // over the base field; zero polynomial for the infinite place
    int degree{1};
    FieldPtr residue_field;  // F_{q^d}
    FieldElement alpha;      // designated root, invalid for the infinite place

    std::string id() const;
};

BasePlace finite_place(const FieldPtr& base, const Polynomial& min_poly);
BasePlace rational_place(const FieldPtr& base, const FieldElement& alpha);
BasePlace infinite_place(const FieldPtr& base);

/// All base places of exact degree d (the infinite place included for
/// d == 1), in canonical order: finite places sorted by minimal
/// polynomial, the infinite place last.
std::vector<BasePlace> base_places_of_degree(const FieldPtr& base, int d,
                                             const EngineLimits& limits = {});

/// Exact per-degree census of the chains above one base place: chains are
/// enumerated over L = F_{q^{rd}}, the Frobenius x -> x^{q^d} acts, and an
/// orbit of size s corresponds to a place of F_n of degree s*d above P on
/// the good locus. Orbit counts come from subfield chain counts by Moebius
/// inversion and, whenever the chain tree is small enough to materialize,
/// are re-derived from explicit Frobenius orbits; any mismatch raises
/// DiscrepancyError. Bad (degenerate) chains are reported separately and
/// never merged into place counts.
struct ChainOrbitCensus {
    BasePlace place;
    int level{};
    int r{};
    std::map<int, long long> orbit_counts;    // orbit size s (s | r) -> count, good chains
    std::map<int, long long> orbit_counts_total;  // same, over good+bad chains
    std::map<int, long long> place_counts;    // absolute degree s*d -> count
    long long good_chains{};                  // over L
    long long bad_chains{};                   // over L
    std::map<int, long long> subfield_good;   // t | r -> good chains over F_{q^{td}}
    std::map<int, long long> subfield_total;  // t | r -> good+bad over F_{q^{td}}
    bool place_in_good_locus{};
    bool verified_by_materialization{};

    /// Count of degree-D places of F_level above the place (D = s*d).
    long long places_of_degree(int D) const;
    /// Same but counting orbits of all chains, good and bad; the honest
    /// reading on the ramified locus (lower-bound data, never exact).
    long long places_of_degree_total(int D) const;
};

/// Incremental census engine for one (tower, base place) pair; reuses
/// chain-count memo tables across levels and extension exponents.
class CensusSession {
public:
    CensusSession(const TowerSpec& spec, BasePlace place, const EngineLimits& limits = {});
    ~CensusSession();

    CensusSession(const CensusSession&) = delete;
    CensusSession& operator=(const CensusSession&) = delete;

    ChainOrbitCensus census(int level, int r);
    /// (good, bad) chain counts over F_{q^{rd}} at the given level.
    std::pair<long long, long long> chain_counts(int level, int r);

    const BasePlace& place() const;
    bool place_in_good_locus();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

ChainOrbitCensus orbit_census(const TowerSpec& spec, const BasePlace& place, int level, int r,
                              const EngineLimits& limits = {});

std::pair<long long, long long> enumerate_chains(const TowerSpec& spec, const BasePlace& place,
                                                 int level, int r,
                                                 const EngineLimits& limits = {});

/// Convergents B_r(P, F_n) / step_degree^n for n = 0..n_max. Exact place
/// counts on the good locus; on the ramified/degenerate locus the counts
/// fall back to total chain orbits and good_locus is false (lower-bound
/// data, never exact claims).
struct NuConvergents {
    std::vector<Rat> convergents;
    bool good_locus{};
};

NuConvergents nu_convergents(const TowerSpec& spec, const BasePlace& place, int n_max, int r,
                             const EngineLimits& limits = {});

/// Degree-d base places whose chain tree branches fully through depth
/// n_probe inside P^1(F_{q^d}): exactly step_degree^n_probe good chains.
std::vector<BasePlace> detect_split_locus(const TowerSpec& spec, int d, int n_probe,
                                          const EngineLimits& limits = {});

}  // namespace towerlab
