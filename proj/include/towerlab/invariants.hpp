#pragma once

#include "towerlab/numeric.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace towerlab {

/// Moebius function by trial factorization. Throws on n < 1.
int mobius(long long n);

/// sum_{t | d | r} mu(r/d), computed by direct summation. Equals 1 when
/// r == t and 0 otherwise.
int mobius_tower_sum(long long t, long long r);

/// B_1 of the degree-r constant field extension from the per-degree counts:
/// sum_{i | r} i * B_i. Throws if a divisor of r is missing from counts.
Int b1_from_br(const std::map<int, Int>& counts, int r);

/// Moebius inversion: r * B_r = sum_{d | r} mu(r/d) * B_1(F F_{q^d}).
/// counts maps d -> B_1 over F_{q^d}; a non-integral result signals
/// inconsistent inputs and throws.
Int br_from_b1(const std::map<int, Int>& counts, int r);

/// Generalized Drinfeld-Vladut data: LHS = sum_r r*beta_r/(q^{r/2}-1) and
/// deficiency = 1 - LHS. Exact rationals whenever every nonzero term has
/// integral q^{r/2}; 50-digit decimals always.
struct DvReport {
    bool exact{};
    Rat lhs_exact;         // meaningful iff exact
    Rat deficiency_exact;  // meaningful iff exact
    Dec lhs;
    Dec deficiency;
};

/// Throws std::invalid_argument on a negative beta and DiscrepancyError if
/// the bound is violated (which can only come from an upstream bug).
DvReport dv_report(const Int& q, const std::map<int, Rat>& betas);

/// nu_r / gamma. Throws on gamma <= 0; infinite gamma is handled by the
/// report assembly (betas suppressed), not here.
Rat beta_from_nu(const Rat& nu, const Rat& gamma);

/// Ledger record for the r-th Ihara constant: A_r(q) >= beta_r,
/// A(q^r) >= r*beta_r, ceiling (q^{r/2}-1)/r, and the attainment flag.
struct IharaRecord {
    Int q;
    int r{};
    Rat beta_r;
    Rat lower_bound_Ar;    // beta_r
    Rat lower_bound_Aqr;   // r * beta_r
    bool ceiling_exact{};
    Rat ceiling_rat;       // meaningful iff ceiling_exact
    Dec ceiling;
    bool attains{};        // beta_r equals the ceiling (exact or within 1e-30)
    std::string note;
};

IharaRecord ihara_ledger(const Int& q, int r, const Rat& beta_r);

enum class GammaProvenance { kPaperGiven, kFormula, kUnknown };

std::string to_string(GammaProvenance p);

/// Assembled invariants of one tower: exact nu map, beta map when the
/// tower genus is known and finite, DV data and per-r ledger records.
struct InvariantReport {
    std::string tower_id;
    Int field_size;  // size of the tower's constant field
    GammaProvenance gamma_provenance{GammaProvenance::kUnknown};
    bool gamma_infinite{false};
    std::optional<Rat> gamma;  // engaged iff known and finite
    std::map<int, Rat> nu;
    std::map<int, Rat> beta;   // empty unless gamma is known finite
    std::optional<DvReport> dv;
    std::vector<IharaRecord> ledger;
    std::string note;
};

/// Fills beta = nu/gamma (when available), the DV report and one ledger
/// row per r with beta_r > 0.
InvariantReport assemble_report(std::string tower_id, const Int& field_size,
                                GammaProvenance prov, std::optional<Rat> gamma,
                                bool gamma_infinite, std::map<int, Rat> nu,
                                std::string note = {});

/// Report assembly when only beta values are known (no nu/genus data),
/// e.g. the published constants of the tower catalog.
InvariantReport assemble_report_from_betas(std::string tower_id, const Int& field_size,
                                           std::map<int, Rat> betas, std::string note = {});

}  // namespace towerlab
