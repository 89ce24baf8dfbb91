#pragma once

#include "towerlab/tower.hpp"

#include <string>
#include <vector>

namespace towerlab {

/// Result of one acceptance criterion: pass/fail, wall time, and a detail
/// string naming the first failed check (empty on pass).
struct CriterionResult {
    int number{};
    std::string name;
    bool pass{};
    double seconds{};
    std::string detail;
};

/// Runs the full acceptance suite: Moebius identities, factorization
/// oracles, optimal-tower splitting, the worked composite example, the
/// local census cross-check, the Artin-Schreier census, the deficiency
/// table, the bound sandwich, and the Ihara ledger rows.
std::vector<CriterionResult> run_acceptance(const EngineLimits& limits = {});

std::string acceptance_summary(const std::vector<CriterionResult>& results);
bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace towerlab
