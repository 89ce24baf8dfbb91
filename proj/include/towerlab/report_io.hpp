#pragma once

#include "towerlab/composite.hpp"
#include "towerlab/invariants.hpp"
#include "towerlab/tower.hpp"

#include <string>
#include <vector>

namespace towerlab {

/// One line of the census CSV, schema:
/// tower_id,place_id,level,r,degree,count,convergent_num,convergent_den,bad_chains
struct CensusRow {
    std::string tower_id;
    std::string place_id;
    int level{};
    int r{};
    int degree{};          // degree of the base place
    long long count{};     // B_r(P, F_level)
    Rat convergent;        // count / step_degree^level
    long long bad_chains{};
    bool good_locus{};
};

std::string census_csv(const std::vector<CensusRow>& rows);
std::string census_table(const std::vector<CensusRow>& rows);

std::string invariant_report_json(const InvariantReport& rep);
/// Paper-style summary: r, nu_r, beta_r, DV term per row.
std::string invariant_report_csv(const InvariantReport& rep);
std::string invariant_report_table(const InvariantReport& rep);

std::string composite_report_json(const CompositeReport& rep);
std::string composite_report_table(const CompositeReport& rep);

std::string ledger_csv(const std::vector<IharaRecord>& records);
std::string ledger_table(const std::vector<IharaRecord>& records);

void write_file(const std::string& path, const std::string& content);

}  // namespace towerlab
