#pragma once

#include "towerlab/invariants.hpp"
#include "towerlab/tower.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace towerlab {

/// One built-in recursive tower with its published constants. Every known
/// constant carries a citation note naming where the value comes from.
struct TowerCatalogEntry {
    std::string id;
    std::string description;
    std::int64_t p{};
    int e{};                      // base field F_{p^e}
    std::string relation;         // defining relation, cleared form
    GammaProvenance gamma_provenance{GammaProvenance::kUnknown};
    std::optional<Rat> gamma;
    std::string gamma_cite;
    std::map<int, Rat> known_beta;
    std::string beta_cite;
    std::optional<Rat> known_deficiency;            // when published exactly
    std::optional<std::string> printed_deficiency;  // decimal as published
    std::optional<int> attains_dv_order;

    FieldPtr base_field() const;
    TowerSpec spec() const;
};

const std::vector<TowerCatalogEntry>& tower_catalog();

/// Lookup by id; throws ConfigError for unknown ids.
const TowerCatalogEntry& catalog_entry(const std::string& id);

/// Built-in Ihara ledger rows (q, r, beta lower bound, citation).
struct LedgerSeed {
    Int q;
    int r{};
    Rat beta;
    std::string cite;
};

const std::vector<LedgerSeed>& ledger_seeds();

}  // namespace towerlab
