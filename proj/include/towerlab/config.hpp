#pragma once

#include "towerlab/tower.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace towerlab {

/// Validated run configuration. Populated from a flat sectioned key-value
/// file ([field], [tower], [census], [composite], [output]) and/or from
/// CLI flags; unknown sections or keys are rejected with ConfigError.
struct RunConfig {
    // [field]
    std::optional<std::int64_t> p;
    std::optional<int> e;
    std::optional<std::string> modulus;  // univariate in x over F_p

    // [tower]
    std::optional<std::string> tower_id;
    std::optional<std::string> relation;

    // [census]
    int levels = 6;
    std::vector<int> r_list{1};

    // [composite]
    std::optional<Int> q;
    std::vector<int> N;
    std::uint64_t seed = 0;
    int composite_levels = 3;
    int composite_max_s = 6;

    // [output]
    std::optional<std::string> out_dir;
    std::string format = "table";  // table | csv | json

    bool verify_paper = false;

    EngineLimits limits;
};

RunConfig parse_config_file(const std::string& path);
RunConfig parse_config_text(const std::string& text);

/// Resolves the configured tower: catalog id, or inline relation over the
/// configured field. Throws ConfigError when neither is usable.
TowerSpec resolve_tower(const RunConfig& cfg);
FieldPtr resolve_field(const RunConfig& cfg);

std::vector<int> parse_int_list(const std::string& text);

}  // namespace towerlab
