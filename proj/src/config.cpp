#include "towerlab/config.hpp"

#include "towerlab/catalog.hpp"
#include "towerlab/errors.hpp"
#include "towerlab/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace towerlab {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::int64_t to_int(const std::string& v, const std::string& key) {
    try {
        std::size_t used = 0;
        long long out = std::stoll(v, &used);
        if (used != v.size()) throw std::invalid_argument("trailing junk");
        return out;
    } catch (const std::exception&) {
        throw ConfigError("bad integer for key '" + key + "': " + v);
    }
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        out.push_back(static_cast<int>(to_int(item, "list")));
    }
    if (out.empty()) throw ConfigError("empty integer list");
    return out;
}

RunConfig parse_config_text(const std::string& text) {
    RunConfig cfg;
    std::istringstream is(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        if (t.front() == '[') {
            if (t.back() != ']') throw ConfigError("unterminated section at line " + std::to_string(lineno));
            section = t.substr(1, t.size() - 2);
            if (section != "field" && section != "tower" && section != "census" &&
                section != "composite" && section != "output")
                throw ConfigError("unknown section [" + section + "]");
            continue;
        }
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError("expected key = value at line " + std::to_string(lineno));
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (section == "field") {
            if (key == "p") cfg.p = to_int(value, key);
            else if (key == "e") cfg.e = static_cast<int>(to_int(value, key));
            else if (key == "modulus") cfg.modulus = value;
            else throw ConfigError("unknown key '" + key + "' in [field]");
        } else if (section == "tower") {
            if (key == "id") cfg.tower_id = value;
            else if (key == "relation") cfg.relation = value;
            else throw ConfigError("unknown key '" + key + "' in [tower]");
        } else if (section == "census") {
            if (key == "levels") cfg.levels = static_cast<int>(to_int(value, key));
            else if (key == "r") cfg.r_list = parse_int_list(value);
            else throw ConfigError("unknown key '" + key + "' in [census]");
        } else if (section == "composite") {
            if (key == "q") cfg.q = Int(value);
            else if (key == "N") cfg.N = parse_int_list(value);
            else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(to_int(value, key));
            else if (key == "levels") cfg.composite_levels = static_cast<int>(to_int(value, key));
            else if (key == "max_s") cfg.composite_max_s = static_cast<int>(to_int(value, key));
            else throw ConfigError("unknown key '" + key + "' in [composite]");
        } else if (section == "output") {
            if (key == "dir") cfg.out_dir = value;
            else if (key == "format") cfg.format = value;
            else throw ConfigError("unknown key '" + key + "' in [output]");
        } else {
            throw ConfigError("key '" + key + "' outside any section");
        }
    }
    if (cfg.format != "table" && cfg.format != "csv" && cfg.format != "json")
        throw ConfigError("format must be table, csv or json");
    if (cfg.levels < 0 || cfg.levels > cfg.limits.max_level)
        throw ConfigError("levels out of range");
    for (int r : cfg.r_list)
        if (r < 1) throw ConfigError("census r values must be >= 1");
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

FieldPtr resolve_field(const RunConfig& cfg) {
    if (!cfg.p || !cfg.e) throw ConfigError("field requires p and e");
    if (cfg.modulus) {
        Polynomial mod = parse_polynomial(Field::make(*cfg.p, 1), *cfg.modulus, "x");
        std::vector<std::int64_t> coeffs;
        for (int i = 0; i <= mod.degree(); ++i)
            coeffs.push_back(static_cast<std::int64_t>(mod.coeff(i).code()));
        return Field::make(*cfg.p, *cfg.e, coeffs);
    }
    return Field::make(*cfg.p, *cfg.e);
}

TowerSpec resolve_tower(const RunConfig& cfg) {
    if (cfg.tower_id) {
        if (cfg.relation) throw ConfigError("give either a tower id or an inline relation, not both");
        return catalog_entry(*cfg.tower_id).spec();
    }
    if (cfg.relation) return TowerSpec::parse(resolve_field(cfg), *cfg.relation);
    throw ConfigError("no tower configured: set [tower] id or relation");
}

}  // namespace towerlab
