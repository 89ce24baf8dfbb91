#include "doctest.h"

#include "towerlab/catalog.hpp"
#include "towerlab/config.hpp"
#include "towerlab/errors.hpp"
#include "towerlab/report_io.hpp"

using namespace towerlab;

TEST_CASE("config parsing") {
    const char* text = R"(
# optimal tower run
[tower]
id = gs2

[census]
levels = 4
r = 1,2

[output]
format = csv
)";
    RunConfig cfg = parse_config_text(text);
    CHECK(cfg.tower_id == "gs2");
    CHECK(cfg.levels == 4);
    CHECK(cfg.r_list == std::vector<int>{1, 2});
    CHECK(cfg.format == "csv");

    TowerSpec spec = resolve_tower(cfg);
    CHECK(spec.step_degree() == 2);
    CHECK(spec.base_field()->size() == 4);
}

TEST_CASE("config rejects unknown keys and sections") {
    CHECK_THROWS_AS(parse_config_text("[tower]\nid = gs2\nfoo = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("[bogus]\nx = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("stray = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("[census]\nlevels = abc\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("[output]\nformat = yaml\n"), ConfigError);
}

TEST_CASE("inline relation with explicit modulus") {
    const char* text = R"(
[field]
p = 3
e = 2
modulus = x^2+1

[tower]
relation = Y^3*X^2 + Y + 2*X^3
)";
    RunConfig cfg = parse_config_text(text);
    FieldPtr K = resolve_field(cfg);
    CHECK(K->size() == 9);
    CHECK(K->modulus() == std::vector<std::uint32_t>{1, 0, 1});
    TowerSpec spec = resolve_tower(cfg);
    CHECK(spec.step_degree() == 3);
}

TEST_CASE("catalog entries all build and validate") {
    for (const TowerCatalogEntry& entry : tower_catalog()) {
        TowerSpec spec = entry.spec();
        TowerDiagnostics diag = validate_tower(spec);
        CHECK(diag.step_degree >= 2);
        CHECK(diag.irreducible_certified);

        // published constants assemble into a consistent report: deficiency
        // in [0,1], every beta below its ceiling, ledger rows coherent
        InvariantReport rep = assemble_report_from_betas(entry.id,
                                                         Int(spec.base_field()->size()),
                                                         entry.known_beta, entry.beta_cite);
        REQUIRE(rep.dv.has_value());
        CHECK(rep.dv->deficiency >= -kDecEps);
        CHECK(rep.dv->deficiency <= Dec(1) + kDecEps);
        if (entry.known_deficiency) {
            REQUIRE(rep.dv->exact);
            CHECK(rep.dv->deficiency_exact == *entry.known_deficiency);
        }
        for (const IharaRecord& rec : rep.ledger) {
            CHECK(rec.lower_bound_Aqr == Rat(rec.r) * rec.beta_r);
            if (rec.ceiling_exact) CHECK(rec.beta_r <= rec.ceiling_rat);
        }
        if (entry.attains_dv_order) {
            const int r = *entry.attains_dv_order;
            CHECK(ihara_ledger(Int(spec.base_field()->size()), r, entry.known_beta.at(r)).attains);
        }
    }
    CHECK_THROWS_AS(catalog_entry("nope"), ConfigError);
}

TEST_CASE("census csv shape") {
    std::vector<CensusRow> rows;
    CensusRow row;
    row.tower_id = "gs2";
    row.place_id = "x=w";
    row.level = 3;
    row.r = 1;
    row.degree = 1;
    row.count = 8;
    row.convergent = Rat(1);
    row.bad_chains = 0;
    row.good_locus = true;
    rows.push_back(row);
    std::string csv = census_csv(rows);
    CHECK(csv.find("tower_id,place_id,level,r,degree,count,convergent_num,convergent_den,"
                   "bad_chains") == 0);
    CHECK(csv.find("gs2,x=w,3,1,1,8,1,1,0") != std::string::npos);
}

TEST_CASE("invariant report serialization carries exact rationals") {
    InvariantReport rep = assemble_report("gs2", 4, GammaProvenance::kPaperGiven, Rat(3), false,
                                          {{1, Rat(3)}});
    std::string json = invariant_report_json(rep);
    CHECK(json.find("\"num\": \"3\"") != std::string::npos);
    CHECK(json.find("\"gamma_provenance\": \"paper-given\"") != std::string::npos);
    std::string csv = invariant_report_csv(rep);
    CHECK(csv.find("r,nu_num,nu_den,beta_num,beta_den,dv_term") == 0);
    CHECK(csv.find("1,3,1,1,1,") != std::string::npos);
}
