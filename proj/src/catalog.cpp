#include "towerlab/catalog.hpp"

#include "towerlab/errors.hpp"

namespace towerlab {

FieldPtr TowerCatalogEntry::base_field() const { return Field::make(p, e); }

TowerSpec TowerCatalogEntry::spec() const { return TowerSpec::parse(base_field(), relation); }

const std::vector<TowerCatalogEntry>& tower_catalog() {
    static const std::vector<TowerCatalogEntry> entries = [] {
        std::vector<TowerCatalogEntry> v;

        {
            TowerCatalogEntry t;
            t.id = "gs2";
            t.description = "optimal tower x_{n+1}^2 x_n + x_{n+1} = x_n^2 over F_4";
            t.p = 2;
            t.e = 2;
            t.relation = "Y^2*X + Y + X^2";
            t.gamma_provenance = GammaProvenance::kPaperGiven;
            t.gamma = Rat(3);
            t.gamma_cite = "gamma = q + 1 for the optimal q-tower, q = 2";
            t.known_beta = {{1, Rat(1)}};
            t.beta_cite = "beta_1 = q - 1 (Drinfeld-Vladut bound of order one)";
            t.known_deficiency = Rat(0);
            t.printed_deficiency = "0";
            t.attains_dv_order = 1;
            v.push_back(std::move(t));
        }
        {
            TowerCatalogEntry t;
            t.id = "gs3";
            t.description = "optimal tower x_{n+1}^3 x_n^2 + x_{n+1} = x_n^3 over F_9";
            t.p = 3;
            t.e = 2;
            t.relation = "Y^3*X^2 + Y + 2*X^3";
            t.gamma_provenance = GammaProvenance::kPaperGiven;
            t.gamma = Rat(4);
            t.gamma_cite = "gamma = q + 1 for the optimal q-tower, q = 3";
            t.known_beta = {{1, Rat(2)}};
            t.beta_cite = "beta_1 = q - 1 (Drinfeld-Vladut bound of order one)";
            t.known_deficiency = Rat(0);
            t.printed_deficiency = "0";
            t.attains_dv_order = 1;
            v.push_back(std::move(t));
        }
        {
            TowerCatalogEntry t;
            t.id = "no1";
            t.description = "Artin-Schreier tower y^2 + y = x + 1 + 1/x over F_2";
            t.p = 2;
            t.e = 1;
            t.relation = "X*Y^2 + X*Y + X^2 + X + 1";
            t.known_beta = {{3, Rat(1, 2)}};
            t.beta_cite = "beta_3 = 1/2 over F_2 (only the degree-3 invariant survives)";
            t.printed_deficiency = "0.17962";
            v.push_back(std::move(t));
        }
        {
            TowerCatalogEntry t;
            t.id = "no2";
            t.description = "Kummer tower y^2 = x(x-1)/(x+1) over F_9";
            t.p = 3;
            t.e = 2;
            t.relation = "(X + 1)*Y^2 + 2*X^2 + X";
            t.known_beta = {{1, Rat(2, 3)}};
            t.beta_cite = "beta_1 = 2/3 over F_9";
            t.known_deficiency = Rat(2, 3);
            t.printed_deficiency = "0.66";
            v.push_back(std::move(t));
        }
        {
            TowerCatalogEntry t;
            t.id = "no3";
            t.description = "Kummer tower y^2 = x(x+1)/(x-1) over F_81";
            t.p = 3;
            t.e = 4;
            t.relation = "(X + 2)*Y^2 + 2*X^2 + 2*X";
            t.known_beta = {{1, Rat(2)}};
            t.beta_cite = "beta_1 = 2 over F_81";
            t.known_deficiency = Rat(3, 4);
            t.printed_deficiency = "0.75";
            v.push_back(std::move(t));
        }
        {
            TowerCatalogEntry t;
            t.id = "no4";
            t.description = "Kummer tower y^2 = (x^2+1)/(2x) over F_3";
            t.p = 3;
            t.e = 1;
            t.relation = "2*X*Y^2 + 2*X^2 + 2";
            t.known_beta = {{2, Rat(1)}};
            t.beta_cite = "beta_2 = (p-1)/2 over F_p, p = 3";
            t.known_deficiency = Rat(0);
            t.printed_deficiency = "0";
            t.attains_dv_order = 2;
            v.push_back(std::move(t));
        }
        {
            TowerCatalogEntry t;
            t.id = "gs2nd2";
            t.description = "second optimal tower y^2 + y = x^2/(x + 1) over F_4";
            t.p = 2;
            t.e = 2;
            t.relation = "(X + 1)*Y^2 + (X + 1)*Y + X^2";
            t.known_beta = {{1, Rat(1)}};
            t.beta_cite = "beta_1 = q^{r/2} - 1 over F_{q^r}, here q^{r/2} = 2; "
                          "over F_2 it attains the order-2 bound with beta_2 = 1/2";
            t.attains_dv_order = 1;
            v.push_back(std::move(t));
        }
        return v;
    }();
    return entries;
}

const TowerCatalogEntry& catalog_entry(const std::string& id) {
    for (const auto& e : tower_catalog())
        if (e.id == id) return e;
    throw ConfigError("unknown catalog tower '" + id + "'");
}

const std::vector<LedgerSeed>& ledger_seeds() {
    static const std::vector<LedgerSeed> rows = {
        {Int(2), 3, Rat(1, 2), "A_3(2) >= 1/2 from the Artin-Schreier tower over F_2 (no1)"},
        {Int(3), 2, Rat(1), "A_2(3) = 1 attained by y^2 = (x^2+1)/2x over F_3 (no4); A(9) = 2"},
        {Int(9), 1, Rat(2, 3), "A_1(9) >= 2/3 from y^2 = x(x-1)/(x+1) over F_9 (no2)"},
        {Int(81), 1, Rat(2), "A_1(81) >= 2 from y^2 = x(x+1)/(x-1) over F_81 (no3)"},
        {Int(4), 1, Rat(1), "A_1(4) = 1 attained by the optimal 2-tower over F_4 (gs2)"},
        {Int(9), 1, Rat(2), "A_1(9) = 2 attained by the optimal 3-tower over F_9 (gs3)"},
        {Int(2), 2, Rat(1, 2), "A_2(2) = 1/2 attained by the second optimal tower read over F_2 (gs2nd2)"},
    };
    return rows;
}

}  // namespace towerlab
