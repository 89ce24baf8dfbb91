#include "towerlab/report_io.hpp"

#include "json.hpp"

#include <fstream>
#include <set>
#include <iomanip>
#include <sstream>

namespace towerlab {

namespace {

using nlohmann::json;

json rat_json(const Rat& r) {
    return json{{"num", rat_num(r).str()}, {"den", rat_den(r).str()}};
}

json dv_json(const DvReport& dv) {
    json j;
    j["exact"] = dv.exact;
    if (dv.exact) {
        j["lhs"] = rat_json(dv.lhs_exact);
        j["deficiency"] = rat_json(dv.deficiency_exact);
    }
    j["lhs_decimal"] = dec_str(dv.lhs);
    j["deficiency_decimal"] = dec_str(dv.deficiency);
    return j;
}

json ledger_json(const IharaRecord& rec) {
    json j;
    j["q"] = rec.q.str();
    j["r"] = rec.r;
    j["beta_r"] = rat_json(rec.beta_r);
    j["lower_bound_A_r_q"] = rat_json(rec.lower_bound_Ar);
    j["lower_bound_A_qr"] = rat_json(rec.lower_bound_Aqr);
    if (rec.ceiling_exact) j["ceiling"] = rat_json(rec.ceiling_rat);
    j["ceiling_decimal"] = dec_str(rec.ceiling);
    j["attains_dv_order_r"] = rec.attains;
    if (!rec.note.empty()) j["note"] = rec.note;
    return j;
}

json invariant_json(const InvariantReport& rep) {
    json j;
    j["tower_id"] = rep.tower_id;
    j["field_size"] = rep.field_size.str();
    j["gamma_provenance"] = to_string(rep.gamma_provenance);
    if (rep.gamma_infinite)
        j["gamma"] = "infinity";
    else if (rep.gamma)
        j["gamma"] = rat_json(*rep.gamma);
    else
        j["gamma"] = nullptr;
    json nu = json::object();
    for (const auto& [r, v] : rep.nu) nu[std::to_string(r)] = rat_json(v);
    j["nu"] = nu;
    json beta = json::object();
    for (const auto& [r, v] : rep.beta) beta[std::to_string(r)] = rat_json(v);
    j["beta"] = beta;
    if (rep.dv) j["drinfeld_vladut"] = dv_json(*rep.dv);
    json ledger = json::array();
    for (const auto& rec : rep.ledger) ledger.push_back(ledger_json(rec));
    j["ihara_ledger"] = ledger;
    if (!rep.note.empty()) j["note"] = rep.note;
    return j;
}

std::string dv_term_decimal(const Int& q, int r, const Rat& beta) {
    Dec term = Dec(r) * to_dec(beta) / half_power_minus_one_dec(q, r);
    return dec_str(term, 15);
}

}  // namespace

std::string census_csv(const std::vector<CensusRow>& rows) {
    std::ostringstream os;
    os << "tower_id,place_id,level,r,degree,count,convergent_num,convergent_den,bad_chains\n";
    for (const auto& row : rows) {
        os << row.tower_id << ',' << row.place_id << ',' << row.level << ',' << row.r << ','
           << row.degree << ',' << row.count << ',' << rat_num(row.convergent).str() << ','
           << rat_den(row.convergent).str() << ',' << row.bad_chains << '\n';
    }
    return os.str();
}

std::string census_table(const std::vector<CensusRow>& rows) {
    std::ostringstream os;
    os << std::left << std::setw(10) << "tower" << std::setw(14) << "place" << std::setw(7)
       << "level" << std::setw(4) << "r" << std::setw(8) << "count" << std::setw(14)
       << "convergent" << std::setw(5) << "bad" << "locus\n";
    for (const auto& row : rows) {
        os << std::left << std::setw(10) << row.tower_id << std::setw(14) << row.place_id
           << std::setw(7) << row.level << std::setw(4) << row.r << std::setw(8) << row.count
           << std::setw(14) << rat_str(row.convergent) << std::setw(5) << row.bad_chains
           << (row.good_locus ? "good" : "flagged") << '\n';
    }
    return os.str();
}

std::string invariant_report_json(const InvariantReport& rep) {
    return invariant_json(rep).dump(2) + "\n";
}

std::string invariant_report_csv(const InvariantReport& rep) {
    std::ostringstream os;
    os << "r,nu_num,nu_den,beta_num,beta_den,dv_term\n";
    std::set<int> degrees;
    for (const auto& [r, v] : rep.nu) degrees.insert(r);
    for (const auto& [r, v] : rep.beta) degrees.insert(r);
    for (int r : degrees) {
        auto nu_it = rep.nu.find(r);
        auto beta_it = rep.beta.find(r);
        os << r << ',';
        if (nu_it != rep.nu.end())
            os << rat_num(nu_it->second).str() << ',' << rat_den(nu_it->second).str() << ',';
        else
            os << ",,";
        if (beta_it != rep.beta.end()) {
            os << rat_num(beta_it->second).str() << ',' << rat_den(beta_it->second).str() << ','
               << dv_term_decimal(rep.field_size, r, beta_it->second);
        } else {
            os << ",,";
        }
        os << '\n';
    }
    return os.str();
}

std::string invariant_report_table(const InvariantReport& rep) {
    std::ostringstream os;
    os << "tower " << rep.tower_id << " over field of size " << rep.field_size.str() << '\n';
    if (rep.gamma_infinite)
        os << "  tower genus: infinity (" << to_string(rep.gamma_provenance) << ")\n";
    else if (rep.gamma)
        os << "  tower genus: " << rat_str(*rep.gamma) << " (" << to_string(rep.gamma_provenance)
           << ")\n";
    else
        os << "  tower genus: unknown (beta values suppressed)\n";
    for (const auto& [r, v] : rep.nu) {
        os << "  nu_" << r << " = " << rat_str(v);
        auto it = rep.beta.find(r);
        if (it != rep.beta.end()) os << "    beta_" << r << " = " << rat_str(it->second);
        os << '\n';
    }
    if (rep.dv) {
        os << "  DV sum = " << (rep.dv->exact ? rat_str(rep.dv->lhs_exact) : dec_str(rep.dv->lhs, 15))
           << ", deficiency = "
           << (rep.dv->exact ? rat_str(rep.dv->deficiency_exact) : dec_str(rep.dv->deficiency, 15))
           << '\n';
    }
    for (const auto& rec : rep.ledger) {
        os << "  A_" << rec.r << "(" << rec.q.str() << ") >= " << rat_str(rec.beta_r)
           << ", ceiling "
           << (rec.ceiling_exact ? rat_str(rec.ceiling_rat) : dec_str(rec.ceiling, 15))
           << (rec.attains ? "  [attains]" : "") << '\n';
    }
    return os.str();
}

std::string composite_report_json(const CompositeReport& rep) {
    json j;
    j["plan"]["id"] = rep.plan.id();
    j["plan"]["q"] = rep.plan.q.str();
    j["plan"]["field_size"] = std::to_string(rep.plan.k2->size());
    j["plan"]["residue_degrees"] = rep.plan.residue_degrees;
    j["plan"]["m"] = rep.plan.m;
    j["plan"]["seed"] = rep.plan.seed;
    json gs = json::array();
    for (const auto& g : rep.plan.g) gs.push_back(g.str("T"));
    j["plan"]["irreducibles"] = gs;
    j["plan"]["shift"] = rep.plan.shift.str("x");
    j["plan"]["phi"] = rep.plan.phi.str("x", "T");

    j["eisenstein"]["pass"] = rep.eisenstein.pass;
    j["eisenstein"]["v_b0"] = rep.eisenstein.v_b0;
    j["eisenstein"]["gcd_m_v0"] = rep.eisenstein.gcd_m_v0;
    j["eisenstein"]["totally_ramified_at_infinity"] = rep.eisenstein.totally_ramified_at_infinity;

    json splits = json::array();
    for (const auto& s : rep.support_splits) {
        json row;
        row["place"] = s.place.id();
        json prof = json::array();
        for (const auto& [f, eps] : s.profile) prof.push_back(json{{"f", f}, {"eps", eps}});
        row["profile"] = prof;
        row["unramified"] = s.unramified();
        splits.push_back(row);
    }
    j["support_splitting"] = splits;

    j["genus"]["g_E"] = rat_json(rep.g_E);
    j["genus"]["gamma_F"] = rat_json(rep.gamma_F);
    j["genus"]["different_degree_sum"] = rat_json(rep.delta_diff);
    j["genus"]["bounds"] = json{{"lower", rat_json(rep.bounds.lower)},
                                {"upper", rat_json(rep.bounds.upper)}};
    j["genus"]["gamma_E"] = rat_json(rep.gamma_E);
    j["genus"]["gamma_E_closed_form"] = rat_json(rep.gamma_E_closed_form);
    j["deficiency_closed_form"] = rat_json(rep.deficiency_closed_form);
    j["invariants"] = json::parse(invariant_report_json(rep.invariants));
    return j.dump(2) + "\n";
}

std::string composite_report_table(const CompositeReport& rep) {
    std::ostringstream os;
    os << rep.plan.id() << '\n';
    os << "  phi(T) = " << rep.plan.phi.str("x", "T") << '\n';
    os << "  eisenstein: " << (rep.eisenstein.pass ? "pass" : "FAIL " + rep.eisenstein.violation)
       << "  (v(b_0) = " << rep.eisenstein.v_b0 << ", gcd(m, -v) = " << rep.eisenstein.gcd_m_v0
       << ")\n";
    os << "  support places: " << rep.support_splits.size() << ", each splitting as {";
    for (std::size_t i = 0; i < rep.plan.residue_degrees.size(); ++i)
        os << (i ? "," : "") << rep.plan.residue_degrees[i];
    os << "} unramified\n";
    os << "  g(E) = " << rat_str(rep.g_E) << ", gamma(E) = " << rat_str(rep.gamma_E)
       << " (closed form " << rat_str(rep.gamma_E_closed_form) << ", bounds ["
       << rat_str(rep.bounds.lower) << ", " << rat_str(rep.bounds.upper) << "])\n";
    os << invariant_report_table(rep.invariants);
    os << "  deficiency closed form = " << rat_str(rep.deficiency_closed_form) << '\n';
    return os.str();
}

std::string ledger_csv(const std::vector<IharaRecord>& records) {
    std::ostringstream os;
    os << "q,r,beta_num,beta_den,lower_Aqr_num,lower_Aqr_den,ceiling,attains,note\n";
    for (const auto& rec : records) {
        os << rec.q.str() << ',' << rec.r << ',' << rat_num(rec.beta_r).str() << ','
           << rat_den(rec.beta_r).str() << ',' << rat_num(rec.lower_bound_Aqr).str() << ','
           << rat_den(rec.lower_bound_Aqr).str() << ','
           << (rec.ceiling_exact ? rat_str(rec.ceiling_rat) : dec_str(rec.ceiling, 15)) << ','
           << (rec.attains ? 1 : 0) << ',' << rec.note << '\n';
    }
    return os.str();
}

std::string ledger_table(const std::vector<IharaRecord>& records) {
    std::ostringstream os;
    os << std::left << std::setw(6) << "q" << std::setw(4) << "r" << std::setw(10) << "beta_r"
       << std::setw(12) << "A(q^r) >=" << std::setw(22) << "ceiling" << std::setw(9)
       << "attains" << "note\n";
    for (const auto& rec : records) {
        os << std::left << std::setw(6) << rec.q.str() << std::setw(4) << rec.r << std::setw(10)
           << rat_str(rec.beta_r) << std::setw(12) << rat_str(rec.lower_bound_Aqr) << std::setw(22)
           << (rec.ceiling_exact ? rat_str(rec.ceiling_rat) : dec_str(rec.ceiling, 15))
           << std::setw(9) << (rec.attains ? "yes" : "no") << rec.note << '\n';
    }
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace towerlab
