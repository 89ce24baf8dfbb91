#include "towerlab/invariants.hpp"

#include "towerlab/errors.hpp"

#include <stdexcept>

namespace towerlab {

int mobius(long long n) {
    if (n < 1) throw std::invalid_argument("mobius needs n >= 1");
    int m = 1;
    for (long long t = 2; t * t <= n; ++t) {
        if (n % t) continue;
        n /= t;
        if (n % t == 0) return 0;
        m = -m;
    }
    if (n > 1) m = -m;
    return m;
}

int mobius_tower_sum(long long t, long long r) {
    if (t < 1 || r < 1) throw std::invalid_argument("mobius_tower_sum needs t, r >= 1");
    int sum = 0;
    for (long long d = 1; d <= r; ++d) {
        if (r % d != 0 || d % t != 0) continue;
        sum += mobius(r / d);
    }
    return sum;
}

Int b1_from_br(const std::map<int, Int>& counts, int r) {
    if (r < 1) throw std::invalid_argument("b1_from_br needs r >= 1");
    Int total = 0;
    for (int i = 1; i <= r; ++i) {
        if (r % i != 0) continue;
        auto it = counts.find(i);
        if (it == counts.end())
            throw std::invalid_argument("b1_from_br: missing count for divisor " + std::to_string(i));
        total += Int(i) * it->second;
    }
    return total;
}

Int br_from_b1(const std::map<int, Int>& counts, int r) {
    if (r < 1) throw std::invalid_argument("br_from_b1 needs r >= 1");
    Int total = 0;
    for (int d = 1; d <= r; ++d) {
        if (r % d != 0) continue;
        auto it = counts.find(d);
        if (it == counts.end())
            throw std::invalid_argument("br_from_b1: missing count for divisor " + std::to_string(d));
        total += Int(mobius(r / d)) * it->second;
    }
    if (total % r != 0)
        throw std::invalid_argument("br_from_b1: inconsistent counts (Moebius sum not divisible by r)");
    return total / r;
}

DvReport dv_report(const Int& q, const std::map<int, Rat>& betas) {
    if (q < 2) throw std::invalid_argument("dv_report needs q >= 2");
    DvReport out;
    out.exact = true;
    out.lhs_exact = 0;
    out.lhs = 0;
    for (const auto& [r, beta] : betas) {
        if (r < 1) throw std::invalid_argument("dv_report: invalid degree");
        if (beta < 0) throw std::invalid_argument("dv_report: negative beta");
        if (beta == 0) continue;
        Rat denom;
        const Rat term_num = Rat(r) * beta;
        if (half_power_minus_one(q, r, &denom)) {
            out.lhs_exact += term_num / denom;
            out.lhs += to_dec(term_num / denom);
        } else {
            out.exact = false;
            out.lhs += to_dec(term_num) / half_power_minus_one_dec(q, r);
        }
    }
    if (out.exact) {
        if (out.lhs_exact > 1)
            throw DiscrepancyError("Drinfeld-Vladut bound violated: LHS = " + rat_str(out.lhs_exact));
        out.deficiency_exact = Rat(1) - out.lhs_exact;
        out.lhs = to_dec(out.lhs_exact);
    } else {
        if (out.lhs > Dec(1) + kDecEps)
            throw DiscrepancyError("Drinfeld-Vladut bound violated: LHS = " + dec_str(out.lhs));
    }
    out.deficiency = Dec(1) - out.lhs;
    return out;
}

Rat beta_from_nu(const Rat& nu, const Rat& gamma) {
    if (gamma <= 0) throw std::invalid_argument("beta_from_nu needs gamma > 0");
    return nu / gamma;
}

IharaRecord ihara_ledger(const Int& q, int r, const Rat& beta_r) {
    if (q < 2 || r < 1) throw std::invalid_argument("ihara_ledger needs q >= 2, r >= 1");
    if (beta_r < 0) throw std::invalid_argument("ihara_ledger: negative beta");
    IharaRecord rec;
    rec.q = q;
    rec.r = r;
    rec.beta_r = beta_r;
    rec.lower_bound_Ar = beta_r;
    rec.lower_bound_Aqr = Rat(r) * beta_r;
    Rat hp;
    if (half_power_minus_one(q, r, &hp)) {
        rec.ceiling_exact = true;
        rec.ceiling_rat = hp / r;
        rec.ceiling = to_dec(rec.ceiling_rat);
        if (beta_r > rec.ceiling_rat)
            throw std::invalid_argument("ihara_ledger: beta above the Drinfeld-Vladut ceiling");
        rec.attains = beta_r == rec.ceiling_rat;
    } else {
        rec.ceiling_exact = false;
        rec.ceiling = half_power_minus_one_dec(q, r) / r;
        Dec b = to_dec(beta_r);
        if (b > rec.ceiling + kDecEps)
            throw std::invalid_argument("ihara_ledger: beta above the Drinfeld-Vladut ceiling");
        rec.attains = abs(b - rec.ceiling) <= kDecEps;
    }
    return rec;
}

std::string to_string(GammaProvenance p) {
    switch (p) {
        case GammaProvenance::kPaperGiven: return "paper-given";
        case GammaProvenance::kFormula: return "formula";
        case GammaProvenance::kUnknown: return "unknown";
    }
    return "unknown";
}

InvariantReport assemble_report(std::string tower_id, const Int& field_size,
                                GammaProvenance prov, std::optional<Rat> gamma,
                                bool gamma_infinite, std::map<int, Rat> nu, std::string note) {
    InvariantReport rep;
    rep.tower_id = std::move(tower_id);
    rep.field_size = field_size;
    rep.gamma_provenance = prov;
    rep.gamma_infinite = gamma_infinite;
    rep.gamma = std::move(gamma);
    rep.nu = std::move(nu);
    rep.note = std::move(note);
    if (rep.gamma_infinite) {
        // genus grows faster than the step degree: every beta vanishes
        for (const auto& [r, v] : rep.nu) {
            (void)v;
            rep.beta[r] = 0;
        }
    } else if (rep.gamma) {
        for (const auto& [r, v] : rep.nu) rep.beta[r] = beta_from_nu(v, *rep.gamma);
    }
    if (rep.gamma_infinite || rep.gamma) {
        rep.dv = dv_report(field_size, rep.beta);
        for (const auto& [r, b] : rep.beta)
            if (b > 0) rep.ledger.push_back(ihara_ledger(field_size, r, b));
    }
    return rep;
}

InvariantReport assemble_report_from_betas(std::string tower_id, const Int& field_size,
                                           std::map<int, Rat> betas, std::string note) {
    InvariantReport rep;
    rep.tower_id = std::move(tower_id);
    rep.field_size = field_size;
    rep.beta = std::move(betas);
    rep.note = std::move(note);
    rep.dv = dv_report(field_size, rep.beta);
    for (const auto& [r, b] : rep.beta)
        if (b > 0) rep.ledger.push_back(ihara_ledger(field_size, r, b));
    return rep;
}

}  // namespace towerlab
