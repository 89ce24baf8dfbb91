#include "towerlab/composite.hpp"

#include "towerlab/errors.hpp"
#include "towerlab/factor.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace towerlab {

namespace {

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

std::map<int, int> multiset_counts(const std::vector<int>& N) {
    std::map<int, int> counts;
    for (int f : N) {
        if (f < 1) throw std::invalid_argument("residue degrees must be >= 1");
        ++counts[f];
    }
    return counts;
}

}  // namespace

std::pair<std::int64_t, int> prime_power_decompose(const Int& q) {
    if (q < 2) throw std::invalid_argument("q must be >= 2");
    Int n = q;
    std::int64_t p = 0;
    for (std::int64_t d = 2; Int(d) * d <= n; ++d) {
        if (n % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) p = static_cast<std::int64_t>(n);  // q itself prime
    int a = 0;
    while (n % p == 0) {
        n /= p;
        ++a;
    }
    if (n != 1) throw std::invalid_argument("q is not a prime power");
    return {p, a};
}

std::string CompositePlan::id() const {
    std::ostringstream os;
    os << "gs-composite q=" << q << " N={";
    for (std::size_t i = 0; i < residue_degrees.size(); ++i)
        os << (i ? "," : "") << residue_degrees[i];
    os << "} seed=" << seed;
    return os.str();
}

CompositePlan build_phi_custom(const Int& q, std::vector<int> N, std::uint64_t seed,
                               const Polynomial& shift, bool require_coprime) {
    if (N.empty()) throw std::invalid_argument("residue degree set N must be non-empty");
    std::sort(N.begin(), N.end());
    CompositePlan plan;
    plan.q = q;
    plan.seed = seed;
    plan.residue_degrees = N;
    plan.m = std::accumulate(N.begin(), N.end(), 0);
    plan.coprime = gcd(Int(plan.m), q) == 1;
    if (require_coprime && !plan.coprime)
        throw std::invalid_argument("gcd(m, q) != 1: the composite construction requires m coprime to q");

    const auto [p, a] = prime_power_decompose(q);
    if (shift.field()->characteristic() != p || shift.field()->degree() != 2 * a)
        throw std::invalid_argument("shift polynomial is not over F_{q^2}");
    plan.k2 = shift.field();
    plan.shift = shift;

    // pairwise distinct irreducibles: the i-th request of degree f takes
    // the (seed + i)-th canonical irreducible
    for (const auto& [f, mult] : multiset_counts(N)) {
        if (count_irreducibles(Int(plan.k2->size()), f) < mult)
            throw std::invalid_argument("not enough distinct monic irreducibles of degree " +
                                        std::to_string(f) + " over F_{q^2}");
        for (int i = 0; i < mult; ++i)
            plan.g.push_back(irreducible_of_degree(plan.k2, f, seed + static_cast<std::uint64_t>(i)));
    }

    Polynomial prod = Polynomial::one(plan.k2);
    for (const auto& gf : plan.g) prod = prod * gf;

    // phi(T) = prod g_f(T) - s(x): constants except the T^0 coefficient
    std::vector<Polynomial> b(plan.m + 1, Polynomial::zero(plan.k2));
    for (int j = 0; j <= plan.m; ++j) b[j] = Polynomial::constant(prod.coeff(j));
    b[0] = b[0] - plan.shift;
    plan.phi = BivariatePoly::from_y_coeffs(plan.k2, std::move(b));
    return plan;
}

CompositePlan build_phi(const Int& q, std::vector<int> N, std::uint64_t seed) {
    const auto [p, a] = prime_power_decompose(q);
    FieldPtr k2 = Field::make(p, 2 * a);
    // s(x) = x^{q^2} - x
    Polynomial shift =
        Polynomial::x(k2).shifted(static_cast<std::size_t>(k2->size() - 1)) - Polynomial::x(k2);
    return build_phi_custom(q, std::move(N), seed, shift, /*require_coprime=*/true);
}

EisensteinCertificate eisenstein_check(const CompositePlan& plan) {
    EisensteinCertificate cert;
    const int m = plan.m;
    auto valuation = [](const Polynomial& b) {
        // v_infinity(polynomial of degree D) = -D; v(0) = +infinity
        return b.is_zero() ? std::numeric_limits<int>::max() : -b.degree();
    };
    cert.v_bm = valuation(plan.phi.deg_y() >= m ? plan.phi.y_coeff(m) : Polynomial::zero(plan.k2));
    cert.v_b0 = valuation(plan.phi.y_coeff(0));
    cert.min_middle_valuation = 0;
    int min_mid = std::numeric_limits<int>::max();
    for (int i = 1; i < m; ++i) min_mid = std::min(min_mid, valuation(plan.phi.y_coeff(i)));
    if (m > 1) cert.min_middle_valuation = min_mid;

    if (plan.phi.deg_y() != m || cert.v_bm != 0) {
        cert.violation = "leading coefficient b_m is not a nonzero constant";
        return cert;
    }
    if (cert.v_b0 >= 0) {
        cert.violation = "v(b_0) >= 0: no pole at the distinguished place";
        return cert;
    }
    if (m > 1 && cert.min_middle_valuation < 0) {
        cert.violation = "some middle coefficient has a pole at the distinguished place";
        return cert;
    }
    cert.gcd_m_v0 = std::gcd(static_cast<long long>(m), static_cast<long long>(-cert.v_b0));
    if (cert.gcd_m_v0 != 1) {
        cert.violation = "gcd(m, v(b_0)) = " + std::to_string(cert.gcd_m_v0) + " != 1";
        return cert;
    }
    cert.pass = true;
    cert.irreducible_over_F = true;
    cert.totally_ramified_at_infinity = true;
    return cert;
}

bool SplittingData::unramified() const {
    return std::all_of(profile.begin(), profile.end(),
                       [](const auto& fe) { return fe.second == 1; });
}

int SplittingData::sum_ef() const {
    int acc = 0;
    for (const auto& [f, e] : profile) acc += f * e;
    return acc;
}

SplittingData kummer_split(const CompositePlan& plan, const BasePlace& place,
                           const EngineLimits& limits) {
    SplittingData out;
    out.place = place;
    if (place.infinite) {
        // the Eisenstein place: total ramification, one place of relative
        // degree one; Kummer does not apply here
        EisensteinCertificate cert = eisenstein_check(plan);
        if (!cert.pass)
            throw std::invalid_argument("no Eisenstein certificate at infinity: " + cert.violation);
        out.via_eisenstein = true;
        out.profile = {{1, plan.m}};
        return out;
    }
    if (!place.min_poly.field()->same(*plan.k2))
        throw std::invalid_argument("place is not over the plan's base field F_{q^2}");
    const std::uint64_t residue_size = place.residue_field->size();
    if (residue_size > limits.max_field_size)
        throw CapExceededError("residue field exceeds the size cap");
    BivariatePoly phi_res = plan.phi.mapped_into(place.residue_field);
    Polynomial reduced = phi_res.eval_at_x(place.alpha);
    if (reduced.degree() != plan.m)
        throw std::logic_error("reduced phi lost degree (non-monic plan?)");
    Factorization fac = factor(reduced);
    for (const auto& [g, mult] : fac.factors) out.profile.emplace_back(g.degree(), mult);
    std::sort(out.profile.begin(), out.profile.end());
    if (out.sum_ef() != plan.m)
        throw DiscrepancyError("fundamental equality violated in kummer_split");
    return out;
}

CompositeNu nu_composite_general(const std::vector<SupportPlaceNu>& support,
                                 const std::vector<int>& N) {
    CompositeNu out;
    out.pure_input = true;
    for (const auto& sp : support) {
        if (sp.deg_p < 1) throw std::invalid_argument("support place degree must be >= 1");
        for (const auto& [d, val] : sp.nu) {
            if (val < 0) throw std::invalid_argument("negative local nu value");
            if (val > 0 && d != sp.deg_p) out.pure_input = false;
        }
    }
    for (int f : N) {
        for (const auto& sp : support) {
            for (const auto& [d, val] : sp.nu) {
                if (val == 0) continue;
                const long long s = lcm_ll(static_cast<long long>(f) * sp.deg_p, d);
                out.nu[static_cast<int>(s)] += Rat(Int(f) * d, Int(s)) * val;
            }
        }
    }
    for (auto it = out.nu.begin(); it != out.nu.end();)
        it = it->second == 0 ? out.nu.erase(it) : std::next(it);
    for (const auto& [s, v] : out.nu)
        if (v > 0) out.positive_params.push_back(s);

    if (out.pure_input) {
        // pure specialization: nu_s(E) = sum_{f d = s} nu_d(F)
        std::map<int, Rat> global;
        for (const auto& sp : support)
            for (const auto& [d, val] : sp.nu) global[d] += val;
        std::map<int, Rat> conv;
        for (int f : N)
            for (const auto& [d, val] : global)
                if (val > 0) conv[f * d] += val;
        for (auto it = conv.begin(); it != conv.end();)
            it = it->second == 0 ? conv.erase(it) : std::next(it);
        if (conv != out.nu)
            throw DiscrepancyError("pure-tower convolution disagrees with the general formula");
    }
    return out;
}

BoundsCheck nu_bounds_check(const std::map<int, Rat>& nu_E, const std::map<int, Rat>& nu_F,
                            int m, const std::map<int, Rat>& split_lower) {
    BoundsCheck out;
    out.pass = true;
    for (const auto& [s, val] : nu_E) {
        Rat bound = 0;
        for (const auto& [d, vF] : nu_F) {
            if (vF <= 0) continue;
            if (s % d != 0) continue;
            if (static_cast<long long>(d) * m < s) continue;  // d >= s/m
            bound += Rat(Int(m) * d, Int(s)) * vF;
        }
        if (val > bound) {
            out.pass = false;
            out.violation = "nu_" + std::to_string(s) + "(E) exceeds the composite upper bound";
            return out;
        }
    }
    for (const auto& [s, low] : split_lower) {
        auto it = nu_E.find(s);
        const Rat have = it == nu_E.end() ? Rat(0) : it->second;
        if (have < low) {
            out.pass = false;
            out.violation = "nu_" + std::to_string(s) + "(E) below the split-locus lower bound";
            return out;
        }
    }
    return out;
}

long long composite_level_census(const TowerSpec& spec, const CompositePlan& plan,
                                 const BasePlace& place, int level, int s,
                                 const EngineLimits& limits) {
    if (!spec.base_field()->same(*plan.k2))
        throw std::invalid_argument("tower and plan live over different base fields");
    if (place.infinite)
        throw std::invalid_argument("composite census requires a finite good-locus place");
    if (s < 1) throw std::invalid_argument("place degree s must be >= 1");
    if (s % place.degree != 0) return 0;
    const int r = s / place.degree;

    CensusSession session(spec, place, limits);
    if (!session.place_in_good_locus())
        throw std::invalid_argument("place " + place.id() + " is not in the good locus");
    ChainOrbitCensus census = session.census(level, r);

    // Formula route: sum over the extensions Q | P (one of relative degree
    // f per entry of N) of (f(Q|P)/s) sum_{lcm(deg Q, d) = s} d B_d(P, F_n).
    Rat formula = 0;
    for (int f : plan.residue_degrees) {
        const long long degQ = static_cast<long long>(f) * place.degree;
        Rat inner = 0;
        for (const auto& [d, count] : census.place_counts) {
            if (count == 0) continue;
            if (lcm_ll(degQ, d) != s) continue;
            inner += Rat(Int(d) * count);
        }
        formula += Rat(Int(f), Int(s)) * inner;
    }
    if (rat_den(formula) != 1)
        throw DiscrepancyError("composite census formula produced a non-integer");
    const long long by_formula = static_cast<long long>(rat_num(formula));

    // Direct route: factor the reduced phi over the residue field of each
    // occurring orbit degree and tally absolute place degrees.
    std::map<int, long long> tally;
    for (const auto& [dprime, count] : census.place_counts) {
        if (count == 0) continue;
        const int ext_degree = plan.k2->degree() * dprime;
        std::uint64_t size = 1;
        for (int i = 0; i < ext_degree; ++i) {
            size *= static_cast<std::uint64_t>(plan.k2->characteristic());
            if (size > limits.max_field_size)
                throw CapExceededError("residue field exceeds the size cap in composite census");
        }
        FieldPtr L = ext_degree == plan.k2->degree() ? plan.k2
                                                     : Field::make(plan.k2->characteristic(), ext_degree);
        const Embedding& emb = Embedding::get(place.residue_field, L);
        Polynomial reduced = plan.phi.mapped_into(L).eval_at_x(emb(place.alpha));
        Factorization fac = factor(reduced);
        for (const auto& [gf, mult] : fac.factors) {
            if (mult != 1)
                throw std::invalid_argument(
                    "reduced phi is not squarefree at a census place: place " + place.id() +
                    " is ramified in E");
            tally[gf.degree() * dprime] += count;
        }
    }
    const long long by_enumeration = tally.count(s) ? tally.at(s) : 0;

    if (by_formula != by_enumeration) {
        std::ostringstream os;
        os << "composite census mismatch at place " << place.id() << ", level " << level
           << ", degree " << s << ": formula " << by_formula << " vs enumeration "
           << by_enumeration;
        throw DiscrepancyError(os.str());
    }
    return by_formula;
}

GenusBounds genus_bounds(int m, const Rat& g_E, const Rat& g_F, const Rat& gamma_F) {
    if (m < 1) throw std::invalid_argument("extension degree m must be >= 1");
    GenusBounds b;
    b.lower = Rat(m) * gamma_F;
    b.upper = g_E - 1 + Rat(m) * (Rat(1) - g_F + gamma_F);
    return b;
}

Rat genus_exact(int m, const Rat& g_E, const Rat& g_F, const Rat& gamma_F,
                const Rat& delta_diff, const GenusExactFlags& flags) {
    if (!flags.ramification_locus_finite || !flags.alpha_invariant_zero || !flags.tame_in_E)
        throw std::invalid_argument(
            "exact genus formula needs finite ramification locus, vanishing alpha invariant, "
            "and tame ramification in E");
    if (m < 1) throw std::invalid_argument("extension degree m must be >= 1");
    return g_E - 1 - delta_diff / 2 + Rat(m) * (Rat(1) - g_F + gamma_F);
}

TowerSpec gs_tower_spec(const Int& q) {
    const auto [p, a] = prime_power_decompose(q);
    FieldPtr k2 = Field::make(p, 2 * a);
    const auto qq = static_cast<std::size_t>(q);
    // x_{n+1}^q x_n^{q-1} + x_{n+1} - x_n^q = 0
    std::vector<Polynomial> coeffs(qq + 1, Polynomial::zero(k2));
    coeffs[0] = -Polynomial::x(k2).shifted(qq - 1);  // -x^q
    coeffs[1] = Polynomial::one(k2);
    coeffs[qq] = Polynomial::x(k2).shifted(qq - 2);  // x^{q-1}
    return TowerSpec::make(k2, BivariatePoly::from_y_coeffs(k2, std::move(coeffs)));
}

CompositeReport gs_composite_report(const Int& q, std::vector<int> N, std::uint64_t seed,
                                    const EngineLimits& limits) {
    CompositeReport rep;
    rep.plan = build_phi(q, std::move(N), seed);
    const int m = rep.plan.m;

    rep.eisenstein = eisenstein_check(rep.plan);
    if (!rep.eisenstein.pass)
        throw DiscrepancyError("Eisenstein certificate failed for a coprime plan: " +
                               rep.eisenstein.violation);

    TowerSpec spec = gs_tower_spec(q);
    const Rat q2 = Rat(Int(rep.plan.k2->size()));

    // support: the nonzero constants, recovered by probing rather than assumed
    std::vector<BasePlace> support = detect_split_locus(spec, 1, 4, limits);
    if (Rat(Int(support.size())) != q2 - 1)
        throw DiscrepancyError("support size disagrees with q^2 - 1");
    for (const auto& place : support)
        if (place.infinite || place.alpha.is_zero())
            throw DiscrepancyError("unexpected support place " + place.id());

    // splitting profile at every support place: one factor per entry of N,
    // all unramified
    std::vector<std::pair<int, int>> expected;
    for (int f : rep.plan.residue_degrees) expected.emplace_back(f, 1);
    std::sort(expected.begin(), expected.end());
    for (const auto& place : support) {
        SplittingData split = kummer_split(rep.plan, place, limits);
        if (split.profile != expected)
            throw DiscrepancyError("support place " + place.id() +
                                   " does not realize the prescribed residue degrees");
        rep.support_splits.push_back(std::move(split));
    }

    // local data: every support place is rational with nu_1 = 1
    std::vector<SupportPlaceNu> local;
    for (std::size_t i = 0; i < support.size(); ++i)
        local.push_back(SupportPlaceNu{1, {{1, Rat(1)}}});
    rep.nu = nu_composite_general(local, rep.plan.residue_degrees);

    // genus: exact formula against the closed form
    rep.gamma_F = Rat(q) + 1;
    rep.g_E = Rat((Int(m) - 1) * (Int(q) * Int(q) - 1), 2);
    rep.delta_diff = Rat(m - 1);
    rep.bounds = genus_bounds(m, rep.g_E, Rat(0), rep.gamma_F);
    rep.gamma_E = genus_exact(m, rep.g_E, Rat(0), rep.gamma_F, rep.delta_diff,
                              GenusExactFlags{true, true, true});
    rep.gamma_E_closed_form =
        Rat(Int(m) * (Int(q) * q + 2 * q + 2) - Int(q) * q, 2);
    if (rep.gamma_E != rep.gamma_E_closed_form)
        throw DiscrepancyError("exact genus formula disagrees with its closed form");
    if (rep.gamma_E < rep.bounds.lower || rep.gamma_E > rep.bounds.upper)
        throw DiscrepancyError("composite tower genus escapes its bounds");

    // bound sandwich on the composite nu map
    std::map<int, Rat> nu_F{{1, q2 - 1}};
    std::map<int, Rat> split_lower;
    for (int f : rep.plan.residue_degrees) split_lower[f] += q2 - 1;
    BoundsCheck bc = nu_bounds_check(rep.nu.nu, nu_F, m, split_lower);
    if (!bc.pass) throw DiscrepancyError("composite nu bounds violated: " + bc.violation);

    rep.invariants = assemble_report(rep.plan.id(), Int(rep.plan.k2->size()),
                                     GammaProvenance::kFormula, rep.gamma_E, false, rep.nu.nu);

    // closed-form deficiency: 1 - beta * sum_{f in N} f / (q^f - 1)
    const Rat beta = (q2 - 1) / rep.gamma_E;
    Rat sum = 0;
    for (int f : rep.plan.residue_degrees) sum += Rat(Int(f), int_pow(q, static_cast<unsigned>(f)) - 1);
    rep.deficiency_closed_form = Rat(1) - beta * sum;
    if (!rep.invariants.dv || !rep.invariants.dv->exact ||
        rep.invariants.dv->deficiency_exact != rep.deficiency_closed_form)
        throw DiscrepancyError("deficiency closed form disagrees with the DV report");
    return rep;
}

}  // namespace towerlab
