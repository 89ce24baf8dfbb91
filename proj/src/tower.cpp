#include "towerlab/tower.hpp"

#include "towerlab/errors.hpp"
#include "towerlab/factor.hpp"
#include "towerlab/invariants.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace towerlab {

namespace {

long long checked_pow_ll(long long base, int exp) {
    long long acc = 1;
    for (int i = 0; i < exp; ++i) {
        if (acc > (std::int64_t(1) << 62) / base)
            throw CapExceededError("count overflow in power computation");
        acc *= base;
    }
    return acc;
}

std::uint64_t field_size_for(std::int64_t p, int degree, const EngineLimits& limits) {
    std::uint64_t size = 1;
    for (int i = 0; i < degree; ++i) {
        if (size > limits.max_field_size / static_cast<std::uint64_t>(p) + 1)
            throw CapExceededError("field size cap exceeded");
        size *= static_cast<std::uint64_t>(p);
    }
    if (size > limits.max_field_size) throw CapExceededError("field size cap exceeded");
    return size;
}

void checked_add(long long& dst, long long v) {
    dst += v;
    if (dst < 0 || dst > (std::int64_t(1) << 62))
        throw CapExceededError("chain count overflow");
}

/// Solutions of one tower step over a fixed ambient field, with the
/// degeneracy flag. Children are element codes; the ambient field size
/// itself encodes the infinite point.
struct Fiber {
    std::vector<std::uint64_t> children;
    bool degenerate{};
};

class FiberEngine {
public:
    FiberEngine(const TowerSpec& spec, FieldPtr ambient)
        : L_(std::move(ambient)),
          delta_(spec.step_degree()),
          rel_(spec.relation().mapped_into(L_)),
          lead_form_(spec.relation().x_leading_form().mapped_into(L_)) {}

    const FieldPtr& ambient() const { return L_; }
    std::uint64_t inf_code() const { return L_->size(); }

    const Fiber& fiber(std::uint64_t code) {
        auto it = cache_.find(code);
        if (it != cache_.end()) return it->second;
        return cache_.emplace(code, compute(code)).first->second;
    }

private:
    Fiber compute(std::uint64_t code) const {
        Fiber out;
        if (code == inf_code()) {
            // fiber over infinity from the chart-swapped relation: the
            // X-leading form gives the finite solutions, and the infinite
            // one appears when its Y-degree drops below the step degree
            const Polynomial& g = lead_form_;
            if (g.is_zero()) {
                out.degenerate = true;
                return out;
            }
            for (const auto& r : roots_in_field(g, L_)) out.children.push_back(r.code());
            const int drop = delta_ - g.degree();
            if (drop >= 1) out.children.push_back(inf_code());
            out.degenerate = !is_squarefree(g) || drop >= 2;
            return out;
        }
        Polynomial f = rel_.eval_at_x(L_->from_code(code));
        if (f.is_zero()) {
            out.degenerate = true;
            return out;
        }
        for (const auto& r : roots_in_field(f, L_)) out.children.push_back(r.code());
        out.degenerate = f.degree() < delta_ || !is_squarefree(f);
        return out;
    }

    FieldPtr L_;
    int delta_;
    BivariatePoly rel_;
    Polynomial lead_form_;
    std::unordered_map<std::uint64_t, Fiber> cache_;
};

/// Chain counting with memoization keyed by (point, remaining depth): the
/// subtree counts depend only on these. A chain is good iff every step it
/// took had a non-degenerate fiber.
class ChainCounter {
public:
    ChainCounter(const TowerSpec& spec, FieldPtr ambient) : eng_(spec, std::move(ambient)) {}

    FiberEngine& engine() { return eng_; }

    std::pair<long long, long long> count(std::uint64_t code, int depth) {
        if (depth == 0) return {1, 0};
        const std::uint64_t key = (code << 7) | static_cast<std::uint64_t>(depth);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        const Fiber fb = eng_.fiber(code);  // copy: recursion may rehash the cache
        long long good = 0, bad = 0;
        for (std::uint64_t child : fb.children) {
            auto [g, b] = count(child, depth - 1);
            if (fb.degenerate) {
                checked_add(bad, g);
                checked_add(bad, b);
            } else {
                checked_add(good, g);
                checked_add(bad, b);
            }
        }
        auto res = std::make_pair(good, bad);
        memo_.emplace(key, res);
        return res;
    }

    void materialize(std::uint64_t code, int depth, std::vector<std::uint64_t>& prefix,
                     std::vector<std::vector<std::uint64_t>>& out, std::uint64_t cap) {
        prefix.push_back(code);
        if (depth == 0) {
            if (out.size() >= cap) throw CapExceededError("chain materialization cap exceeded");
            out.push_back(prefix);
        } else {
            for (std::uint64_t child : eng_.fiber(code).children)
                materialize(child, depth - 1, prefix, out, cap);
        }
        prefix.pop_back();
    }

    bool chain_is_good(const std::vector<std::uint64_t>& chain) {
        for (std::size_t i = 0; i + 1 < chain.size(); ++i)
            if (eng_.fiber(chain[i]).degenerate) return false;
        return true;
    }

private:
    FiberEngine eng_;
    std::unordered_map<std::uint64_t, std::pair<long long, long long>> memo_;
};

}  // namespace

// ---------------------------------------------------------------------------
// TowerSpec

TowerSpec::TowerSpec(FieldPtr base, BivariatePoly rel, Polynomial disc)
    : base_(std::move(base)), rel_(std::move(rel)), disc_x_(std::move(disc)) {}

TowerSpec TowerSpec::make(FieldPtr base, BivariatePoly relation) {
    if (!relation.field()->same(*base))
        throw std::invalid_argument("relation is not over the base field");
    if (relation.deg_y() < 2)
        throw std::invalid_argument("tower step degree must be >= 2 (relation degree in Y)");
    if (relation.content_y().degree() > 0)
        throw std::invalid_argument("relation has a factor independent of Y");
    Polynomial disc = discriminant_y(relation);
    if (disc.is_zero())
        throw std::invalid_argument("relation is inseparable in Y (vanishing discriminant)");
    return TowerSpec(std::move(base), std::move(relation), std::move(disc));
}

TowerSpec TowerSpec::parse(const FieldPtr& base, const std::string& relation_text) {
    return make(base, BivariatePoly::parse(base, relation_text));
}

TowerDiagnostics validate_tower(const TowerSpec& spec, int certificate_search_bound) {
    TowerDiagnostics diag;
    diag.step_degree = spec.step_degree();
    diag.discriminant_x = spec.discriminant_x();
    diag.leading_y = spec.leading_y();
    diag.infinity_degenerate = infinity_is_bad(spec);

    // Specialization certificate: Phi(alpha, Y) irreducible of full degree
    // for some alpha forces irreducibility over F_q(X), since a Y-split of
    // the relation would split (or degree-drop) every specialization.
    const FieldPtr& base = spec.base_field();
    for (int m = 1; m <= certificate_search_bound && !diag.irreducible_certified; ++m) {
        std::uint64_t ext_size = 1;
        bool too_big = false;
        for (int i = 0; i < base->degree() * m; ++i) {
            ext_size *= static_cast<std::uint64_t>(base->characteristic());
            if (ext_size > 4096) {
                too_big = true;
                break;
            }
        }
        if (too_big) break;
        FieldPtr K = m == 1 ? base : Field::make(base->characteristic(), base->degree() * m);
        BivariatePoly relK = spec.relation().mapped_into(K);
        for (std::uint64_t code = 0; code < K->size(); ++code) {
            Polynomial f = relK.eval_at_x(K->from_code(code));
            if (f.degree() == spec.step_degree() && is_irreducible(f)) {
                diag.irreducible_certified = true;
                diag.certificate_extension_degree = m;
                break;
            }
        }
    }
    if (!diag.irreducible_certified)
        throw std::invalid_argument(
            "no irreducible fiber found: the relation is reducible in Y over F_q(X) "
            "(or needs a larger certificate search bound)");
    return diag;
}

std::vector<FieldElement> bad_x_values(const TowerSpec& spec, const FieldPtr& K) {
    Polynomial locus = spec.leading_y() * spec.discriminant_x();
    std::vector<FieldElement> out = roots_in_field(locus, K);
    std::sort(out.begin(), out.end(),
              [](const FieldElement& a, const FieldElement& b) { return a.code() < b.code(); });
    return out;
}

bool infinity_is_bad(const TowerSpec& spec) {
    const Polynomial g = spec.relation().x_leading_form();
    if (g.is_zero()) return true;
    return !is_squarefree(g) || spec.step_degree() - g.degree() >= 2;
}

// ---------------------------------------------------------------------------
// step_roots

std::string ProjectivePoint::str() const {
    return infinite ? "inf" : value.str();
}

StepRoots step_roots(const TowerSpec& spec, const ProjectivePoint& alpha,
                     const FieldPtr& in_field) {
    if (!alpha.infinite && !alpha.value.field()->same(*in_field))
        throw std::invalid_argument("step_roots: point does not live in the given field");
    FiberEngine eng(spec, in_field);
    const Fiber& fb = eng.fiber(alpha.infinite ? eng.inf_code() : alpha.value.code());
    StepRoots out;
    out.degenerate = fb.degenerate;
    for (std::uint64_t code : fb.children) {
        if (code == eng.inf_code())
            out.points.push_back(ProjectivePoint::infinity());
        else
            out.points.push_back(ProjectivePoint::at(in_field->from_code(code)));
    }
    return out;
}

// ---------------------------------------------------------------------------
// BasePlace

std::string BasePlace::id() const {
    if (infinite) return "inf";
    if (degree == 1) return "x=" + alpha.str();
    return min_poly.str("x");
}

BasePlace finite_place(const FieldPtr& base, const Polynomial& min_poly) {
    if (!min_poly.field()->same(*base))
        throw std::invalid_argument("place minimal polynomial is not over the base field");
    if (!min_poly.is_monic() || min_poly.degree() < 1)
        throw std::invalid_argument("place minimal polynomial must be monic of degree >= 1");
    if (!is_irreducible(min_poly))
        throw std::invalid_argument("place minimal polynomial is reducible");
    BasePlace p;
    p.infinite = false;
    p.min_poly = min_poly;
    p.degree = min_poly.degree();
    p.residue_field = p.degree == 1
                          ? base
                          : Field::make(base->characteristic(), base->degree() * p.degree);
    auto roots = roots_in_field(min_poly, p.residue_field);
    if (roots.empty()) throw std::logic_error("minimal polynomial has no root in residue field");
    p.alpha = roots.front();  // code-minimal root: the designated one
    return p;
}

BasePlace rational_place(const FieldPtr& base, const FieldElement& alpha) {
    if (!alpha.field()->same(*base))
        throw std::invalid_argument("rational place needs a base-field element");
    Polynomial min_poly = Polynomial::from_coeffs(base, {-alpha, base->one()});
    BasePlace p;
    p.infinite = false;
    p.min_poly = std::move(min_poly);
    p.degree = 1;
    p.residue_field = base;
    p.alpha = alpha;
    return p;
}

BasePlace infinite_place(const FieldPtr& base) {
    BasePlace p;
    p.infinite = true;
    p.min_poly = Polynomial::zero(base);
    p.degree = 1;
    p.residue_field = base;
    return p;
}

std::vector<BasePlace> base_places_of_degree(const FieldPtr& base, int d,
                                             const EngineLimits& limits) {
    if (d < 1) throw std::invalid_argument("place degree must be >= 1");
    std::vector<BasePlace> out;
    if (d == 1) {
        for (std::uint64_t code = 0; code < base->size(); ++code)
            out.push_back(rational_place(base, base->from_code(code)));
        out.push_back(infinite_place(base));
        return out;
    }
    std::uint64_t space = 1;
    for (int i = 0; i < d; ++i) {
        space *= base->size();
        if (space > limits.max_field_size)
            throw CapExceededError("place enumeration space exceeds the field-size cap");
    }
    for (std::uint64_t code = 0; code < space; ++code) {
        Polynomial cand = Polynomial::monic_from_code(base, d, code);
        if (is_irreducible(cand)) out.push_back(finite_place(base, cand));
    }
    return out;
}

// ---------------------------------------------------------------------------
// CensusSession

long long ChainOrbitCensus::places_of_degree(int D) const {
    if (D % place.degree != 0) return 0;
    auto it = place_counts.find(D);
    return it == place_counts.end() ? 0 : it->second;
}

long long ChainOrbitCensus::places_of_degree_total(int D) const {
    if (D % place.degree != 0) return 0;
    auto it = orbit_counts_total.find(D / place.degree);
    return it == orbit_counts_total.end() ? 0 : it->second;
}

struct CensusSession::Impl {
    TowerSpec spec;
    BasePlace plc;
    EngineLimits limits;
    std::map<int, std::unique_ptr<ChainCounter>> counters;  // t -> counter over F_{q^{td}}
    std::map<int, std::uint64_t> starts;

    Impl(const TowerSpec& s, BasePlace p, const EngineLimits& l)
        : spec(s), plc(std::move(p)), limits(l) {}

    ChainCounter& counter_for(int t) {
        auto it = counters.find(t);
        if (it != counters.end()) return *it->second;
        const FieldPtr& base = spec.base_field();
        const int ext_degree = base->degree() * plc.degree * t;
        field_size_for(base->characteristic(), ext_degree, limits);
        FieldPtr L = ext_degree == base->degree()
                         ? base
                         : Field::make(base->characteristic(), ext_degree);
        auto counter = std::make_unique<ChainCounter>(spec, L);
        std::uint64_t start;
        if (plc.infinite) {
            start = counter->engine().inf_code();
        } else {
            const Embedding& emb = Embedding::get(plc.residue_field, L);
            start = emb(plc.alpha).code();
        }
        starts[t] = start;
        return *counters.emplace(t, std::move(counter)).first->second;
    }

    std::pair<long long, long long> chain_counts(int level, int t) {
        ChainCounter& ctr = counter_for(t);
        return ctr.count(starts.at(t), level);
    }

    bool in_good_locus() {
        ChainCounter& ctr = counter_for(1);
        return !ctr.engine().fiber(starts.at(1)).degenerate;
    }

    void verify_by_materialization(ChainOrbitCensus& census, int level, int r) {
        ChainCounter& ctr = counter_for(r);
        const std::uint64_t total =
            static_cast<std::uint64_t>(census.good_chains + census.bad_chains);
        if (total > limits.max_materialized_chains) return;
        if (level > 0 && total * static_cast<std::uint64_t>(level + 1) >
                             limits.max_materialized_chains * 8)
            return;

        std::vector<std::vector<std::uint64_t>> chains;
        std::vector<std::uint64_t> prefix;
        ctr.materialize(starts.at(r), level, prefix, chains, limits.max_materialized_chains + 1);

        // Frobenius x -> x^{q^d} on point codes (infinity is fixed)
        const FieldPtr& L = ctr.engine().ambient();
        std::uint64_t frob_exp = 1;
        for (int i = 0; i < spec.base_field()->degree() * plc.degree; ++i)
            frob_exp *= static_cast<std::uint64_t>(spec.base_field()->characteristic());
        std::unordered_map<std::uint64_t, std::uint64_t> frob;
        auto phi = [&](std::uint64_t code) {
            if (code == ctr.engine().inf_code()) return code;
            auto it = frob.find(code);
            if (it != frob.end()) return it->second;
            std::uint64_t img = L->pow(L->from_code(code), frob_exp).code();
            frob.emplace(code, img);
            return img;
        };

        std::set<std::vector<std::uint64_t>> good_set;
        long long bad_seen = 0;
        for (auto& c : chains) {
            if (ctr.chain_is_good(c))
                good_set.insert(c);
            else
                ++bad_seen;
        }
        if (bad_seen != census.bad_chains ||
            static_cast<long long>(good_set.size()) != census.good_chains)
            throw DiscrepancyError("materialized chain counts disagree with memoized counts");

        std::map<int, long long> orbit_sizes;
        while (!good_set.empty()) {
            std::vector<std::uint64_t> start = *good_set.begin();
            std::vector<std::uint64_t> cur = start;
            int size = 0;
            do {
                if (good_set.erase(cur) != 1)
                    throw DiscrepancyError("Frobenius left the good chain set");
                for (auto& code : cur) code = phi(code);
                ++size;
            } while (cur != start);
            ++orbit_sizes[size];
        }
        for (const auto& [s, n] : orbit_sizes) {
            auto it = census.orbit_counts.find(s);
            if (it == census.orbit_counts.end() || it->second != n)
                throw DiscrepancyError("materialized Frobenius orbits disagree with Moebius counts");
        }
        for (const auto& [s, n] : census.orbit_counts) {
            if (n != 0 && orbit_sizes[s] != n)
                throw DiscrepancyError("materialized Frobenius orbits disagree with Moebius counts");
        }
        census.verified_by_materialization = true;
    }

    ChainOrbitCensus census(int level, int r) {
        if (level < 0 || level > limits.max_level)
            throw CapExceededError("level outside configured range");
        if (r < 1) throw std::invalid_argument("extension exponent must be >= 1");
        ChainOrbitCensus out;
        out.place = plc;
        out.level = level;
        out.r = r;
        for (int t = 1; t <= r; ++t) {
            if (r % t != 0) continue;
            auto [good, bad] = chain_counts(level, t);
            out.subfield_good[t] = good;
            out.subfield_total[t] = good + bad;
        }
        out.good_chains = out.subfield_good.at(r);
        out.bad_chains = out.subfield_total.at(r) - out.good_chains;
        for (int s = 1; s <= r; ++s) {
            if (r % s != 0) continue;
            long long acc = 0, acc_total = 0;
            for (int t = 1; t <= s; ++t) {
                if (s % t != 0) continue;
                acc += mobius(s / t) * out.subfield_good.at(t);
                acc_total += mobius(s / t) * out.subfield_total.at(t);
            }
            if (acc < 0 || acc % s != 0 || acc_total < 0 || acc_total % s != 0)
                throw DiscrepancyError("subfield chain counts are not Moebius-consistent");
            out.orbit_counts[s] = acc / s;
            out.orbit_counts_total[s] = acc_total / s;
            out.place_counts[s * plc.degree] = acc / s;
        }
        // cross-module identity: sum of s * (orbits of size s) recovers the
        // degree-one count of the top constant field extension
        std::map<int, Int> as_int;
        for (const auto& [s, n] : out.orbit_counts) as_int[s] = n;
        if (b1_from_br(as_int, r) != Int(out.good_chains))
            throw DiscrepancyError("orbit census fails the B_1 reconstruction identity");
        out.place_in_good_locus = in_good_locus();
        verify_by_materialization(out, level, r);
        return out;
    }
};

CensusSession::CensusSession(const TowerSpec& spec, BasePlace place, const EngineLimits& limits)
    : impl_(std::make_unique<Impl>(spec, std::move(place), limits)) {}

CensusSession::~CensusSession() = default;

ChainOrbitCensus CensusSession::census(int level, int r) { return impl_->census(level, r); }

std::pair<long long, long long> CensusSession::chain_counts(int level, int r) {
    return impl_->chain_counts(level, r);
}

const BasePlace& CensusSession::place() const { return impl_->plc; }

bool CensusSession::place_in_good_locus() { return impl_->in_good_locus(); }

ChainOrbitCensus orbit_census(const TowerSpec& spec, const BasePlace& place, int level, int r,
                              const EngineLimits& limits) {
    CensusSession session(spec, place, limits);
    return session.census(level, r);
}

std::pair<long long, long long> enumerate_chains(const TowerSpec& spec, const BasePlace& place,
                                                 int level, int r, const EngineLimits& limits) {
    CensusSession session(spec, place, limits);
    return session.chain_counts(level, r);
}

NuConvergents nu_convergents(const TowerSpec& spec, const BasePlace& place, int n_max, int r,
                             const EngineLimits& limits) {
    if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
    NuConvergents out;
    CensusSession session(spec, place, limits);
    out.good_locus = session.place_in_good_locus();
    if (r % place.degree != 0) {
        // place degree does not divide r: no degree-r places above P at all
        out.convergents.assign(n_max + 1, Rat(0));
        return out;
    }
    const int rr = r / place.degree;
    const Int delta = spec.step_degree();
    for (int n = 0; n <= n_max; ++n) {
        ChainOrbitCensus c = session.census(n, rr);
        // ramified/degenerate locus: orbit counts over all chains, good and
        // bad together; heuristic data, flagged by good_locus = false
        const long long count =
            out.good_locus ? c.places_of_degree(r) : c.places_of_degree_total(r);
        out.convergents.emplace_back(Int(count), int_pow(delta, static_cast<unsigned>(n)));
    }
    return out;
}

std::vector<BasePlace> detect_split_locus(const TowerSpec& spec, int d, int n_probe,
                                          const EngineLimits& limits) {
    if (n_probe < 0 || n_probe > limits.max_level)
        throw CapExceededError("probe depth outside configured range");
    const long long expected = checked_pow_ll(spec.step_degree(), n_probe);
    std::vector<BasePlace> out;
    for (const BasePlace& place : base_places_of_degree(spec.base_field(), d, limits)) {
        CensusSession session(spec, place, limits);
        auto [good, bad] = session.chain_counts(n_probe, 1);
        (void)bad;
        if (good == expected) out.push_back(place);
    }
    return out;
}

}  // namespace towerlab
