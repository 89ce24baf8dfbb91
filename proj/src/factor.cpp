#include "towerlab/factor.hpp"

#include "towerlab/errors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace towerlab {

namespace {

// splitmix64: deterministic stream for the equal-degree stage.
struct SplitMix {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

Polynomial random_poly_below(const FieldPtr& K, int deg_bound, SplitMix& rng) {
    std::vector<FieldElement> c;
    c.reserve(deg_bound);
    for (int i = 0; i < deg_bound; ++i) c.push_back(K->from_code(rng.next() % K->size()));
    return Polynomial::from_coeffs(K, std::move(c));
}

// x^{q^e} mod f by iterated q-th powering (q = field size fits u64).
Polynomial frobenius_power(const Polynomial& f, int e, Polynomial start) {
    const std::uint64_t q = f.field()->size();
    Polynomial acc = std::move(start);
    for (int i = 0; i < e; ++i) acc = powmod(acc, q, f);
    return acc;
}

// Trace map a + a^2 + a^4 + ... + a^{2^(n-1)} mod f; the char-2 splitting
// element (n = extension degree over F_2 of the residue ring's root field).
Polynomial trace_map_char2(const Polynomial& a, int n, const Polynomial& f) {
    Polynomial acc = a % f;
    Polynomial term = acc;
    for (int i = 1; i < n; ++i) {
        term = (term * term) % f;
        acc = (acc + term) % f;
    }
    return acc;
}

// Equal-degree splitting of a monic squarefree product of irreducibles all
// of degree d (Cantor-Zassenhaus; trace maps in characteristic 2).
void equal_degree_split(const Polynomial& f, int d, SplitMix& rng,
                        std::vector<Polynomial>& out) {
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    const FieldPtr& K = f.field();
    const std::int64_t p = K->characteristic();
    Polynomial g = Polynomial::zero(K);
    for (int attempt = 0; attempt < 256 && g.degree() < 1; ++attempt) {
        Polynomial a = random_poly_below(K, f.degree(), rng);
        if (a.degree() < 1) continue;
        Polynomial h = gcd(f, a);
        if (h.degree() >= 1 && h.degree() < f.degree()) {
            g = h;
            break;
        }
        if (p == 2) {
            const int n = K->degree() * d;  // roots live in F_{2^n}
            Polynomial t = trace_map_char2(a, n, f);
            h = gcd(f, t);
        } else {
            Int e = (int_pow(Int(K->size()), static_cast<unsigned>(d)) - 1) / 2;
            Polynomial b = powmod_big(a, e, f);
            h = gcd(f, b - Polynomial::one(K));
        }
        if (h.degree() >= 1 && h.degree() < f.degree()) g = h;
    }
    if (g.degree() < 1)
        throw std::logic_error("equal-degree splitting failed to find a splitter");
    equal_degree_split(g.monic(), d, rng, out);
    equal_degree_split(f.div_exact(g).monic(), d, rng, out);
}

// Distinct-degree stage: returns (product of irreducibles of degree d, d).
std::vector<std::pair<Polynomial, int>> distinct_degree(const Polynomial& f) {
    std::vector<std::pair<Polynomial, int>> out;
    const FieldPtr& K = f.field();
    Polynomial rest = f.monic();
    Polynomial h = Polynomial::x(K) % rest;
    int d = 0;
    while (rest.degree() > 0) {
        ++d;
        if (2 * d > rest.degree()) {
            out.emplace_back(rest, rest.degree());
            break;
        }
        h = powmod(h, K->size(), rest);
        Polynomial g = gcd(rest, h - Polynomial::x(K));
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            rest = rest.div_exact(g);
            h = h % rest;
        }
    }
    return out;
}

}  // namespace

Polynomial Factorization::expand() const {
    Polynomial acc = Polynomial::constant(unit);
    for (const auto& [poly, mult] : factors)
        for (int i = 0; i < mult; ++i) acc = acc * poly;
    return acc;
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& f) {
    if (f.is_zero()) throw std::domain_error("squarefree decomposition of zero");
    std::vector<std::pair<Polynomial, int>> out;
    const std::int64_t p = f.field()->characteristic();

    // Classical finite-field squarefree decomposition (Yun adapted to
    // characteristic p with p-th power descent).
    auto accumulate = [&](const Polynomial& part, int mult) {
        if (part.degree() < 1) return;
        for (auto& [g, m] : out) {
            if (g == part) {
                m += mult;  // never triggered by construction, kept for safety
                return;
            }
        }
        out.emplace_back(part, mult);
    };

    std::vector<std::pair<Polynomial, int>> stack{{f.monic(), 1}};
    while (!stack.empty()) {
        auto [g, scale] = stack.back();
        stack.pop_back();
        if (g.degree() < 1) continue;
        Polynomial gp = g.derivative();
        if (gp.is_zero()) {
            // g = h(x^p)
            stack.emplace_back(g.pth_root(), scale * static_cast<int>(p));
            continue;
        }
        Polynomial c = gcd(g, gp);   // carries repeated parts
        Polynomial w = g.div_exact(c);  // squarefree product of factors with mult not div by p
        int i = 1;
        while (w.degree() > 0) {
            Polynomial y = gcd(w, c);
            Polynomial part = w.div_exact(y);  // factors of multiplicity exactly i
            accumulate(part, scale * i);
            w = y;
            if (!w.is_zero() && w.degree() >= 0) c = c.div_exact(w);
            ++i;
            if (i > f.degree() + 1) throw std::logic_error("squarefree decomposition diverged");
        }
        if (c.degree() > 0) stack.emplace_back(c, scale);  // remaining p-th-power part
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return canonical_less(a.first, b.first);
    });
    return out;
}

bool is_squarefree(const Polynomial& f) {
    if (f.is_zero()) return false;
    if (f.degree() == 0) return true;
    Polynomial d = f.derivative();
    if (d.is_zero()) return false;  // p-th power
    return gcd(f, d).degree() == 0;
}

bool is_irreducible(const Polynomial& f) {
    const int d = f.degree();
    if (d <= 0) return false;
    if (d == 1) return true;
    const FieldPtr& K = f.field();
    Polynomial fm = f.monic();
    const Polynomial x = Polynomial::x(K);
    Polynomial xqd = frobenius_power(fm, d, x % fm);
    if (xqd != x % fm) return false;
    int rem = d;
    for (int t = 2; t <= rem; ++t) {
        if (rem % t != 0) continue;
        while (rem % t == 0) rem /= t;
        Polynomial xe = frobenius_power(fm, d / t, x % fm);
        if (gcd(fm, xe - x).degree() != 0) return false;
    }
    return true;
}

Factorization factor(const Polynomial& f, std::uint64_t seed) {
    if (f.is_zero()) throw std::domain_error("factorization of the zero polynomial");
    Factorization out;
    out.unit = f.is_zero() ? f.field()->zero() : f.leading();
    if (f.degree() == 0) return out;

    SplitMix rng{seed ^ 0x5bf03635ULL};
    for (const auto& [sqfree, mult] : squarefree_decomposition(f)) {
        for (const auto& [prod, d] : distinct_degree(sqfree)) {
            std::vector<Polynomial> irreducibles;
            equal_degree_split(prod.monic(), d, rng, irreducibles);
            for (auto& g : irreducibles) out.factors.emplace_back(std::move(g), mult);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        return canonical_less(a.first, b.first);
    });
    return out;
}

std::vector<std::pair<FieldElement, int>> roots_with_multiplicity(const Polynomial& f,
                                                                  const FieldPtr& K) {
    if (f.is_zero()) throw std::domain_error("roots of the zero polynomial");
    Polynomial g = f.mapped_into(K);
    std::vector<std::pair<FieldElement, int>> out;
    if (g.degree() < 1) return out;

    // Linear factors divide gcd(x^Q - x, g); peel them via factor() on the
    // degree-one part, then read multiplicities by division.
    Polynomial xq = powmod(Polynomial::x(K), K->size(), g);
    Polynomial lin = gcd(g, xq - Polynomial::x(K));
    if (lin.degree() < 1) return out;
    Factorization lf = factor(lin);
    for (const auto& [factor_poly, mult] : lf.factors) {
        (void)mult;  // lin is squarefree
        if (factor_poly.degree() != 1) continue;
        FieldElement root = -factor_poly.coeff(0);
        int m = 0;
        Polynomial rest = g;
        while (true) {
            auto [q, r] = rest.divmod(factor_poly);
            if (!r.is_zero()) break;
            ++m;
            rest = q;
        }
        out.emplace_back(root, m);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first.code() < b.first.code(); });
    return out;
}

std::vector<FieldElement> roots_in_field(const Polynomial& f, const FieldPtr& K) {
    std::vector<FieldElement> out;
    for (auto& [root, mult] : roots_with_multiplicity(f, K)) {
        (void)mult;
        out.push_back(root);
    }
    return out;
}

Int count_irreducibles(const Int& q, int d) {
    if (q < 2 || d < 1) throw std::invalid_argument("count_irreducibles needs q >= 2, d >= 1");
    // mu via trial factorization of d/e's
    auto mobius = [](int n) {
        int m = 1;
        for (int t = 2; t * t <= n; ++t) {
            if (n % t) continue;
            n /= t;
            if (n % t == 0) return 0;
            m = -m;
        }
        if (n > 1) m = -m;
        return m;
    };
    Int total = 0;
    for (int e = 1; e <= d; ++e) {
        if (d % e) continue;
        const int mu = mobius(d / e);
        if (mu == 0) continue;
        total += Int(mu) * int_pow(q, static_cast<unsigned>(e));
    }
    if (total % d != 0) throw std::logic_error("irreducible count not divisible by degree");
    return total / d;
}

Polynomial irreducible_of_degree(const FieldPtr& K, int deg, std::uint64_t seed) {
    if (deg < 1) throw std::invalid_argument("irreducible degree must be >= 1");
    const Int count = count_irreducibles(Int(K->size()), deg);
    const Int space = int_pow(Int(K->size()), static_cast<unsigned>(deg));
    if (space > Int(1) << 22)
        throw CapExceededError("irreducible enumeration space beyond desk scale");
    const std::uint64_t target = static_cast<std::uint64_t>(Int(seed) % count);
    std::uint64_t found = 0;
    const std::uint64_t bound = static_cast<std::uint64_t>(space);
    for (std::uint64_t code = 0; code < bound; ++code) {
        Polynomial cand = Polynomial::monic_from_code(K, deg, code);
        if (!is_irreducible(cand)) continue;
        if (found == target) return cand;
        ++found;
    }
    throw std::logic_error("irreducible enumeration exhausted (unreachable)");
}

}  // namespace towerlab
