#include "doctest.h"

#include "towerlab/factor.hpp"

#include <algorithm>
#include <cstdint>

using namespace towerlab;

namespace {

std::uint64_t mix(std::uint64_t& s) {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Test oracle, independent of the library pipeline: a monic polynomial of
// degree >= 1 is irreducible iff no monic polynomial of degree in
// [1, deg/2] divides it. Enumeration is exhaustive over coefficient codes.
bool oracle_irreducible(const Polynomial& f) {
    const auto& K = f.field();
    const int d = f.degree();
    if (d < 1) return false;
    for (int e = 1; 2 * e <= d; ++e) {
        std::uint64_t bound = 1;
        for (int i = 0; i < e; ++i) bound *= K->size();
        for (std::uint64_t code = 0; code < bound; ++code) {
            Polynomial cand = Polynomial::monic_from_code(K, e, code);
            if ((f % cand).is_zero()) return false;
        }
    }
    return true;
}

Polynomial random_poly(const FieldPtr& K, int max_deg, std::uint64_t& s) {
    int deg = static_cast<int>(mix(s) % (max_deg + 1));
    std::vector<FieldElement> c;
    for (int i = 0; i <= deg; ++i) c.push_back(K->from_code(mix(s) % K->size()));
    return Polynomial::from_coeffs(K, std::move(c));
}

}  // namespace

TEST_CASE("factor: spec examples") {
    auto f2 = Field::make(2, 1);
    auto f4 = Field::make(2, 2);

    SUBCASE("x^2+x+1 over F_2 is irreducible") {
        Polynomial f = Polynomial::from_int_coeffs(f2, {1, 1, 1});
        Factorization fac = factor(f);
        REQUIRE(fac.factors.size() == 1);
        CHECK(fac.factors[0].first == f);
        CHECK(fac.factors[0].second == 1);
        CHECK(is_irreducible(f));
        CHECK(oracle_irreducible(f));
    }

    SUBCASE("x^4+x over F_4 splits into four linear factors") {
        Polynomial f = Polynomial::from_int_coeffs(f4, {0, 1, 0, 0, 1});
        Factorization fac = factor(f);
        REQUIRE(fac.factors.size() == 4);
        for (const auto& [g, m] : fac.factors) {
            CHECK(g.degree() == 1);
            CHECK(m == 1);
        }
        CHECK(fac.expand() == f);
        // roots are exactly all of F_4
        auto roots = roots_in_field(f, f4);
        REQUIRE(roots.size() == 4);
        for (std::uint64_t code = 0; code < 4; ++code) CHECK(roots[code].code() == code);
    }

    SUBCASE("(x^2+x+1)^2 over F_2 keeps multiplicity") {
        Polynomial g = Polynomial::from_int_coeffs(f2, {1, 1, 1});
        Polynomial f = g * g;
        Factorization fac = factor(f);
        REQUIRE(fac.factors.size() == 1);
        CHECK(fac.factors[0].first == g);
        CHECK(fac.factors[0].second == 2);
        CHECK(fac.expand() == f);
    }

    SUBCASE("zero polynomial rejected") {
        CHECK_THROWS_AS(factor(Polynomial::zero(f2)), std::domain_error);
    }
}

TEST_CASE("roots_in_field: spec examples") {
    auto f2 = Field::make(2, 1);
    auto f4 = Field::make(2, 2);

    Polynomial f = Polynomial::from_int_coeffs(f2, {1, 1, 1});  // y^2+y+1
    auto roots4 = roots_in_field(f, f4);
    REQUIRE(roots4.size() == 2);
    FieldElement w = f4->generator();
    CHECK(roots4[0] == w);
    CHECK(roots4[1] == w + f4->one());

    CHECK(roots_in_field(f, f2).empty());

    // y - c for every c in F_4
    for (std::uint64_t code = 0; code < 4; ++code) {
        FieldElement c = f4->from_code(code);
        Polynomial lin = Polynomial::from_coeffs(f4, {-c, f4->one()});
        auto r = roots_in_field(lin, f4);
        REQUIRE(r.size() == 1);
        CHECK(r[0] == c);
    }

    // multiplicities on request
    FieldElement c = f4->generator();
    Polynomial lin = Polynomial::from_coeffs(f4, {-c, f4->one()});
    Polynomial cube = lin * lin * lin;
    auto rm = roots_with_multiplicity(cube, f4);
    REQUIRE(rm.size() == 1);
    CHECK(rm[0].first == c);
    CHECK(rm[0].second == 3);

    // no embedding F_4 -> F_8: rejected
    Polynomial over4 = Polynomial::from_coeffs(f4, {c, f4->one()});
    CHECK_THROWS_AS(roots_in_field(over4, Field::make(2, 3)), std::invalid_argument);
}

TEST_CASE("irreducible_of_degree: canonical enumeration") {
    auto f2 = Field::make(2, 1);
    auto f4 = Field::make(2, 2);

    Polynomial g = irreducible_of_degree(f2, 2, 0);
    CHECK(g == Polynomial::from_int_coeffs(f2, {1, 1, 1}));

    Polynomial lin = irreducible_of_degree(f4, 1, 3);
    CHECK(lin.degree() == 1);
    CHECK(lin.is_monic());

    // T^2 + T + w is the first irreducible quadratic over F_4
    Polynomial q0 = irreducible_of_degree(f4, 2, 0);
    FieldElement w = f4->generator();
    CHECK(q0 == Polynomial::from_coeffs(f4, {w, f4->one(), f4->one()}));
    CHECK(roots_in_field(q0, f4).empty());

    // distinct seeds below the count give distinct polynomials
    Polynomial q1 = irreducible_of_degree(f4, 2, 1);
    CHECK(q0 != q1);
    CHECK(is_irreducible(q1));
}

TEST_CASE("count_irreducibles: spec examples and scan census") {
    CHECK(count_irreducibles(2, 2) == 1);
    CHECK(count_irreducibles(2, 3) == 2);
    CHECK(count_irreducibles(5, 1) == 5);
    CHECK(count_irreducibles(4, 1) == 4);

    // census against exhaustive scan for q^d <= 4096 (subset here; the
    // acceptance suite covers the full range)
    struct Case { std::int64_t p; int k; int d; };
    for (auto [p, k, d] : {Case{2, 1, 4}, Case{2, 2, 3}, Case{3, 1, 5}, Case{2, 3, 2}}) {
        auto K = Field::make(p, k);
        std::uint64_t bound = 1;
        for (int i = 0; i < d; ++i) bound *= K->size();
        Int scan = 0;
        for (std::uint64_t code = 0; code < bound; ++code)
            if (is_irreducible(Polynomial::monic_from_code(K, d, code))) ++scan;
        CHECK(scan == count_irreducibles(Int(K->size()), d));
    }
}

TEST_CASE("factor round-trip on seeded random polynomials") {
    for (auto [p, k] : {std::pair<int, int>{2, 1}, {3, 1}, {2, 2}}) {
        auto K = Field::make(p, k);
        std::uint64_t s = 0x5eed0000 + K->size();
        for (int trial = 0; trial < 200; ++trial) {
            Polynomial f = random_poly(K, 8, s);
            if (f.is_zero()) continue;
            Factorization fac = factor(f);
            CHECK(fac.expand() == f);
            for (const auto& [g, m] : fac.factors) {
                CHECK(m >= 1);
                CHECK(g.is_monic());
                CHECK(is_irreducible(g));
                if (g.degree() <= 6) CHECK(oracle_irreducible(g));
            }
            // factors pairwise distinct
            for (std::size_t i = 0; i + 1 < fac.factors.size(); ++i)
                CHECK(canonical_less(fac.factors[i].first, fac.factors[i + 1].first));
        }
    }
}

TEST_CASE("roots evaluate to zero and respect the degree bound") {
    auto f9 = Field::make(3, 2, {1, 0, 1});
    std::uint64_t s = 31337;
    for (int trial = 0; trial < 100; ++trial) {
        Polynomial f = random_poly(f9, 6, s);
        if (f.is_zero()) continue;
        auto roots = roots_in_field(f, f9);
        CHECK(static_cast<int>(roots.size()) <= std::max(f.degree(), 0));
        for (const auto& r : roots) CHECK(f.eval(r).is_zero());
        // cross-check against exhaustive evaluation
        std::size_t count = 0;
        for (std::uint64_t code = 0; code < 9; ++code)
            if (f.eval(f9->from_code(code)).is_zero()) ++count;
        CHECK(count == roots.size());
    }
}

TEST_CASE("squarefree decomposition handles p-th powers") {
    auto f2 = Field::make(2, 1);
    Polynomial g = Polynomial::from_int_coeffs(f2, {1, 1, 1});
    Polynomial h = Polynomial::from_int_coeffs(f2, {0, 1});  // x
    Polynomial f = g * g * h * h * h;                        // g^2 x^3, derivative-zero parts
    auto sf = squarefree_decomposition(f);
    Polynomial back = Polynomial::one(f2);
    for (const auto& [part, mult] : sf) {
        CHECK(is_squarefree(part));
        for (int i = 0; i < mult; ++i) back = back * part;
    }
    CHECK(back == f);

    // extension coefficients force the coefficient p-th-root path:
    // (x^2 + w x + w)^2 has zero derivative over F_4
    auto f4 = Field::make(2, 2);
    FieldElement w = f4->generator();
    Polynomial k = Polynomial::from_coeffs(f4, {w, w, f4->one()});
    Polynomial k2 = k * k;
    CHECK(k2.derivative().is_zero());
    Factorization fac = factor(k2);
    REQUIRE(fac.factors.size() == 1);
    CHECK(fac.factors[0].first == k);
    CHECK(fac.factors[0].second == 2);

    // cube over F_9 exercises the odd-characteristic descent
    auto f9 = Field::make(3, 2);
    Polynomial m = Polynomial::from_coeffs(f9, {f9->generator(), f9->one()});
    Polynomial m3 = m * m * m;
    Factorization fac3 = factor(m3);
    REQUIRE(fac3.factors.size() == 1);
    CHECK(fac3.factors[0].second == 3);
}

TEST_CASE("factor output is canonical: golden string") {
    auto f2 = Field::make(2, 1);
    // x^7 + x = x (x+1)^2 (x^2+x+1)^2 over F_2... compute honestly instead:
    Polynomial f = Polynomial::from_int_coeffs(f2, {0, 1, 0, 0, 0, 0, 0, 1});  // x^7 + x
    Factorization fac = factor(f);
    std::string rendered;
    for (const auto& [g, m] : fac.factors) {
        rendered += "(" + g.str() + ")^" + std::to_string(m) + " ";
    }
    CHECK(rendered == "(x)^1 (x + 1)^2 (x^2 + x + 1)^2 ");
    CHECK(fac.expand() == f);
}

TEST_CASE("roots over a large extension field take the powmod path") {
    auto f729 = Field::make(3, 6);  // F_729
    FieldElement w = f729->generator();
    FieldElement a = w.pow(17), b = w.pow(401);
    Polynomial f = Polynomial::from_coeffs(f729, {a * b, a + b, f729->one()});  // (x-(-a))(x-(-b))
    auto roots = roots_with_multiplicity(f, f729);
    REQUIRE(roots.size() == 2);
    for (const auto& [root, mult] : roots) {
        CHECK(mult == 1);
        CHECK(f.eval(root).is_zero());
    }
}
