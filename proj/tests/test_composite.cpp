#include "doctest.h"

#include "towerlab/composite.hpp"
#include "towerlab/errors.hpp"
#include "towerlab/factor.hpp"

using namespace towerlab;

TEST_CASE("build_phi: worked plans") {
    SUBCASE("q=2, N={1,2}: phi = T^3 + T^2 + w T + x^4 + x") {
        CompositePlan plan = build_phi(2, {1, 2}, 0);
        CHECK(plan.m == 3);
        CHECK(plan.coprime);
        REQUIRE(plan.g.size() == 2);
        CHECK(plan.g[0].str("T") == "T");
        FieldElement w = plan.k2->generator();
        CHECK(plan.g[1] == Polynomial::from_coeffs(plan.k2, {w, plan.k2->one(), plan.k2->one()}));
        CHECK(plan.phi.deg_y() == 3);
        CHECK(plan.phi.y_coeff(3).is_one());
        CHECK(plan.phi.y_coeff(2).is_one());
        CHECK(plan.phi.y_coeff(1) == Polynomial::constant(w));
        // char 2: -x^4 + x = x^4 + x
        CHECK(plan.phi.y_coeff(0) == parse_polynomial(plan.k2, "x^4 + x"));
    }
    SUBCASE("q=2, N={1}: phi = T + x^4 + x") {
        CompositePlan plan = build_phi(2, {1}, 0);
        CHECK(plan.m == 1);
        CHECK(plan.phi.deg_y() == 1);
        CHECK(plan.phi.y_coeff(0) == parse_polynomial(plan.k2, "x^4 + x"));
    }
    SUBCASE("q=3, N={1,3}: m=4, T-degree 4, constant coefficient -x^9 + x") {
        CompositePlan plan = build_phi(3, {1, 3}, 0);
        CHECK(plan.m == 4);
        CHECK(plan.phi.deg_y() == 4);
        CHECK(plan.phi.y_coeff(0) == parse_polynomial(plan.k2, "2*x^9 + x"));
        CHECK(is_irreducible(plan.g[1]));
        CHECK(plan.g[1].degree() == 3);
    }
    SUBCASE("gcd(m, q) != 1 rejected") {
        CHECK_THROWS_AS(build_phi(2, {1, 1}, 0), std::invalid_argument);
        CHECK_THROWS_AS(build_phi(3, {1, 2}, 0), std::invalid_argument);
    }
    SUBCASE("irreducible supply exhausted") {
        // only one monic irreducible quadratic over F_2... but over F_4 there
        // are six; ask for seven quadratics (m = 14, coprime to 3 fails ->
        // use q=3 to keep gcd(m,q)=1: m=14, gcd(14,3)=1, over F_9 there are
        // 36 quadratics, so exhaust linears instead: ten linears over F_9)
        std::vector<int> ten_ones(10, 1);
        CHECK_THROWS_AS(build_phi(3, ten_ones, 0), std::invalid_argument);
    }
}

TEST_CASE("eisenstein_check") {
    SUBCASE("q=2, N={1,2}: pass with v(b_0) = -4") {
        CompositePlan plan = build_phi(2, {1, 2}, 0);
        EisensteinCertificate cert = eisenstein_check(plan);
        CHECK(cert.pass);
        CHECK(cert.v_b0 == -4);
        CHECK(cert.gcd_m_v0 == 1);
        CHECK(cert.irreducible_over_F);
        CHECK(cert.totally_ramified_at_infinity);
    }
    SUBCASE("q=2, N={1,1}: gcd(2,4)=2 fails") {
        auto k2 = Field::make(2, 2);
        Polynomial shift = parse_polynomial(k2, "x^4 + x");
        CompositePlan plan = build_phi_custom(2, {1, 1}, 0, shift, /*require_coprime=*/false);
        REQUIRE(plan.g.size() == 2);
        CHECK(plan.g[0] != plan.g[1]);  // pairwise distinct even with repeats
        EisensteinCertificate cert = eisenstein_check(plan);
        CHECK(!cert.pass);
        CHECK(cert.gcd_m_v0 == 2);
    }
    SUBCASE("zero shift: no pole, fails") {
        auto k2 = Field::make(2, 2);
        CompositePlan plan =
            build_phi_custom(2, {1, 2}, 0, Polynomial::zero(k2), /*require_coprime=*/true);
        EisensteinCertificate cert = eisenstein_check(plan);
        CHECK(!cert.pass);
        CHECK(cert.violation.find("v(b_0)") != std::string::npos);
    }
}

TEST_CASE("kummer_split") {
    CompositePlan plan = build_phi(2, {1, 2}, 0);
    const FieldPtr& k2 = plan.k2;

    SUBCASE("support place x = w: one linear, one quadratic, unramified") {
        SplittingData split = kummer_split(plan, rational_place(k2, k2->generator()));
        CHECK(split.profile == std::vector<std::pair<int, int>>{{1, 1}, {2, 1}});
        CHECK(split.unramified());
        CHECK(split.sum_ef() == 3);
    }
    SUBCASE("x = 0 is unramified with the same profile") {
        SplittingData split = kummer_split(plan, rational_place(k2, k2->zero()));
        CHECK(split.profile == std::vector<std::pair<int, int>>{{1, 1}, {2, 1}});
        CHECK(split.unramified());
    }
    SUBCASE("degree-2 places satisfy the fundamental equality") {
        for (const BasePlace& place : base_places_of_degree(k2, 2)) {
            SplittingData split = kummer_split(plan, place);
            CHECK(split.sum_ef() == 3);
        }
    }
    SUBCASE("infinite place: totally ramified via Eisenstein") {
        SplittingData split = kummer_split(plan, infinite_place(k2));
        CHECK(split.via_eisenstein);
        CHECK(split.profile == std::vector<std::pair<int, int>>{{1, 3}});
        CHECK(split.sum_ef() == 3);
        CHECK(!split.unramified());
    }
}

TEST_CASE("fundamental equality at all places of degree <= 2, q=3 plan") {
    CompositePlan plan = build_phi(3, {1, 3}, 0);
    for (int d = 1; d <= 2; ++d) {
        for (const BasePlace& place : base_places_of_degree(plan.k2, d)) {
            SplittingData split = kummer_split(plan, place);
            CHECK(split.sum_ef() == 4);
        }
    }
}

TEST_CASE("nu_composite_general") {
    SUBCASE("three rational split places, N={1,2}") {
        std::vector<SupportPlaceNu> support(3, SupportPlaceNu{1, {{1, Rat(1)}}});
        CompositeNu nu = nu_composite_general(support, {1, 2});
        CHECK(nu.pure_input);
        CHECK(nu.nu.at(1) == 3);
        CHECK(nu.nu.at(2) == 3);
        CHECK(nu.positive_params == std::vector<int>{1, 2});
    }
    SUBCASE("degree-2 local data on a rational place") {
        std::vector<SupportPlaceNu> support{{1, {{2, Rat(1)}}}};
        CompositeNu nu = nu_composite_general(support, {2});
        // s = lcm(2*1, 2) = 2; contribution (2/2)*2*1 = 2
        CHECK(nu.nu.at(2) == 2);
        CHECK(!nu.pure_input);
    }
    SUBCASE("empty support") {
        CompositeNu nu = nu_composite_general({}, {1, 2});
        CHECK(nu.nu.empty());
        CHECK(nu.positive_params.empty());
    }
}

TEST_CASE("nu_bounds_check") {
    std::map<int, Rat> nu_F{{1, Rat(3)}};
    SUBCASE("worked example data passes") {
        std::map<int, Rat> nu_E{{1, Rat(3)}, {2, Rat(3)}};
        std::map<int, Rat> lower{{1, Rat(3)}, {2, Rat(3)}};
        BoundsCheck bc = nu_bounds_check(nu_E, nu_F, 3, lower);
        CHECK(bc.pass);
    }
    SUBCASE("inflated nu fails the upper bound") {
        std::map<int, Rat> nu_E{{1, Rat(10)}};
        BoundsCheck bc = nu_bounds_check(nu_E, nu_F, 3);
        CHECK(!bc.pass);
    }
    SUBCASE("missing split places fail the lower bound") {
        std::map<int, Rat> nu_E{{1, Rat(3)}};
        std::map<int, Rat> lower{{2, Rat(3)}};
        BoundsCheck bc = nu_bounds_check(nu_E, nu_F, 3, lower);
        CHECK(!bc.pass);
    }
}

TEST_CASE("genus bounds and exact formula") {
    SUBCASE("worked composite: gamma(E) = 13 inside [9, 14]") {
        GenusBounds b = genus_bounds(3, Rat(3), Rat(0), Rat(3));
        CHECK(b.lower == 9);
        CHECK(b.upper == 14);
        Rat gamma = genus_exact(3, Rat(3), Rat(0), Rat(3), Rat(2), GenusExactFlags{true, true, true});
        CHECK(gamma == 13);
        CHECK(b.lower <= gamma);
        CHECK(gamma <= b.upper);
    }
    SUBCASE("m=1 is the trivial extension") {
        Rat gamma = genus_exact(1, Rat(0), Rat(0), Rat(3), Rat(0), GenusExactFlags{true, true, true});
        CHECK(gamma == 3);
    }
    SUBCASE("exact mode requires the hypothesis flags") {
        CHECK_THROWS_AS(genus_exact(3, Rat(3), Rat(0), Rat(3), Rat(2),
                                    GenusExactFlags{true, false, true}),
                        std::invalid_argument);
    }
}

TEST_CASE("composite_level_census: formula equals enumeration") {
    CompositePlan plan = build_phi(2, {1, 2}, 0);
    TowerSpec spec = gs_tower_spec(2);
    BasePlace pw = rational_place(plan.k2, plan.k2->generator());

    // the degree-1 factor T tracks each of the 2^3 chains
    CHECK(composite_level_census(spec, plan, pw, 3, 1) == 8);
    // each split chain carries exactly one degree-2 place
    CHECK(composite_level_census(spec, plan, pw, 3, 2) == 8);
    // level zero is E itself: the kummer profile
    CHECK(composite_level_census(spec, plan, pw, 0, 1) == 1);
    CHECK(composite_level_census(spec, plan, pw, 0, 2) == 1);
    CHECK(composite_level_census(spec, plan, pw, 0, 3) == 0);

    CHECK_THROWS_AS(composite_level_census(spec, plan, infinite_place(plan.k2), 1, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(composite_level_census(spec, plan, rational_place(plan.k2, plan.k2->zero()),
                                           1, 1),
                    std::invalid_argument);
}

TEST_CASE("gs_composite_report: the worked example") {
    SUBCASE("q=2, N={1,2}") {
        CompositeReport rep = gs_composite_report(2, {1, 2}, 0);
        CHECK(rep.eisenstein.pass);
        CHECK(rep.support_splits.size() == 3);
        CHECK(rep.g_E == 3);
        CHECK(rep.gamma_E == 13);
        CHECK(rep.gamma_E_closed_form == 13);
        CHECK(rep.nu.nu.at(1) == 3);
        CHECK(rep.nu.nu.at(2) == 3);
        CHECK(rep.invariants.beta.at(1) == Rat(3, 13));
        CHECK(rep.invariants.beta.at(2) == Rat(3, 13));
        REQUIRE(rep.invariants.dv.has_value());
        REQUIRE(rep.invariants.dv->exact);
        CHECK(rep.invariants.dv->deficiency_exact == Rat(8, 13));
        CHECK(rep.deficiency_closed_form == Rat(8, 13));
        CHECK(rep.invariants.dv->lhs_exact == Rat(5, 13));
    }
    SUBCASE("q=3, N={1,3}") {
        CompositeReport rep = gs_composite_report(3, {1, 3}, 0);
        CHECK(rep.support_splits.size() == 8);
        CHECK(rep.g_E == 12);
        CHECK(rep.gamma_E == Rat(59, 2));
        CHECK(rep.invariants.beta.at(1) == Rat(16, 59));
        CHECK(rep.invariants.beta.at(3) == Rat(16, 59));
    }
    SUBCASE("q=2, N={1}: the trivial extension reproduces the base tower") {
        CompositeReport rep = gs_composite_report(2, {1}, 0);
        CHECK(rep.gamma_E == 3);             // = gamma(F) = q + 1
        CHECK(rep.nu.nu.at(1) == 3);         // = nu_1(F)
        CHECK(rep.invariants.dv->deficiency_exact == 0);
    }
}
