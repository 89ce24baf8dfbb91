#include "doctest.h"

#include "towerlab/ff.hpp"

#include <cstdint>
#include <vector>

using namespace towerlab;

namespace {

std::uint64_t mix(std::uint64_t& s) {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::vector<FieldPtr> catalog_fields() {
    return {
        Field::make(2, 1), Field::make(3, 1), Field::make(2, 2), Field::make(2, 3),
        Field::make(3, 2), Field::make(2, 4), Field::make(2, 6), Field::make(3, 4),
    };
}

}  // namespace

TEST_CASE("canonical moduli") {
    auto f2 = Field::make(2, 1);
    CHECK(f2->modulus() == std::vector<std::uint32_t>{0, 1});  // x

    auto f4 = Field::make(2, 2);
    CHECK(f4->modulus() == std::vector<std::uint32_t>{1, 1, 1});  // x^2+x+1

    // x^2+x+1 is the only monic irreducible quadratic over F_2: scan all 4.
    int count = 0;
    for (int c0 = 0; c0 < 2; ++c0)
        for (int c1 = 0; c1 < 2; ++c1) {
            bool has_root = false;
            for (int a = 0; a < 2; ++a)
                if ((a * a + c1 * a + c0) % 2 == 0) has_root = true;
            if (!has_root) ++count;
        }
    CHECK(count == 1);

    auto f8 = Field::make(2, 3);
    CHECK(f8->modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});  // x^3+x+1
}

TEST_CASE("explicit modulus validation") {
    // x^2+1 has no root mod 3, so it is a valid F_9 modulus.
    for (int a = 0; a < 3; ++a) CHECK((a * a + 1) % 3 != 0);
    auto f9 = Field::make(3, 2, {1, 0, 1});
    CHECK(f9->size() == 9);

    CHECK_THROWS_AS(Field::make(4, 1), std::invalid_argument);               // 4 not prime
    CHECK_THROWS_AS(Field::make(2, 2, {0, 0, 1}), std::invalid_argument);    // x^2 reducible
    CHECK_THROWS_AS(Field::make(2, 2, {1, 1, 1, 1}), std::invalid_argument); // degree 3 != 2
    CHECK_THROWS_AS(Field::make(3, 2, {2, 0, 1}), std::invalid_argument);    // x^2+2 = (x+1)(x+2)
}

TEST_CASE("field axioms on random samples") {
    for (const auto& K : catalog_fields()) {
        std::uint64_t s = 0xabcdef12 + K->size();
        for (int trial = 0; trial < 60; ++trial) {
            FieldElement a = K->from_code(mix(s) % K->size());
            FieldElement b = K->from_code(mix(s) % K->size());
            FieldElement c = K->from_code(mix(s) % K->size());
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (-a) == K->zero());
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == K->one());
            }
        }
    }
}

TEST_CASE("frobenius closes and fixes the prime field") {
    auto f4 = Field::make(2, 2);
    FieldElement w = f4->generator();
    FieldElement w_plus_1 = w + f4->one();
    CHECK(f4->frobenius(w, 2) == w_plus_1);  // w^2 = w+1 against x^2+x+1
    CHECK(w * w == w_plus_1);
    CHECK(f4->frobenius(f4->one(), 2) == f4->one());

    auto f8 = Field::make(2, 3);
    for (std::uint64_t code = 0; code < 8; ++code) {
        FieldElement a = f8->from_code(code);
        FieldElement b = a;
        for (int i = 0; i < 3; ++i) b = f8->frobenius(b, 2);
        CHECK(b == a);
    }

    CHECK_THROWS_AS(f8->frobenius(f8->one(), 3), std::invalid_argument);  // 3 not a power of 2
    CHECK_THROWS_AS(f8->frobenius(f8->one(), 4), std::invalid_argument);  // d=2 does not divide 3
}

TEST_CASE("x^(p^k) = x exhaustively for small fields") {
    for (const auto& K : catalog_fields()) {
        if (K->size() > 256) continue;
        for (std::uint64_t code = 0; code < K->size(); ++code) {
            FieldElement a = K->from_code(code);
            CHECK(a.pow(K->size()) == a);
        }
    }
    // sampled above 256
    auto f81 = Field::make(3, 4);
    std::uint64_t s = 99;
    for (int i = 0; i < 40; ++i) {
        FieldElement a = f81->from_code(mix(s) % 81);
        CHECK(a.pow(81) == a);
    }
}

TEST_CASE("embeddings are unital homomorphisms with deterministic images") {
    auto f2 = Field::make(2, 1);
    auto f4 = Field::make(2, 2);
    auto f16 = Field::make(2, 4);

    const Embedding& e24 = Embedding::get(f2, f4);
    CHECK(e24(f2->one()) == f4->one());

    const Embedding& e4_16 = Embedding::get(f4, f16);
    FieldElement img = e4_16.generator_image();
    // image is a root of x^2+x+1 in F_16
    CHECK(img * img + img + f16->one() == f16->zero());
    // it is the code-minimal one of the two roots
    FieldElement other = img + f16->one();
    CHECK(other * other + other + f16->one() == f16->zero());
    CHECK(img.code() < other.code());

    std::uint64_t s = 7;
    for (int i = 0; i < 100; ++i) {
        FieldElement a = f4->from_code(mix(s) % 4);
        FieldElement b = f4->from_code(mix(s) % 4);
        CHECK(e4_16(a + b) == e4_16(a) + e4_16(b));
        CHECK(e4_16(a * b) == e4_16(a) * e4_16(b));
    }

    auto f9 = Field::make(3, 2);
    CHECK_THROWS_AS(Embedding::get(f4, f9), std::invalid_argument);   // char mismatch
    CHECK_THROWS_AS(Embedding::get(f4, Field::make(2, 3)), std::invalid_argument);  // 2 ∤ 3
    CHECK_THROWS_AS(e4_16(f2->one()), std::invalid_argument);  // wrong source field
}

TEST_CASE("embedding composition lands on a root of the source modulus") {
    auto f2 = Field::make(2, 1);
    auto f4 = Field::make(2, 2);
    auto f64 = Field::make(2, 6);  // 2 | 6, via no intermediate canonical path

    const Embedding& e24 = Embedding::get(f2, f4);
    const Embedding& e4_64 = Embedding::get(f4, f64);
    const Embedding& e2_64 = Embedding::get(f2, f64);

    // composed generator image solves the source modulus in the big field
    FieldElement g = e4_64(f4->generator());
    CHECK(g * g + g + f64->one() == f64->zero());

    for (std::uint64_t code = 0; code < 2; ++code) {
        FieldElement a = f2->from_code(code);
        CHECK(e4_64(e24(a)) == e2_64(a));  // prime subfield path is unambiguous
    }
}
