// agtrellis: trellis state complexity of codes from curves
// Copyright 2026 The agtrellis authors.
// Licensed under the Apache License, Version 2.0.
#include "doctest.h"

#include "agtrellis/field.hpp"
#include "agtrellis/rng.hpp"

using namespace agtrellis;

namespace {

// Oracle: a quadratic over GF(p) is irreducible iff it has no root.
bool quadratic_irreducible(unsigned p, unsigned c0, unsigned c1) {
    for (unsigned x = 0; x < p; ++x)
        if ((x * x + c1 * x + c0) % p == 0) return false;
    return true;
}

} // namespace

TEST_CASE("prime fields and canonical moduli") {
    auto f2 = Field::make(2, 1);
    CHECK(f2->order() == 2);
    auto elems = enumerate_elements(f2);
    REQUIRE(elems.size() == 2);
    CHECK(elems[0].index() == 0);
    CHECK(elems[1].index() == 1);

    // Canonical modulus of GF(9): first monic irreducible quadratic over
    // GF(3) in coefficient order, found here by the root-test oracle.
    unsigned expect_c0 = 0, expect_c1 = 0;
    bool found = false;
    for (unsigned v = 0; v < 9 && !found; ++v) {
        unsigned c0 = v % 3, c1 = v / 3;
        if (quadratic_irreducible(3, c0, c1)) {
            expect_c0 = c0;
            expect_c1 = c1;
            found = true;
        }
    }
    REQUIRE(found);
    auto f9 = Field::make(3, 2);
    CHECK(f9->modulus() == std::vector<unsigned>{expect_c0, expect_c1, 1});
    CHECK(f9->modulus() == std::vector<unsigned>{1, 0, 1}); // x^2 + 1

    // GF(4) has a single irreducible quadratic.
    auto f4 = Field::make(2, 2);
    CHECK(f4->modulus() == std::vector<unsigned>{1, 1, 1});
    CHECK(quadratic_irreducible(2, 1, 1));
}

TEST_CASE("explicit modulus is validated") {
    CHECK_NOTHROW(Field::make(2, 2, {1, 1, 1}));
    CHECK_THROWS_WITH_AS(Field::make(2, 2, {1, 0, 1}), doctest::Contains("ReducibleModulus"),
                         Error); // x^2+1 = (x+1)^2 over GF(2)
    CHECK_THROWS_AS(Field::make(4, 1), Error);  // NotPrime
    CHECK_THROWS_AS(Field::make(2, 17), Error); // FieldTooLarge
    try {
        Field::make(6, 2);
        FAIL("expected NotPrime");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotPrime);
    }
    try {
        Field::make(2, 17);
        FAIL("expected FieldTooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::FieldTooLarge);
    }
}

TEST_CASE("GF(4) multiplication reduces by the modulus") {
    auto f4 = Field::make(2, 2);
    // t is the class of x: index 2. x*x = x + 1 mod (x^2+x+1): index 3.
    CHECK(f4->mul(2, 2) == 3);
    CHECK(f4->mul(2, 3) == 1); // x * (x+1) = x^2 + x = 1
    CHECK(f4->inv(2) == 3);
}

TEST_CASE("additive and multiplicative structure") {
    for (auto [p, m] : {std::pair<unsigned, unsigned>{2, 1}, {3, 1}, {2, 2}, {3, 2}, {5, 2}}) {
        auto f = Field::make(p, m);
        for (unsigned a = 0; a < f->order(); ++a) {
            CHECK(f->add(static_cast<felem>(a), f->neg(static_cast<felem>(a))) == 0);
            if (a != 0) CHECK(f->pow(static_cast<felem>(a), f->order() - 1) == 1);
        }
    }
}

TEST_CASE("field axioms on randomized triples") {
    std::vector<std::pair<unsigned, unsigned>> specs = {{2, 1}, {3, 1}, {2, 2}, {3, 2},
                                                        {2, 4}, {5, 2}, {2, 9}, {3, 6}};
    for (auto [p, m] : specs) {
        auto f = Field::make(p, m);
        Rng rng(0x5eedu + p * 100 + m);
        for (int trial = 0; trial < 10000; ++trial) {
            felem a = static_cast<felem>(rng.below(f->order()));
            felem b = static_cast<felem>(rng.below(f->order()));
            felem c = static_cast<felem>(rng.below(f->order()));
            REQUIRE(f->add(a, b) == f->add(b, a));
            REQUIRE(f->mul(a, b) == f->mul(b, a));
            REQUIRE(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
            REQUIRE(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
            REQUIRE(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
            // Frobenius endomorphism
            REQUIRE(f->pow(f->add(a, b), p) == f->add(f->pow(a, p), f->pow(b, p)));
            if (a != 0 && b != 0)
                REQUIRE(f->inv(f->mul(a, b)) == f->mul(f->inv(a), f->inv(b)));
        }
    }
}

TEST_CASE("largest supported field") {
    auto f = Field::make(2, 16);
    CHECK(f->order() == 65536);
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        felem a = static_cast<felem>(1 + rng.below(f->order() - 1));
        CHECK(f->pow(a, 65535) == 1);
        CHECK(f->mul(a, f->inv(a)) == 1);
    }
    CHECK(f->add(12345, 12345) == 0); // characteristic 2
}

TEST_CASE("element handles reject mixed fields") {
    auto f4 = Field::make(2, 2);
    auto f9 = Field::make(3, 2);
    Element a(f4, 2), b(f9, 2);
    CHECK_THROWS_AS(a + b, Error);
    CHECK_THROWS_AS(a * b, Error);
    try {
        (void)(a + b);
        FAIL("expected MixedFields");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::MixedFields);
    }
    // structurally identical fields interoperate
    auto f4b = Field::make(2, 2, {1, 1, 1});
    Element c(f4b, 3);
    CHECK((a * c).index() == 1);
    CHECK_THROWS_AS(Element(f4, 1) / Element(f4, 0), Error);
}

TEST_CASE("pow handles zero and large exponents") {
    auto f9 = Field::make(3, 2);
    CHECK(f9->pow(0, 0) == 1);
    CHECK(f9->pow(0, 5) == 0);
    for (unsigned a = 1; a < 9; ++a) {
        CHECK(f9->pow(static_cast<felem>(a), 8) == 1);
        CHECK(f9->pow(static_cast<felem>(a), 8000000017ull) ==
              f9->pow(static_cast<felem>(a), 8000000017ull % 8));
    }
}
