// agtrellis: trellis state complexity of codes from curves
// Copyright 2026 The agtrellis authors.
// Licensed under the Apache License, Version 2.0.
#include "doctest.h"

#include "agtrellis/bounds.hpp"
#include "agtrellis/rng.hpp"

using namespace agtrellis;

TEST_CASE("wolf bound") {
    CHECK(wolf_bound(8, 3) == 3);
    CHECK(wolf_bound(27, 12) == 12);
    CHECK(wolf_bound(7, 4) == 3);
    CHECK_THROWS_AS(wolf_bound(4, 5), Error);
}

TEST_CASE("equality region") {
    CHECK(equality_region(8, 3, 1));
    CHECK_FALSE(equality_region(27, 14, 3)); // 13 <= 14 <= 18
    CHECK(equality_region(27, 19, 3));
    CHECK(equality_region(27, 12, 3));
    CHECK_FALSE(equality_region(27, 13, 3));
    CHECK_FALSE(equality_region(27, 18, 3));
}

TEST_CASE("clifford bound") {
    CHECK(clifford_bound(27, 3) == 10);
    CHECK(clifford_bound(8, 1) == 2);
    CHECK(clifford_bound(64, 6) == 25);
}

TEST_CASE("goppa-like bound") {
    CHECK(goppa_like_bound(27, 12, 3, 0) == 9);
    CHECK(goppa_like_bound(10, 4, 0, 0) == wolf_bound(10, 4));
    CHECK(goppa_like_bound(64, 28, 6, 0) == 22); // q = 4, m = 33
}

TEST_CASE("gonality R bound") {
    auto gs3 = GonalitySequence::plane(3);
    auto b14 = gonality_r_bound(gs3, 27, 14, 12);
    CHECK(b14.value == 11); // R(1) = 1 over <3,4>
    CHECK_FALSE(b14.via_equality_region);

    auto b13 = gonality_r_bound(gs3, 27, 13, 11);
    CHECK(b13.value == 10); // R(-1) = 1, k = 11

    auto gs4 = GonalitySequence::plane(4);
    auto b32 = gonality_r_bound(gs4, 64, 32, 27);
    CHECK(b32.value == 26); // R(0) = 1 over <4,5>

    // 2m - n < -1 degenerates to the equality region
    auto b5 = gonality_r_bound(gs3, 27, 5, 3);
    CHECK(b5.via_equality_region);
    CHECK(b5.value == 3);

    // chained form w - R(2g-2)
    CHECK(b14.chained == 12 - r_at_2g_minus_2(gs3));

    CHECK_THROWS_AS(gonality_r_bound(gs3, 27, 14, 14), Error); // 2k > n
    CHECK_THROWS_AS(gonality_r_bound(gs3, 6, 3, 3), Error);    // n <= 2g
}

TEST_CASE("gamma2 bound") {
    CHECK(gonality_gamma2_bound(27, 12, 3, 3) == 10);
    CHECK(gonality_gamma2_bound(64, 27, 6, 4) == 23);
    // gamma_2 = 2 recovers the non-abundant goppa-like value
    CHECK(gonality_gamma2_bound(30, 10, 4, 2) == goppa_like_bound(30, 10, 4, 0));
    CHECK_THROWS_AS(gonality_gamma2_bound(27, 20, 3, 3), Error);
}

TEST_CASE("fso distance bound") {
    CHECK(fso_delta_bound(9, 3, 5) == 3);  // border 2d = n + 1: bound is k
    CHECK(fso_delta_bound(8, 3, 4) == 2);
    CHECK(fso_delta_bound(8, 4, 4) == 3);
    CHECK_THROWS_AS(fso_delta_bound(8, 3, 5), Error); // 2d > n + 1
}

TEST_CASE("bound ordering on Hermitian parameters") {
    for (unsigned q : {2u, 3u, 4u}) {
        auto gs = GonalitySequence::plane(static_cast<int>(q));
        long n = static_cast<long>(q) * q * q;
        int g = gs.genus();
        for (long m = 0; m < n; ++m) {
            std::size_t k = riemann_roch_dim_one_point(q, m);
            if (2 * k > static_cast<std::size_t>(n)) break;
            int w = wolf_bound(n, k);
            int goppa = goppa_like_bound(n, k, g, 0);
            int g2 = gonality_gamma2_bound(n, k, g, gs.gamma(2));
            int gr = gonality_r_bound(gs, n, m, k).value;
            CHECK(goppa <= g2);
            CHECK(g2 <= gr);
            CHECK(gr <= w);
        }
    }
}

TEST_CASE("report for a concrete Hermitian code") {
    auto hc = hermitian_code(3, 14);
    ReportOptions opt;
    opt.exact_profile = true;
    auto rep = bound_report(hc.code, hc.params.gs, 14, opt);
    CHECK(rep.wolf == 12);
    CHECK(rep.gonality_r.applicable);
    CHECK(rep.gonality_r.value == 11);
    CHECK(rep.gonality_gamma2.value == 10);
    CHECK(rep.goppa_like.value == 9);
    CHECK(rep.clifford.applicable); // middle region
    CHECK(rep.clifford.value == 10);
    REQUIRE(rep.exact_s.has_value());
    CHECK(*rep.exact_s == 12);
    CHECK_FALSE(rep.in_equality_region);

    // equality region: the [8,3] code meets the Wolf bound
    auto h23 = hermitian_code(2, 3);
    auto rep23 = bound_report(h23.code, h23.params.gs, 3,
                              ReportOptions{true, 1 << 12, std::nullopt, 0, 0, 1});
    CHECK(rep23.in_equality_region);
    CHECK(*rep23.exact_s == 3);
    CHECK(rep23.wolf == 3);
    CHECK(rep23.self_orthogonal);
    REQUIRE(rep23.min_dist.has_value());
    CHECK(*rep23.min_dist == 5);

    // the gonality bound is attained at q = 3, m = 15
    auto h315 = hermitian_code(3, 15);
    auto rep315 = bound_report(h315.code, h315.params.gs, 15);
    CHECK(rep315.gonality_r.value == 11);
    CHECK(*rep315.exact_s == 11);
}

TEST_CASE("report for abstract parameters") {
    auto params = ag_params_abstract(100, 60, GonalitySequence::plane(7), 40);
    auto rep = bound_report(params);
    CHECK(rep.wolf == 40);
    CHECK(rep.gonality_r.applicable);
    CHECK(rep.gonality_r.value == 35); // R(20) = 5 over <7,8>
    CHECK_FALSE(rep.exact_s.has_value());
}

TEST_CASE("fso entry appears for self-orthogonal codes with known distance") {
    auto h24 = hermitian_code(2, 4);
    ReportOptions opt;
    opt.distance_cap = 1 << 12;
    auto rep = bound_report(h24.code, h24.params.gs, 4, opt);
    CHECK(rep.self_orthogonal);
    REQUIRE(rep.min_dist.has_value());
    CHECK(*rep.min_dist == 4);
    CHECK(rep.fso.applicable);
    CHECK(rep.fso.value == 3);
    REQUIRE(rep.exact_s.has_value());
    CHECK(*rep.exact_s == 3); // the bound is attained
}

TEST_CASE("serializations are deterministic") {
    auto hc = hermitian_code(3, 14);
    auto rep = bound_report(hc.code, hc.params.gs, 14);
    CHECK(report_json(rep) == report_json(rep));
    CHECK(report_text(rep) == report_text(rep));
    auto csv = report_csv(rep);
    CHECK(csv.find("\n27,12,14,3,3,12,0,10,9,11,10,,,12") != std::string::npos);
}

TEST_CASE("search integrates into the report") {
    auto hc = hermitian_code(2, 4);
    ReportOptions opt;
    opt.search_strategy = SearchStrategy::Exhaustive;
    auto rep = bound_report(hc.code, hc.params.gs, 4, opt);
    REQUIRE(rep.searched_s.has_value());
    CHECK(*rep.searched_s <= *rep.exact_s);
    CHECK(*rep.searched_s >= static_cast<std::size_t>(rep.gonality_r.value));
}
