// agtrellis: trellis state complexity of codes from curves
// Copyright 2026 The agtrellis authors.
// Licensed under the Apache License, Version 2.0.
#include "doctest.h"

#include "agtrellis/code_io.hpp"
#include "agtrellis/hermitian.hpp"

using namespace agtrellis;

TEST_CASE("code files round-trip byte for byte") {
    auto f2 = Field::make(2, 1);
    Matrix g(f2, 1, 3, {1, 1, 1});
    auto rep = LinearCode::from_generator(g);
    std::string text = code_to_string(rep);
    CHECK(text == "field 2 1 0 1\ncode 1 3\n1 1 1\n");
    auto back = code_from_string(text);
    CHECK(code_to_string(back) == text);

    auto hc = hermitian_code(3, 14);
    std::string ht = code_to_string(hc.code);
    auto hback = code_from_string(ht);
    CHECK(code_to_string(hback) == ht);
    CHECK(hback.generator() == hc.code.generator());
    CHECK(hback.field()->same_as(*hc.code.field()));
}

TEST_CASE("reading canonicalizes the generator") {
    // dependent rows: the stored code keeps only a basis
    auto code = code_from_string("field 2 1 0 1\ncode 3 3\n1 1 0\n0 1 1\n1 0 1\n");
    CHECK(code.dimension() == 2);
}

TEST_CASE("parse failures carry line numbers") {
    auto expect_parse_error = [](const std::string& text, const char* needle) {
        try {
            code_from_string(text);
            FAIL_CHECK("expected ParseError for: " << needle);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::ParseError);
            CHECK(std::string(e.what()).find("line") != std::string::npos);
        }
    };
    expect_parse_error("", "empty file");
    expect_parse_error("code 1 3\n1 1 1\n", "missing field header");
    expect_parse_error("field 2 1 0\ncode 1 3\n1 1 1\n", "short modulus");
    expect_parse_error("field 2 1 0 1\ncode 1 3\n1 2 1\n", "entry out of range");
    expect_parse_error("field 2 1 0 1\ncode 1 3\n1 1\n", "short row");
    expect_parse_error("field 2 1 0 1\ncode 1 3\n1 1 1 1\n", "long row");
    expect_parse_error("field 2 1 0 1\ncode 2 1\n1\n1\n", "k > n");
    expect_parse_error("field 2 2 1 0 1\ncode 1 2\n1 1\n", "reducible modulus");
    expect_parse_error("field 2 1 0 1\ncode 1 3\n0 0 0\n", "zero code");
}

TEST_CASE("files survive a disk round-trip") {
    auto hc = hermitian_code(2, 3);
    auto path = std::filesystem::temp_directory_path() / "agtrellis_io_test.code";
    save_code(path, hc.code);
    auto back = load_code(path);
    CHECK(back.generator() == hc.code.generator());
    std::filesystem::remove(path);
    CHECK_THROWS_AS(load_code(path), Error);
}

TEST_CASE("gonality records as JSON") {
    auto plane = GonalitySequence::plane(7);
    auto text = gonality_to_json(plane);
    auto back = gonality_from_json(text);
    CHECK(back.origin() == GsOrigin::Plane);
    CHECK(back.values() == plane.values());
    CHECK(gonality_to_json(back) == text);

    auto hyper = GonalitySequence::hyperelliptic(5);
    CHECK(gonality_from_json(gonality_to_json(hyper)).values() == hyper.values());

    auto expl = gonality_from_json(R"({"genus": 3, "gammas": [0, 3, 4]})");
    CHECK(expl.origin() == GsOrigin::Explicit);
    CHECK(expl.values() == std::vector<int>{0, 3, 4});

    CHECK_THROWS_AS(gonality_from_json("not json"), Error);
    CHECK_THROWS_AS(gonality_from_json(R"({"genus": 3})"), Error);
    // validation errors propagate with their own codes
    try {
        gonality_from_json(R"({"genus": 4, "gammas": [0, 3, 4, 6]})");
        FAIL("expected SymmetryViolated");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::SymmetryViolated);
    }
}
