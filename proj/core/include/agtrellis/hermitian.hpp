// agtrellis: trellis state complexity of codes from curves
// Copyright 2026 The agtrellis authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "agtrellis/gonality.hpp"
#include "agtrellis/linear_code.hpp"

namespace agtrellis {

/// Parameters an evaluation code inherits from its curve: length n,
/// divisor degree m, genus g, gonality sequence, dimension k and the
/// abundance (dimension of the evaluation kernel).
struct AGParams {
    std::size_t n = 0;
    long m = 0;
    int g = 0;
    GonalitySequence gs;
    std::size_t k = 0;
    std::size_t abundance = 0;
    bool dim_at_most_half = false; // 2k <= n
};

/// Abstract parameter record for curves whose codes are not constructed
/// here. Requires n > 2g and m < n. In the range 2g-2 < m < n the
/// dimension is m + 1 - g; outside it the caller must supply k.
AGParams ag_params_abstract(std::size_t n, long m, const GonalitySequence& gs,
                            std::optional<std::size_t> k = std::nullopt);

/// The Hermitian curve y^q + y = x^(q+1) over GF(q^2): the q^3 affine
/// rational points in lexicographic (x index, y index) order, genus
/// q(q-1)/2. Supported for q in {2, 3, 4, 5}.
struct HermitianCurve {
    unsigned q = 0;
    FieldPtr field; // GF(q^2)
    int genus = 0;
    std::vector<std::pair<felem, felem>> points;
};

HermitianCurve hermitian_curve(unsigned q);

/// Convenience accessor for the ordered affine point list.
std::vector<std::pair<felem, felem>> hermitian_points(unsigned q);

/// Dimension of the one-point space L(mQ) at the point at infinity:
/// the number of monomials x^a y^b with 0 <= b <= q-1 and
/// a*q + b*(q+1) <= m, i.e. the count of pole orders <= m in the
/// Weierstrass semigroup <q, q+1>.
std::size_t riemann_roch_dim_one_point(unsigned q, long m);

struct HermitianCode {
    LinearCode code;
    AGParams params;
    HermitianCurve curve;
    long goppa_floor = 0; // d >= n - m
};

/// One-point evaluation code: rows are the monomial basis of L(mQ)
/// evaluated at the q^3 affine points. Requires 0 <= m < n = q^3, which
/// keeps the code non-abundant.
HermitianCode hermitian_code(unsigned q, long m);

} // namespace agtrellis
