// agtrellis: trellis state complexity of codes from curves
// Copyright 2026 The agtrellis authors.
// Licensed under the Apache License, Version 2.0.
#include "agtrellis/hermitian.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace agtrellis {

AGParams ag_params_abstract(std::size_t n, long m, const GonalitySequence& gs,
                            std::optional<std::size_t> k) {
    const int g = gs.genus();
    if (static_cast<long>(n) <= 2 * static_cast<long>(g))
        throw Error(Errc::HypothesisViolated, "need n > 2g");
    if (m >= static_cast<long>(n)) throw Error(Errc::HypothesisViolated, "need m < n");
    std::size_t dim;
    if (m > 2 * g - 2) {
        dim = static_cast<std::size_t>(m + 1 - g);
        if (k && *k != dim)
            throw Error(Errc::HypothesisViolated,
                        "supplied k contradicts the exact dimension m + 1 - g");
    } else if (k) {
        dim = *k;
    } else {
        throw Error(Errc::HypothesisViolated,
                    "dimension is not determined by m <= 2g-2; supply k");
    }
    AGParams p{n, m, g, gs, dim, 0, 2 * dim <= n};
    return p;
}

HermitianCurve hermitian_curve(unsigned q) {
    unsigned p, ext;
    switch (q) {
        case 2: p = 2, ext = 2; break;
        case 3: p = 3, ext = 2; break;
        case 4: p = 2, ext = 4; break;
        case 5: p = 5, ext = 2; break;
        default:
            throw Error(Errc::UnsupportedQ, "q = " + std::to_string(q) +
                                                " (supported: 2, 3, 4, 5)");
    }
    HermitianCurve curve;
    curve.q = q;
    curve.field = Field::make(p, ext);
    curve.genus = static_cast<int>(q * (q - 1) / 2);
    const Field& f = *curve.field;
    for (unsigned xi = 0; xi < f.order(); ++xi) {
        felem x = static_cast<felem>(xi);
        felem rhs = f.pow(x, q + 1);
        for (unsigned yi = 0; yi < f.order(); ++yi) {
            felem y = static_cast<felem>(yi);
            if (f.add(f.pow(y, q), y) == rhs) curve.points.emplace_back(x, y);
        }
    }
    if (curve.points.size() != std::size_t(q) * q * q)
        throw std::logic_error("Hermitian point count is not q^3");
    return curve;
}

std::vector<std::pair<felem, felem>> hermitian_points(unsigned q) {
    return hermitian_curve(q).points;
}

std::size_t riemann_roch_dim_one_point(unsigned q, long m) {
    if (m < 0) return 0;
    std::size_t count = 0;
    for (long b = 0; b < static_cast<long>(q); ++b)
        for (long a = 0; a * static_cast<long>(q) + b * static_cast<long>(q + 1) <= m; ++a)
            ++count;
    return count;
}

HermitianCode hermitian_code(unsigned q, long m) {
    HermitianCurve curve = hermitian_curve(q);
    const long n = static_cast<long>(curve.points.size());
    if (m < 0 || m >= n)
        throw Error(Errc::AbundantRegime,
                    "m = " + std::to_string(m) + " must satisfy 0 <= m < n = " +
                        std::to_string(n));

    // Monomial basis x^a y^b of L(mQ), ordered by pole order aq + b(q+1).
    struct Monomial {
        long pole;
        unsigned a, b;
    };
    std::vector<Monomial> monomials;
    for (unsigned b = 0; b < q; ++b)
        for (long a = 0; a * static_cast<long>(q) + b * static_cast<long>(q + 1) <= m; ++a)
            monomials.push_back({a * static_cast<long>(q) + b * static_cast<long>(q + 1),
                                 static_cast<unsigned>(a), b});
    std::sort(monomials.begin(), monomials.end(),
              [](const Monomial& lhs, const Monomial& rhs) { return lhs.pole < rhs.pole; });

    const Field& f = *curve.field;
    const std::size_t k = monomials.size();
    Matrix eval(curve.field, k, static_cast<std::size_t>(n));
    for (std::size_t row = 0; row < k; ++row) {
        const auto& mono = monomials[row];
        for (std::size_t col = 0; col < static_cast<std::size_t>(n); ++col) {
            auto [x, y] = curve.points[col];
            eval(row, col) = f.mul(f.pow(x, mono.a), f.pow(y, mono.b));
        }
    }

    LinearCode code = LinearCode::from_generator(eval);
    if (code.dimension() != k || k != riemann_roch_dim_one_point(q, m))
        throw std::logic_error("evaluation rows are not independent");

    AGParams params{static_cast<std::size_t>(n), m, curve.genus,
                    GonalitySequence::plane(static_cast<int>(q)), k, 0,
                    2 * k <= static_cast<std::size_t>(n)};
    return HermitianCode{std::move(code), std::move(params), std::move(curve), n - m};
}

} // namespace agtrellis
