// agtrellis: trellis state complexity of codes from curves
// Copyright 2026 The agtrellis authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <optional>
#include <string>

#include "agtrellis/hermitian.hpp"

namespace agtrellis {

/// Upper bound s(C) <= min(k, n-k), any coordinate order.
int wolf_bound(std::size_t n, std::size_t k);

/// True iff m < floor(n/2) or m > ceil(n/2) + 2g - 2; inside that region
/// s(C) equals the Wolf bound for evaluation codes on a genus-g curve.
bool equality_region(std::size_t n, long m, int g);

/// ceil(n/2) - g - 1, informational in the middle parameter region.
int clifford_bound(std::size_t n, int g);

/// min(k, n-k) - (g - abundance).
int goppa_like_bound(std::size_t n, std::size_t k, int g, std::size_t abundance);

struct GonalityBoundResult {
    int value;   // lower bound on the absolute state complexity
    int chained; // weaker w - R(2g-2) form
    bool via_equality_region; // 2m - n < -1: s equals w outright
};

/// Gonality lower bound w - R(2m-n), requiring 2k <= n and n > 2g.
/// When 2m - n < -1 the code sits in the equality region and the bound
/// degenerates to w itself rather than evaluating R out of domain.
GonalityBoundResult gonality_r_bound(const GonalitySequence& gs, std::size_t n, long m,
                                     std::size_t k);

/// Genus/gonality lower bound w - g + gamma_2 - 2, same hypotheses.
int gonality_gamma2_bound(std::size_t n, std::size_t k, int g, int gamma2);

/// Lower bound k - floor((n - 2d + 2)/2) for formally self-orthogonal
/// codes with 2d <= n + 1.
int fso_delta_bound(std::size_t n, std::size_t k, std::size_t d);

struct BoundEntry {
    bool applicable = false;
    int value = 0;
    std::string note; // reason when not applicable, context otherwise
};

/// Everything the library can say about one code or parameter set.
struct BoundReport {
    std::size_t n = 0, k = 0;
    long m = 0;
    int g = 0, gamma2 = 0;
    int wolf = 0;
    bool in_equality_region = false;
    BoundEntry clifford, goppa_like, gonality_r, gonality_gamma2, fso;
    std::optional<int> gonality_r_chained;
    bool self_orthogonal = false;
    std::optional<std::size_t> min_dist;
    std::optional<std::size_t> exact_s;    // s(C) for the given order
    std::optional<std::size_t> searched_s; // upper bound on s[C] from search
    std::optional<SearchResult> search;
};

struct ReportOptions {
    bool exact_profile = true;
    std::uint64_t distance_cap = 0; // 0 = skip the distance enumeration
    std::optional<SearchStrategy> search_strategy;
    std::uint64_t search_budget = 1000;
    std::uint64_t search_seed = 1;
    unsigned workers = 1;
};

/// Report for a concrete code with known divisor degree m and curve data.
BoundReport bound_report(const LinearCode& code, const GonalitySequence& gs, long m,
                         const ReportOptions& options = {});

/// Report for abstract parameters (no code to profile).
BoundReport bound_report(const AGParams& params);

std::string report_text(const BoundReport& report);
std::string report_json(const BoundReport& report);
std::string report_csv(const BoundReport& report);

} // namespace agtrellis
