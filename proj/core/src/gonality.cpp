// agtrellis: trellis state complexity of codes from curves
// Copyright 2026 The agtrellis authors.
// Licensed under the Apache License, Version 2.0.
#include "agtrellis/gonality.hpp"

#include <algorithm>
#include <string>

namespace agtrellis {

namespace {

int floor_div(int a, int b) {
    int q = a / b, r = a % b;
    return (r != 0 && (r < 0) != (b < 0)) ? q - 1 : q;
}

void check_domain(const GonalitySequence& gs, int N) {
    if (N < -1 || N > 2 * gs.genus() - 2)
        throw Error(Errc::OutOfDomain,
                    "N = " + std::to_string(N) + " outside [-1, " +
                        std::to_string(2 * gs.genus() - 2) + "]");
}

} // namespace

const char* origin_name(GsOrigin o) {
    switch (o) {
        case GsOrigin::Plane: return "plane";
        case GsOrigin::Hyperelliptic: return "hyperelliptic";
        case GsOrigin::Explicit: return "explicit";
    }
    return "?";
}

GonalitySequence GonalitySequence::plane(int r) {
    if (r < 2) throw Error(Errc::DegreeTooSmall, "plane parameter r must be >= 2");
    const int g = r * (r - 1) / 2;
    std::vector<int> gammas;
    gammas.reserve(g);
    // a = alpha*r + beta with 0 <= beta < r lies in <r, r+1> iff beta <= alpha.
    for (int a = 0; static_cast<int>(gammas.size()) < g; ++a) {
        int alpha = a / r, beta = a % r;
        if (beta <= alpha) gammas.push_back(a);
    }
    return GonalitySequence(g, std::move(gammas), GsOrigin::Plane, r);
}

GonalitySequence GonalitySequence::hyperelliptic(int g) {
    if (g < 2) throw Error(Errc::GenusTooSmall, "hyperelliptic genus must be >= 2");
    std::vector<int> gammas(g);
    for (int i = 1; i <= g; ++i) gammas[i - 1] = 2 * i - 2;
    return GonalitySequence(g, std::move(gammas), GsOrigin::Hyperelliptic, 0);
}

GonalitySequence GonalitySequence::from_values(int g, std::vector<int> gammas) {
    if (g < 1 || static_cast<int>(gammas.size()) != g)
        throw Error(Errc::BoundsViolated, "need exactly g values");
    for (int i = 1; i < g; ++i)
        if (gammas[i] <= gammas[i - 1])
            throw Error(Errc::NotIncreasing, "values must be strictly increasing");
    if (gammas[0] != 0) throw Error(Errc::BoundsViolated, "gamma_1 must be 0");
    if (gammas[g - 1] != 2 * g - 2)
        throw Error(Errc::BoundsViolated, "gamma_g must be 2g-2");
    for (int i = 2; i <= g; ++i) {
        int v = gammas[i - 1];
        if (v < 2 * i - 2 || v > g + i - 2)
            throw Error(Errc::BoundsViolated, "gamma_" + std::to_string(i) +
                                                  " = " + std::to_string(v) +
                                                  " outside [2i-2, g+i-2]");
    }
    GonalitySequence gs(g, std::move(gammas), GsOrigin::Explicit, 0);
    for (int a = 0; a <= 2 * g - 1; ++a) {
        if (gs.contains(a) == gs.contains(2 * g - 1 - a))
            throw Error(Errc::SymmetryViolated,
                        "a = " + std::to_string(a) + " and " + std::to_string(2 * g - 1 - a) +
                            " are both " + (gs.contains(a) ? "values" : "gaps"));
    }
    return gs;
}

std::optional<int> GonalitySequence::plane_degree_param() const {
    if (origin_ == GsOrigin::Plane) return plane_r_;
    return std::nullopt;
}

int GonalitySequence::gamma(int i) const {
    if (i < 1) throw Error(Errc::OutOfDomain, "gonality index starts at 1");
    if (i <= g_) return gammas_[i - 1];
    return g_ + i - 1;
}

bool GonalitySequence::contains(int a) const {
    if (a < 0) return false;
    if (a >= 2 * g_) return true;
    return std::binary_search(gammas_.begin(), gammas_.end(), a);
}

std::vector<int> GonalitySequence::gaps() const {
    std::vector<int> out{-1};
    for (int a = 0; a <= 2 * g_ - 1; ++a)
        if (!contains(a)) out.push_back(a);
    return out;
}

bool GonalitySequence::is_hyperelliptic_shape() const {
    if (g_ == 2) return true; // gamma = (0, 2) is forced at genus 2
    for (int i = 2; i <= g_ - 1; ++i)
        if (gamma(i) == 2 * i - 2) return true;
    return false;
}

int ell_tilde(const GonalitySequence& gs, int a) {
    if (a < -1) throw Error(Errc::BelowDomain, "ell_tilde needs a >= -1");
    if (a == -1) return 0;
    const int g = gs.genus();
    if (a >= 2 * g - 1) return g + (a - (2 * g - 1));
    const auto& v = gs.values();
    return static_cast<int>(std::upper_bound(v.begin(), v.end(), a) - v.begin());
}

int ell_tilde_plane(int r, int a) {
    if (r < 2) throw Error(Errc::DegreeTooSmall, "plane parameter r must be >= 2");
    if (a < -1) throw Error(Errc::BelowDomain, "ell_tilde needs a >= -1");
    if (a == -1) return 0;
    int alpha = a / r, beta = a % r;
    if (alpha <= r) return alpha * (alpha + 1) / 2 + std::min(alpha, beta) + 1;
    // Beyond alpha = r every residue class is filled, r per row.
    return r * (r + 1) / 2 + (alpha - r) * r + beta + 1;
}

RValue r_bruteforce(const GonalitySequence& gs, int N) {
    check_domain(gs, N);
    RValue best{0, 0, 0};
    bool first = true;
    for (int a = -1; a <= N + 1; ++a) {
        int v = ell_tilde(gs, a) + ell_tilde(gs, N - a);
        if (first || v < best.value) {
            best = {v, a, N - a};
            first = false;
        }
    }
    return best;
}

int r_restricted(const GonalitySequence& gs, int N) {
    check_domain(gs, N);
    int best = ell_tilde(gs, floor_div(N, 2)) + ell_tilde(gs, N - floor_div(N, 2));
    for (int a : gs.gaps()) {
        if (2 * a > N) break;
        if (!gs.contains(a + 1)) continue;
        best = std::min(best, ell_tilde(gs, a) + ell_tilde(gs, N - a));
    }
    return best;
}

int r_at_2g_minus_2(const GonalitySequence& gs) {
    const int g = gs.genus();
    int dev = 0;
    for (int i = 1; i <= g; ++i) dev = std::max(dev, gs.gamma(i) - (2 * i - 2));
    return std::min(2 * ell_tilde(gs, g - 1), g - dev);
}

int r_genus_end_printed_term(const GonalitySequence& gs) {
    return 2 * r_bruteforce(gs, gs.genus() - 1).value;
}

std::vector<int> plane_jumps(int r) {
    if (r < 2) throw Error(Errc::DegreeTooSmall, "plane parameter r must be >= 2");
    const int g = r * (r - 1) / 2;
    std::vector<int> out;
    for (int alpha = -1; alpha <= r - 1; ++alpha) {
        for (int beta = 0; beta <= r - 1; ++beta) {
            if (!(2 * beta + 2 <= alpha || beta == r - 1)) continue;
            int u = alpha * r + beta;
            if (u == 2 * g - 1) continue;
            if (u < -1 || u > 2 * g - 2) continue;
            out.push_back(u);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int r_plane_closed_form(int r, int N) {
    const int g = r * (r - 1) / 2;
    if (N < -1 || N > 2 * g - 2) throw Error(Errc::OutOfDomain, "N outside [-1, 2g-2]");
    auto jumps = plane_jumps(r);
    return static_cast<int>(std::upper_bound(jumps.begin(), jumps.end(), N) - jumps.begin());
}

std::optional<int> r_plane_midpoint_form(int r, int N) {
    const int g = r * (r - 1) / 2;
    if (N < -1 || N > 2 * g - 2) throw Error(Errc::OutOfDomain, "N outside [-1, 2g-2]");
    if (N < 0) return std::nullopt;
    int half = N / 2;
    int alpha = half / r;
    if (alpha < 1) return std::nullopt;
    auto gs = GonalitySequence::plane(r);
    int split = ell_tilde(gs, alpha * r - 1) + ell_tilde(gs, N - alpha * r + 1);
    if (gs.contains(half)) return split;
    int balanced = ell_tilde(gs, half) + ell_tilde(gs, N - half);
    return std::min(split, balanced);
}

std::optional<int> r_plane_row_formula_printed(int r, int N) {
    const int g = r * (r - 1) / 2;
    if (N < -1 || N > 2 * g - 2) throw Error(Errc::OutOfDomain, "N outside [-1, 2g-2]");
    // N = alpha*r + beta with -1 <= beta <= r-2 and 0 <= alpha <= r-2.
    int alpha = floor_div(N + 1, r);
    int beta = (N + 1) - alpha * r - 1;
    if (alpha < 0 || alpha > r - 2) return std::nullopt;
    if (beta > alpha / 2 - 1) return std::nullopt;
    if (alpha % 2 == 0) return alpha * (alpha + 2) / 4 + beta + 1;
    return (alpha + 1) * (alpha + 1) / 4 + beta + 1;
}

int r_hyperelliptic_closed_form(int N) { return floor_div(N + 1, 2) + 1; }

RTable RTable::build(const GonalitySequence& gs) {
    RTable t(gs);
    const int g = gs.genus();
    const auto plane_r = gs.plane_degree_param();
    t.table_.reserve(2 * g);
    t.jumps_.push_back(-1);
    for (int N = -1; N <= 2 * g - 2; ++N) {
        RValue rv = r_bruteforce(gs, N);
        if (r_restricted(gs, N) != rv.value)
            throw Error(Errc::OutOfDomain, "restricted minimization diverged at N = " +
                                               std::to_string(N));
        if (plane_r) {
            if (r_plane_closed_form(*plane_r, N) != rv.value)
                throw Error(Errc::OutOfDomain,
                            "jump-count closed form diverged at N = " + std::to_string(N));
            if (auto mid = r_plane_midpoint_form(*plane_r, N); mid && *mid != rv.value)
                throw Error(Errc::OutOfDomain,
                            "midpoint form diverged at N = " + std::to_string(N));
        }
        if (N > -1 && rv.value > t.table_.back().value) t.jumps_.push_back(N);
        t.table_.push_back(rv);
    }
    if (static_cast<int>(t.jumps_.size()) != t.table_.back().value)
        throw Error(Errc::OutOfDomain, "jump count does not match R(2g-2)");
    return t;
}

int RTable::value_at(int N) const { return minimizer_at(N).value; }

RValue RTable::minimizer_at(int N) const {
    check_domain(gs_, N);
    return table_[static_cast<std::size_t>(N + 1)];
}

} // namespace agtrellis
