// agtrellis: trellis state complexity of codes from curves
// Copyright 2026 The agtrellis authors.
// Licensed under the Apache License, Version 2.0.
#include "agtrellis/bounds.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace agtrellis {

namespace {

long floor_div(long a, long b) {
    long q = a / b, r = a % b;
    return (r != 0 && (r < 0) != (b < 0)) ? q - 1 : q;
}

void require_half_dimension(std::size_t n, std::size_t k, int g) {
    if (2 * k > n) throw Error(Errc::HypothesisViolated, "need 2k <= n");
    if (static_cast<long>(n) <= 2 * static_cast<long>(g))
        throw Error(Errc::HypothesisViolated, "need n > 2g");
}

} // namespace

int wolf_bound(std::size_t n, std::size_t k) {
    if (k < 1 || k > n) throw Error(Errc::HypothesisViolated, "need 1 <= k <= n");
    return static_cast<int>(std::min(k, n - k));
}

bool equality_region(std::size_t n, long m, int g) {
    long half_lo = static_cast<long>(n / 2);           // floor(n/2)
    long half_hi = static_cast<long>((n + 1) / 2);     // ceil(n/2)
    return m < half_lo || m > half_hi + 2 * g - 2;
}

int clifford_bound(std::size_t n, int g) {
    return static_cast<int>((n + 1) / 2) - g - 1;
}

int goppa_like_bound(std::size_t n, std::size_t k, int g, std::size_t abundance) {
    return wolf_bound(n, k) - (g - static_cast<int>(abundance));
}

GonalityBoundResult gonality_r_bound(const GonalitySequence& gs, std::size_t n, long m,
                                     std::size_t k) {
    require_half_dimension(n, k, gs.genus());
    const int w = wolf_bound(n, k);
    const int chained = w - r_bruteforce(gs, 2 * gs.genus() - 2).value;
    const long big_n = 2 * m - static_cast<long>(n);
    if (big_n < -1) return {w, chained, true};
    if (big_n > 2 * gs.genus() - 2)
        throw Error(Errc::HypothesisViolated, "2m - n exceeds 2g - 2");
    return {w - r_bruteforce(gs, static_cast<int>(big_n)).value, chained, false};
}

int gonality_gamma2_bound(std::size_t n, std::size_t k, int g, int gamma2) {
    require_half_dimension(n, k, g);
    return wolf_bound(n, k) - g + gamma2 - 2;
}

int fso_delta_bound(std::size_t n, std::size_t k, std::size_t d) {
    if (2 * d > n + 1) throw Error(Errc::HypothesisViolated, "need 2d <= n + 1");
    long slack = floor_div(static_cast<long>(n) - 2 * static_cast<long>(d) + 2, 2);
    return static_cast<int>(k) - static_cast<int>(slack);
}

namespace {

void check_report_invariant(const BoundReport& rep) {
    auto check = [&](const BoundEntry& e) {
        if (!e.applicable) return;
        if (e.value > rep.wolf) throw std::logic_error("lower bound exceeds the Wolf bound");
        if (rep.exact_s && e.value > static_cast<int>(*rep.exact_s))
            throw std::logic_error("lower bound exceeds the exact state complexity");
    };
    check(rep.goppa_like);
    check(rep.gonality_r);
    check(rep.gonality_gamma2);
    check(rep.fso);
    // Clifford is reported informationally; in the middle region it must
    // still sit below the exact value.
    if (rep.clifford.applicable && rep.exact_s &&
        rep.clifford.value > static_cast<int>(*rep.exact_s))
        throw std::logic_error("Clifford bound exceeds the exact state complexity");
}

BoundReport report_common(std::size_t n, std::size_t k, long m, const GonalitySequence& gs,
                          std::size_t abundance) {
    BoundReport rep;
    rep.n = n;
    rep.k = k;
    rep.m = m;
    rep.g = gs.genus();
    rep.gamma2 = gs.gamma(2);
    rep.wolf = wolf_bound(n, k);
    rep.in_equality_region = equality_region(n, m, rep.g);

    rep.clifford.value = clifford_bound(n, rep.g);
    rep.clifford.applicable = !rep.in_equality_region;
    rep.clifford.note = rep.clifford.applicable ? "middle parameter region"
                                                : "outside its middle region";

    rep.goppa_like.value = goppa_like_bound(n, k, rep.g, abundance);
    rep.goppa_like.applicable = true;
    rep.goppa_like.note = "abundance " + std::to_string(abundance);

    const bool halves = 2 * k <= n && static_cast<long>(n) > 2 * static_cast<long>(rep.g);
    if (halves) {
        auto rb = gonality_r_bound(gs, n, m, k);
        rep.gonality_r = {true, rb.value,
                          rb.via_equality_region ? "degenerates to w: 2m - n < -1"
                                                 : "R at 2m - n = " + std::to_string(2 * m -
                                                                                     (long)n)};
        rep.gonality_r_chained = rb.chained;
        rep.gonality_gamma2 = {true, gonality_gamma2_bound(n, k, rep.g, rep.gamma2), ""};
    } else {
        rep.gonality_r = {false, 0, "needs 2k <= n and n > 2g"};
        rep.gonality_gamma2 = {false, 0, "needs 2k <= n and n > 2g"};
    }
    rep.fso = {false, 0, "needs a formally self-orthogonal code with 2d <= n + 1"};
    return rep;
}

} // namespace

BoundReport bound_report(const LinearCode& code, const GonalitySequence& gs, long m,
                         const ReportOptions& options) {
    BoundReport rep = report_common(code.length(), code.dimension(), m, gs, 0);

    rep.self_orthogonal = code.is_self_orthogonal();
    if (options.distance_cap > 0) {
        rep.min_dist = code.min_distance(options.distance_cap);
        if (rep.self_orthogonal && 2 * *rep.min_dist <= rep.n + 1)
            rep.fso = {true, fso_delta_bound(rep.n, rep.k, *rep.min_dist),
                       "d = " + std::to_string(*rep.min_dist)};
    }
    if (options.exact_profile) rep.exact_s = code.state_profile().s_max;
    if (options.search_strategy) {
        rep.search = absolute_complexity_search(code, *options.search_strategy,
                                                options.search_budget, options.search_seed,
                                                options.workers);
        rep.searched_s = rep.search->best_s;
    }
    check_report_invariant(rep);
    return rep;
}

BoundReport bound_report(const AGParams& params) {
    BoundReport rep =
        report_common(params.n, params.k, params.m, params.gs, params.abundance);
    check_report_invariant(rep);
    return rep;
}

namespace {

nlohmann::ordered_json entry_json(const BoundEntry& e) {
    nlohmann::ordered_json j;
    j["applicable"] = e.applicable;
    if (e.applicable) j["value"] = e.value;
    if (!e.note.empty()) j["note"] = e.note;
    return j;
}

} // namespace

std::string report_json(const BoundReport& rep) {
    nlohmann::ordered_json j;
    j["n"] = rep.n;
    j["k"] = rep.k;
    j["m"] = rep.m;
    j["g"] = rep.g;
    j["gamma2"] = rep.gamma2;
    j["wolf"] = rep.wolf;
    j["equality_region"] = rep.in_equality_region;
    j["clifford"] = entry_json(rep.clifford);
    j["goppa_like"] = entry_json(rep.goppa_like);
    j["gonality_r"] = entry_json(rep.gonality_r);
    if (rep.gonality_r_chained) j["gonality_r_chained"] = *rep.gonality_r_chained;
    j["gonality_gamma2"] = entry_json(rep.gonality_gamma2);
    j["fso"] = entry_json(rep.fso);
    j["self_orthogonal"] = rep.self_orthogonal;
    if (rep.min_dist) j["min_distance"] = *rep.min_dist;
    if (rep.exact_s) j["exact_s"] = *rep.exact_s;
    if (rep.searched_s) j["searched_s"] = *rep.searched_s;
    if (rep.search) {
        nlohmann::ordered_json s;
        s["strategy"] = strategy_name(rep.search->strategy);
        s["best_s"] = rep.search->best_s;
        s["evaluations"] = rep.search->evaluations;
        std::vector<std::size_t> one_based;
        for (std::size_t v : rep.search->best_permutation) one_based.push_back(v + 1);
        s["best_permutation"] = one_based;
        j["search"] = s;
    }
    return j.dump(2) + "\n";
}

std::string report_text(const BoundReport& rep) {
    std::ostringstream os;
    os << "code [" << rep.n << ", " << rep.k << "]  m = " << rep.m << "  g = " << rep.g
       << "  gamma2 = " << rep.gamma2 << "\n";
    os << "  wolf upper bound      " << rep.wolf << "\n";
    os << "  equality region       " << (rep.in_equality_region ? "yes (s = w)" : "no")
       << "\n";
    auto line = [&os](const char* name, const BoundEntry& e) {
        os << "  " << name;
        if (e.applicable)
            os << e.value << (e.note.empty() ? "" : "  (" + e.note + ")");
        else
            os << "-  (" << e.note << ")";
        os << "\n";
    };
    line("clifford lower        ", rep.clifford);
    line("goppa-like lower      ", rep.goppa_like);
    line("gonality R lower      ", rep.gonality_r);
    if (rep.gonality_r_chained)
        os << "  gonality R chained    " << *rep.gonality_r_chained << "  (w - R(2g-2))\n";
    line("gonality gamma2 lower ", rep.gonality_gamma2);
    line("fso lower             ", rep.fso);
    os << "  self-orthogonal       " << (rep.self_orthogonal ? "yes" : "no") << "\n";
    if (rep.min_dist) os << "  min distance          " << *rep.min_dist << "\n";
    if (rep.exact_s) os << "  exact s (this order)  " << *rep.exact_s << "\n";
    if (rep.searched_s) os << "  searched s (upper)    " << *rep.searched_s << "\n";
    return os.str();
}

std::string report_csv(const BoundReport& rep) {
    std::ostringstream os;
    os << "n,k,m,g,gamma2,wolf,equality_region,clifford,goppa_like,gonality_r,"
          "gonality_gamma2,fso,min_distance,exact_s,searched_s\n";
    auto opt_entry = [](const BoundEntry& e) {
        return e.applicable ? std::to_string(e.value) : std::string();
    };
    os << rep.n << ',' << rep.k << ',' << rep.m << ',' << rep.g << ',' << rep.gamma2 << ','
       << rep.wolf << ',' << (rep.in_equality_region ? 1 : 0) << ','
       << opt_entry(rep.clifford) << ',' << opt_entry(rep.goppa_like) << ','
       << opt_entry(rep.gonality_r) << ',' << opt_entry(rep.gonality_gamma2) << ','
       << opt_entry(rep.fso) << ','
       << (rep.min_dist ? std::to_string(*rep.min_dist) : std::string()) << ','
       << (rep.exact_s ? std::to_string(*rep.exact_s) : std::string()) << ','
       << (rep.searched_s ? std::to_string(*rep.searched_s) : std::string()) << "\n";
    return os.str();
}

} // namespace agtrellis
