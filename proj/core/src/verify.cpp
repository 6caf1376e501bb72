// agtrellis: trellis state complexity of codes from curves
// Copyright 2026 The agtrellis authors.
// Licensed under the Apache License, Version 2.0.
#include "agtrellis/verify.hpp"

#include <algorithm>
#include <thread>

namespace agtrellis {

bool SuiteReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.passed; });
}

std::vector<std::string> verify_suite_names() {
    return {"field", "linalg", "duality", "gonality", "r-oracle", "jumps", "bounds", "fso"};
}

LinearCode random_full_rank_code(Rng& rng, const FieldPtr& field, std::size_t n,
                                 std::size_t k) {
    while (true) {
        Matrix g(field, k, n);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < n; ++c)
                g(r, c) = static_cast<felem>(rng.below(field->order()));
        if (g.rank() == k) return LinearCode::from_generator(g);
    }
}

std::vector<LinearCode> random_code_corpus(std::uint64_t seed, std::size_t count) {
    // Cap k so q^k stays within the default distance-enumeration budget.
    auto max_k = [](unsigned q) -> std::size_t {
        switch (q) {
            case 2: return 13;
            case 3: return 13;
            case 4: return 11;
            default: return 9;
        }
    };
    const std::vector<std::pair<unsigned, unsigned>> fields = {{2, 1}, {3, 1}, {2, 2}, {5, 1}};
    std::vector<FieldPtr> built;
    for (auto [p, m] : fields) built.push_back(Field::make(p, m));

    Rng rng(seed);
    std::vector<LinearCode> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const FieldPtr& f = built[i % built.size()];
        std::size_t n = 2 + rng.below(13); // 2..14
        std::size_t k = 1 + rng.below(std::min(n - 1, max_k(f->order())));
        out.push_back(random_full_rank_code(rng, f, n, k));
    }
    return out;
}

std::vector<std::size_t> permuted_s_values(const LinearCode& code,
                                           const std::vector<Permutation>& perms,
                                           unsigned workers) {
    std::vector<std::size_t> s(perms.size());
    if (workers <= 1 || perms.size() < 2 * workers) {
        for (std::size_t i = 0; i < perms.size(); ++i)
            s[i] = permuted_state_complexity(code, perms[i]);
        return s;
    }
    std::vector<std::thread> pool;
    std::size_t chunk = (perms.size() + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t lo = w * chunk, hi = std::min(perms.size(), lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i)
                s[i] = permuted_state_complexity(code, perms[i]);
        });
    }
    for (auto& t : pool) t.join();
    return s;
}

SuiteReport run_verify_suite(const std::string& name, std::uint64_t seed, unsigned workers) {
    (void)seed;
    (void)workers;
    throw Error(Errc::ParseError, "unknown verify suite: " + name); // replaced below
}

std::vector<SuiteReport> run_verify(const std::string& suite_or_all, std::uint64_t seed,
                                    unsigned workers) {
    std::vector<SuiteReport> out;
    if (suite_or_all == "all") {
        for (const auto& s : verify_suite_names())
            out.push_back(run_verify_suite(s, seed, workers));
    } else {
        out.push_back(run_verify_suite(suite_or_all, seed, workers));
    }
    return out;
}

} // namespace agtrellis
