// agtrellis: trellis state complexity of codes from curves
// Copyright 2026 The agtrellis authors.
// Licensed under the Apache License, Version 2.0.
#include "agtrellis/linear_code.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "agtrellis/rng.hpp"

namespace agtrellis {

namespace {

// Rank of successive column prefixes, columns visited in the given order:
// result[i] = rank of the submatrix on the first i visited columns.
std::vector<std::size_t> cumulative_column_ranks(const Matrix& g,
                                                 std::span<const std::size_t> order) {
    const Field& f = *g.field();
    const std::size_t k = g.rows();
    std::vector<std::vector<felem>> basis_by_lead(k);
    std::vector<char> has_lead(k, 0);
    std::vector<std::size_t> out;
    out.reserve(order.size() + 1);
    out.push_back(0);
    std::vector<felem> col(k);
    std::size_t rank = 0;
    for (std::size_t j : order) {
        for (std::size_t r = 0; r < k; ++r) col[r] = g(r, j);
        for (std::size_t pos = 0; pos < k; ++pos) {
            if (col[pos] == 0) continue;
            if (has_lead[pos]) {
                felem v = col[pos];
                const auto& bv = basis_by_lead[pos];
                for (std::size_t r = pos; r < k; ++r) col[r] = f.sub(col[r], f.mul(v, bv[r]));
            } else {
                felem s = f.inv(col[pos]);
                auto& bv = basis_by_lead[pos];
                bv.assign(k, 0);
                for (std::size_t r = pos; r < k; ++r) bv[r] = f.mul(col[r], s);
                has_lead[pos] = 1;
                ++rank;
                break;
            }
        }
        out.push_back(rank);
    }
    return out;
}

StateProfile profile_from_matrix(const Matrix& g) {
    const std::size_t n = g.cols(), k = g.rows();
    std::vector<std::size_t> fwd(n), rev(n);
    std::iota(fwd.begin(), fwd.end(), std::size_t{0});
    for (std::size_t j = 0; j < n; ++j) rev[j] = n - 1 - j;
    auto prefix = cumulative_column_ranks(g, fwd); // prefix[i] = rank of cols [0, i)
    auto suffix = cumulative_column_ranks(g, rev); // suffix[t] = rank of last t cols

    StateProfile sp;
    sp.past.resize(n + 1);
    sp.future.resize(n + 1);
    sp.delta.resize(n + 1);
    sp.s.resize(n + 1);
    sp.delta_min = k;
    for (std::size_t i = 0; i <= n; ++i) {
        sp.future[i] = k - prefix[i];
        sp.past[i] = k - suffix[n - i];
        sp.delta[i] = sp.past[i] + sp.future[i];
        sp.delta_min = std::min(sp.delta_min, sp.delta[i]);
    }
    sp.s_max = 0;
    for (std::size_t i = 0; i <= n; ++i) {
        sp.s[i] = k - sp.delta[i];
        sp.s_max = std::max(sp.s_max, sp.s[i]);
    }
    for (std::size_t i = 0; i <= n; ++i)
        if (sp.s[i] == sp.s_max) sp.argmax.push_back(i);
    return sp;
}

Matrix permuted_columns(const Matrix& g, const Permutation& perm) {
    Matrix out(g.field(), g.rows(), g.cols());
    for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t j = 0; j < g.cols(); ++j) out(r, j) = g(r, perm[j]);
    return out;
}

std::size_t s_of_permutation(const Matrix& g, const Permutation& perm) {
    return profile_from_matrix(permuted_columns(g, perm)).s_max;
}

std::uint64_t checked_pow(std::uint64_t base, std::size_t e, std::uint64_t clamp) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (v > clamp / base) return clamp + 1;
        v *= base;
    }
    return v;
}

} // namespace

Permutation identity_permutation(std::size_t n) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    return p;
}

bool is_permutation(const Permutation& perm) {
    std::vector<char> seen(perm.size(), 0);
    for (std::size_t v : perm) {
        if (v >= perm.size() || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

const char* strategy_name(SearchStrategy s) {
    switch (s) {
        case SearchStrategy::Exhaustive: return "exhaustive";
        case SearchStrategy::Random: return "random";
        case SearchStrategy::Greedy: return "greedy";
    }
    return "?";
}

LinearCode LinearCode::from_generator(const Matrix& g) {
    auto e = g.rref();
    if (e.rank == 0) throw Error(Errc::ZeroMatrix, "generator spans the zero code");
    Matrix basis(g.field(), e.rank, g.cols());
    for (std::size_t r = 0; r < e.rank; ++r)
        for (std::size_t c = 0; c < g.cols(); ++c) basis(r, c) = e.reduced(r, c);
    return LinearCode(std::move(basis));
}

std::size_t LinearCode::past_dim(std::size_t i) const {
    const std::size_t n = length();
    if (i > n) throw Error(Errc::IndexOutOfRange, "cut position");
    std::vector<std::size_t> cols(n - i);
    std::iota(cols.begin(), cols.end(), i);
    return dimension() - g_.rank_of_columns(cols);
}

std::size_t LinearCode::future_dim(std::size_t i) const {
    const std::size_t n = length();
    if (i > n) throw Error(Errc::IndexOutOfRange, "cut position");
    std::vector<std::size_t> cols(i);
    std::iota(cols.begin(), cols.end(), std::size_t{0});
    return dimension() - g_.rank_of_columns(cols);
}

StateProfile LinearCode::state_profile() const { return profile_from_matrix(g_); }

LinearCode LinearCode::dual() const {
    if (dimension() == length())
        throw Error(Errc::SelfDualDegenerate, "dual of the full space is the zero code");
    return from_generator(g_.kernel_basis());
}

std::size_t LinearCode::min_distance(std::uint64_t cap) const {
    const std::size_t n = length(), k = dimension();
    const unsigned q = field()->order();
    if (checked_pow(q, k, cap) > cap)
        throw Error(Errc::EnumerationTooLarge,
                    "q^k exceeds the enumeration cap of " + std::to_string(cap));
    const Field& f = *field();

    // Enumerate one representative per scalar class: the first nonzero
    // message coefficient is pinned to 1.
    std::size_t best = n;
    std::vector<std::vector<felem>> buf(k + 1, std::vector<felem>(n));

    auto weight = [n](const std::vector<felem>& v) {
        std::size_t w = 0;
        for (std::size_t c = 0; c < n; ++c) w += v[c] != 0;
        return w;
    };

    // buf[j] holds the partial codeword after rows < j are decided.
    auto dfs = [&](auto&& self, std::size_t j) -> void {
        if (j == k) {
            best = std::min(best, weight(buf[k]));
            return;
        }
        for (unsigned c = 0; c < q; ++c) {
            if (c == 0) {
                buf[j + 1] = buf[j];
            } else {
                for (std::size_t t = 0; t < n; ++t)
                    buf[j + 1][t] = f.add(buf[j][t], f.mul(static_cast<felem>(c), g_(j, t)));
            }
            self(self, j + 1);
        }
    };

    for (std::size_t lead = 0; lead < k; ++lead) {
        for (std::size_t t = 0; t < n; ++t) buf[lead + 1][t] = g_(lead, t);
        dfs(dfs, lead + 1);
    }
    return best;
}

LinearCode LinearCode::permuted(const Permutation& perm) const {
    if (perm.size() != length() || !is_permutation(perm))
        throw Error(Errc::NotAPermutation, "invalid coordinate permutation");
    return from_generator(permuted_columns(g_, perm));
}

bool LinearCode::is_self_orthogonal() const {
    return mat_mul(g_, g_.transposed()).is_zero();
}

bool LinearCode::is_formally_self_orthogonal(std::span<const felem> weights) const {
    const std::size_t n = length(), k = dimension();
    if (weights.size() != n) throw Error(Errc::ShapeMismatch, "weight tuple length");
    for (felem w : weights)
        if (w == 0) throw Error(Errc::ZeroWeightEntry, "weight tuple must be nonzero");
    const Field& f = *field();
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i; j < k; ++j) {
            felem acc = 0;
            for (std::size_t t = 0; t < n; ++t)
                acc = f.add(acc, f.mul(weights[t], f.mul(g_(i, t), g_(j, t))));
            if (acc != 0) return false;
        }
    }
    return true;
}

std::optional<std::vector<felem>> LinearCode::find_fso_witness() const {
    const std::size_t n = length();
    if (n > 10)
        throw Error(Errc::EnumerationTooLarge,
                    "witness search covers (q-1)^n tuples; supply weights for n > 10");
    const unsigned q = field()->order();
    std::vector<felem> w(n, 1);
    while (true) {
        if (is_formally_self_orthogonal(w)) return w;
        std::size_t pos = 0;
        while (pos < n && w[pos] == q - 1) w[pos++] = 1;
        if (pos == n) return std::nullopt;
        ++w[pos];
    }
}

std::vector<std::size_t> LinearCode::fso_step_violations() const {
    StateProfile sp = state_profile();
    std::vector<std::size_t> bad;
    for (std::size_t i = 1; i <= length(); ++i)
        if (sp.past[i] != sp.past[i - 1] && sp.future[i] != sp.future[i - 1])
            bad.push_back(i);
    return bad;
}

namespace {

// Evaluates the given permutations and returns the (s, index) minimum,
// identical for any worker count.
std::pair<std::size_t, std::size_t> best_of(const Matrix& g,
                                            const std::vector<Permutation>& perms,
                                            unsigned workers) {
    std::vector<std::size_t> s_values(perms.size());
    if (workers <= 1 || perms.size() < 2 * workers) {
        for (std::size_t i = 0; i < perms.size(); ++i) s_values[i] = s_of_permutation(g, perms[i]);
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (perms.size() + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            std::size_t lo = w * chunk, hi = std::min(perms.size(), lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back([&, lo, hi] {
                for (std::size_t i = lo; i < hi; ++i) s_values[i] = s_of_permutation(g, perms[i]);
            });
        }
        for (auto& t : pool) t.join();
    }
    std::size_t best_i = 0;
    for (std::size_t i = 1; i < perms.size(); ++i)
        if (s_values[i] < s_values[best_i]) best_i = i;
    return {s_values[best_i], best_i};
}

} // namespace

std::size_t permuted_state_complexity(const LinearCode& code, const Permutation& perm) {
    if (perm.size() != code.length() || !is_permutation(perm))
        throw Error(Errc::NotAPermutation, "invalid coordinate permutation");
    return s_of_permutation(code.generator(), perm);
}

SearchResult absolute_complexity_search(const LinearCode& code, SearchStrategy strategy,
                                        std::uint64_t budget, std::uint64_t seed,
                                        unsigned workers) {
    if (budget == 0) throw Error(Errc::BudgetZero, "search budget must be positive");
    const std::size_t n = code.length();
    const Matrix& g = code.generator();

    SearchResult result;
    result.strategy = strategy;

    if (strategy == SearchStrategy::Exhaustive) {
        if (n > 8)
            throw Error(Errc::ExhaustiveTooLarge, "exhaustive search is capped at n <= 8");
        Permutation perm = identity_permutation(n);
        result.best_s = s_of_permutation(g, perm);
        result.best_permutation = perm;
        result.evaluations = 1;
        while (std::next_permutation(perm.begin(), perm.end())) {
            std::size_t s = s_of_permutation(g, perm);
            ++result.evaluations;
            if (s < result.best_s) {
                result.best_s = s;
                result.best_permutation = perm;
            }
        }
        return result;
    }

    Rng rng(seed);
    std::uint64_t sample_budget =
        strategy == SearchStrategy::Random ? budget : std::max<std::uint64_t>(1, budget / 2);

    std::vector<Permutation> draws;
    draws.reserve(sample_budget);
    for (std::uint64_t i = 0; i < sample_budget; ++i) {
        Permutation p = identity_permutation(n);
        rng.shuffle(p);
        draws.push_back(std::move(p));
    }
    auto [best_s, best_i] = best_of(g, draws, workers);
    result.best_s = best_s;
    result.best_permutation = draws[best_i];
    result.evaluations = sample_budget;

    if (strategy == SearchStrategy::Random) return result;

    // Steepest-descent hill climbing over adjacent transpositions.
    std::uint64_t remaining = budget - sample_budget;
    bool improved = true;
    while (improved && remaining > 0) {
        improved = false;
        std::size_t best_pos = 0;
        std::size_t best_val = result.best_s;
        for (std::size_t pos = 0; pos + 1 < n && remaining > 0; ++pos) {
            Permutation cand = result.best_permutation;
            std::swap(cand[pos], cand[pos + 1]);
            std::size_t s = s_of_permutation(g, cand);
            ++result.evaluations;
            --remaining;
            if (s < best_val) {
                best_val = s;
                best_pos = pos;
                improved = true;
            }
        }
        if (improved) {
            std::swap(result.best_permutation[best_pos], result.best_permutation[best_pos + 1]);
            result.best_s = best_val;
        }
    }
    return result;
}

} // namespace agtrellis
