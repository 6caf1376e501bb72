// agtrellis: trellis state complexity of codes from curves
// Copyright 2026 The agtrellis authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "agtrellis/matrix.hpp"

namespace agtrellis {

/// Per-index dimensions of the past/future subcodes of a linear code and
/// the derived state complexity profile. All vectors have n+1 entries,
/// indexed by the cut position i = 0..n.
///
/// past[i]   = dim{c in C : c is zero on coordinates i+1..n}
/// future[i] = dim{c in C : c is zero on coordinates 1..i}
/// delta[i]  = past[i] + future[i],   s[i] = k - delta[i]
struct StateProfile {
    std::vector<std::size_t> past, future, delta, s;
    std::size_t s_max = 0;    // the state complexity s(C)
    std::size_t delta_min = 0;
    std::vector<std::size_t> argmax; // cut positions attaining s_max
};

/// Coordinate permutation as 0-based images: column j of the permuted
/// code is column perm[j] of the source.
using Permutation = std::vector<std::size_t>;

Permutation identity_permutation(std::size_t n);
bool is_permutation(const Permutation& perm);

enum class SearchStrategy { Exhaustive, Random, Greedy };
const char* strategy_name(SearchStrategy s);

struct SearchResult {
    std::size_t best_s = 0;       // upper bound on the absolute state complexity
    Permutation best_permutation; // attains best_s
    std::uint64_t evaluations = 0;
    SearchStrategy strategy = SearchStrategy::Random;
};

/// A linear [n,k] code over a finite field, stored as the reduced
/// row-echelon basis of its row space: the code, not the generator
/// matrix handed in, is the object. Immutable.
class LinearCode {
  public:
    /// Reduces g to a full-rank RREF basis; k becomes rank(g).
    static LinearCode from_generator(const Matrix& g);

    const Matrix& generator() const { return g_; }
    const FieldPtr& field() const { return g_.field(); }
    std::size_t length() const { return g_.cols(); }
    std::size_t dimension() const { return g_.rows(); }

    /// dim of the i-th past subcode, 0 <= i <= n (rank-complement route).
    std::size_t past_dim(std::size_t i) const;
    /// dim of the i-th future subcode, 0 <= i <= n.
    std::size_t future_dim(std::size_t i) const;

    /// Full profile via two incremental column-rank sweeps, O(k^2 n).
    StateProfile state_profile() const;

    /// Dual code from the kernel of the generator. A full-space code
    /// (k = n) has the zero code as dual, which is not representable.
    LinearCode dual() const;

    /// Exact minimum Hamming weight by scalar-free message enumeration;
    /// requires q^k <= cap.
    std::size_t min_distance(std::uint64_t cap = kDefaultDistanceCap) const;

    LinearCode permuted(const Permutation& perm) const;

    /// True iff C is contained in its dual, i.e. G * G^T = 0.
    bool is_self_orthogonal() const;

    /// True iff every pair of generator rows g, g' satisfies
    /// sum_i weights[i] * g_i * g'_i = 0 (containment in weights * dual).
    bool is_formally_self_orthogonal(std::span<const felem> weights) const;

    /// Exhaustive witness search over the (q-1)^n nonzero weight tuples;
    /// offered for n <= 10 only.
    std::optional<std::vector<felem>> find_fso_witness() const;

    /// Cut positions i in 1..n where BOTH the past and the future
    /// dimension move; empty for formally self-orthogonal codes.
    std::vector<std::size_t> fso_step_violations() const;

    static constexpr std::uint64_t kDefaultDistanceCap = 1ull << 22;

  private:
    explicit LinearCode(Matrix g) : g_(std::move(g)) {}
    Matrix g_;
};

/// Minimizes s over coordinate permutations of the code.
///  - Exhaustive: all n! orders (n <= 8); the result is exact.
///  - Random: `budget` seeded samples.
///  - Greedy: half the budget on seeded samples, the remainder on
///    adjacent-transposition hill climbing from the best sample.
/// Deterministic given (strategy, budget, seed); the worker count only
/// parallelizes evaluation and never changes the result.
SearchResult absolute_complexity_search(const LinearCode& code, SearchStrategy strategy,
                                        std::uint64_t budget, std::uint64_t seed,
                                        unsigned workers = 1);

/// s of the column-permuted code, skipping re-canonicalization (column
/// ranks are row-space invariants). Matches permuted(perm).state_profile().
std::size_t permuted_state_complexity(const LinearCode& code, const Permutation& perm);

} // namespace agtrellis
