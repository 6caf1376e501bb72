// agtrellis: trellis state complexity of codes from curves
// Copyright 2026 The agtrellis authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "agtrellis/errors.hpp"

namespace agtrellis {

enum class GsOrigin { Plane, Hyperelliptic, Explicit };
const char* origin_name(GsOrigin o);

/// Gonality sequence of a curve with a rational point: the strictly
/// increasing values gamma_1..gamma_g, extended past the genus by the
/// affine tail gamma_i = g + i - 1. Viewed as a subset GS of
/// {-1} union {0, 1, 2, ...}; the g+1 missing values up to 2g-1 are the
/// gaps, the largest gap being 2g-1.
///
/// Constructors enforce the structural invariants:
///   gamma_1 = 0, gamma_g = 2g-2, strict increase,
///   2i-2 <= gamma_i <= g+i-2 for 2 <= i <= g,
///   and the reflection symmetry a in GS <=> 2g-1-a not in GS
///   for 0 <= a <= 2g-1.
class GonalitySequence {
  public:
    /// Sequence of a nonsingular plane curve of degree r+1: the first g
    /// elements of the numerical semigroup generated by r and r+1, with
    /// g = r(r-1)/2. Requires r >= 2.
    static GonalitySequence plane(int r);

    /// Hyperelliptic sequence 0, 2, 4, ..., 2g-2. Requires g >= 2.
    static GonalitySequence hyperelliptic(int g);

    /// Explicit values; every invariant is validated and violations are
    /// rejected (NotIncreasing / BoundsViolated / SymmetryViolated).
    static GonalitySequence from_values(int g, std::vector<int> gammas);

    int genus() const { return g_; }
    const std::vector<int>& values() const { return gammas_; } // gamma_1..gamma_g
    GsOrigin origin() const { return origin_; }
    std::optional<int> plane_degree_param() const; // r when origin is Plane

    /// gamma_i for any i >= 1, using the tail rule beyond the genus.
    int gamma(int i) const;

    /// Membership of a in GS, for a >= -1.
    bool contains(int a) const;

    /// The g+1 gaps, increasing, from -1 up to 2g-1.
    std::vector<int> gaps() const;

    /// True iff gamma_i = 2i-2 for some 2 <= i <= g-1 (the witness that
    /// characterizes hyperelliptic sequences).
    bool is_hyperelliptic_shape() const;

  private:
    GonalitySequence(int g, std::vector<int> gammas, GsOrigin origin, int plane_r)
        : g_(g), gammas_(std::move(gammas)), origin_(origin), plane_r_(plane_r) {}

    int g_;
    std::vector<int> gammas_;
    GsOrigin origin_;
    int plane_r_;
};

/// Number of gonality numbers <= a; defined for a >= -1 with value 0 at
/// a = -1 and the affine tail g + (a - (2g-1)) for a >= 2g-1.
int ell_tilde(const GonalitySequence& gs, int a);

/// Closed form of ell_tilde for a plane-curve sequence: with
/// a = alpha*r + beta, 0 <= beta < r, the count is
/// alpha(alpha+1)/2 + min(alpha, beta) + 1 (a >= 0).
int ell_tilde_plane(int r, int a);

struct RValue {
    int value;
    int a, b; // witness split with a + b = N
};

/// R(N) = min{ ell_tilde(a) + ell_tilde(b) : a + b = N }, the definitional
/// brute force over all a in [-1, N+1]. Domain: -1 <= N <= 2g-2.
RValue r_bruteforce(const GonalitySequence& gs, int N);

/// Same minimum over the reduced candidate set: a = floor(N/2) plus the
/// gaps a <= N/2 whose successor lies in GS. Must agree with the brute
/// force everywhere.
int r_restricted(const GonalitySequence& gs, int N);

/// R(2g-2) in closed form: min{ 2*ell_tilde(g-1),
/// g - max_i(gamma_i - (2i-2)) }. The doubled term uses ell_tilde, the
/// reading under which the expression matches the brute force; doubling
/// R(g-1) instead does not (see r_genus_end_printed_term).
int r_at_2g_minus_2(const GonalitySequence& gs);

/// The alternative doubled term 2*R(g-1), kept for diagnostics: at r = 7
/// it undershoots the true R(2g-2).
int r_genus_end_printed_term(const GonalitySequence& gs);

/// Jump set of a plane-curve sequence in closed form:
/// { alpha*r + beta : -1 <= alpha <= r-1, 0 <= beta <= r-1,
///   2*beta + 2 <= alpha or beta = r-1 } minus {2g-1}, clipped to
/// [-1, 2g-2]. Cardinality r^2/4 (r even) or (r^2-1)/4 (r odd).
std::vector<int> plane_jumps(int r);

/// R(N) for a plane sequence by counting jumps <= N.
int r_plane_closed_form(int r, int N);

/// Midpoint-split expression for plane sequences: with
/// floor(N/2) = alpha*r + beta, 0 <= beta < r and alpha >= 1,
///   ell_tilde(alpha*r - 1) + ell_tilde(N - alpha*r + 1),
/// taking the min with the balanced split when floor(N/2) is a gap.
/// Returns nullopt when the alpha >= 1 hypothesis fails.
std::optional<int> r_plane_midpoint_form(int r, int N);

/// Row-formula value alpha(alpha+2)/4 + beta + 1 (alpha even) or
/// (alpha+1)^2/4 + beta + 1 (alpha odd) for N = alpha*r + beta with
/// -1 <= beta <= r-2, applicable when beta <= floor(alpha/2) - 1.
/// Kept as a diagnostic: it sits one below the true R(N) on its whole
/// applicable range.
std::optional<int> r_plane_row_formula_printed(int r, int N);

/// Hyperelliptic closed form floor((N+1)/2) + 1.
int r_hyperelliptic_closed_form(int N);

/// R over the whole domain [-1, 2g-2] with witnesses and the jump set,
/// cross-checked at construction: the restricted minimization and (for
/// plane sequences) the jump-count closed form and the midpoint form are
/// all asserted equal to the brute force.
class RTable {
  public:
    static RTable build(const GonalitySequence& gs);

    const GonalitySequence& sequence() const { return gs_; }
    int value_at(int N) const;     // R(N)
    RValue minimizer_at(int N) const;
    const std::vector<int>& jumps() const { return jumps_; }

  private:
    RTable(GonalitySequence gs) : gs_(std::move(gs)) {}
    GonalitySequence gs_;
    std::vector<RValue> table_; // index 0 corresponds to N = -1
    std::vector<int> jumps_;
};

} // namespace agtrellis
