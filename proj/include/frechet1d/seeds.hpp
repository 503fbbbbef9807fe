#pragma once

// Boundary seeds: the earliest parameter w on curve B such that the whole
// prefix A[1, a_end] matches B[1, w] within delta.  Two computations are
// provided: a greedy backward walk that alternates first-entry queries
// between the curves (exact whenever both prefixes fit inside an interval
// of width 2*delta), and an exact free-space sweep over the prefix pair
// used when the width precondition fails.

#include <optional>
#include <vector>

#include "frechet1d/curve_view.hpp"

namespace frechet1d {

struct SeedOutcome {
    enum Kind { kFound, kNone, kOverrun };
    Kind kind = kNone;
    Param w{1, 0.0};  // meaningful only when kind == kFound
};

/// The greedy boundary walk.  Finds the first entry w of B into the band
/// [max A[1,a_end] - delta, min A[1,a_end] + delta], then repeatedly
/// tightens matched prefixes of A and B backwards until both reach their
/// start (returns w) or one side stalls (returns kNone, "no match").
/// kOverrun reports an iteration overrun; it cannot occur when both prefix
/// widths are at most 2*delta, where the walk is exact.
SeedOutcome algorithm1_seed(const CurveView& a, int a_end, const CurveView& b, int b_end,
                            double delta);

/// Public seed contract: minimum w <= b_end with the prefix match above, or
/// nullopt ("infinity") when the walk proves none exists.  Precondition for
/// exactness: A[1, a_end] lies within an interval of width <= 2*delta.
std::optional<Param> boundary_seed(const CurveView& a, int a_end, const CurveView& b, int b_end,
                                   double delta);

/// Exact seed by a rolling free-space sweep over A[1, a_end] x B[1, b_end]:
/// the minimal B-parameter reachable on the boundary line A = a_end.
/// O(a_end * b_end) time, O(b_end) memory; no width precondition.
std::optional<Param> dp_first_reach(const CurveView& a, int a_end, const CurveView& b, int b_end,
                                    double delta);

/// Dispatching seed used by the decision pipeline: the greedy walk when both
/// prefix widths are within 2*delta (its proven scope), the exact sweep
/// otherwise.  Sets *used_dp when the sweep ran.
std::optional<Param> prefix_seed(const CurveView& a, int a_end, const CurveView& b, int b_end,
                                 double delta, bool* used_dp = nullptr);

/// A known-reachable point on a boundary line of a free-space rectangle:
/// either on A's first vertex line (a == 1.0, b possibly fractional) or on
/// a vertex line of B (b integral, a possibly fractional).  Parameters are
/// 1-based positions into the value vectors.  Callers must only pass points
/// whose two curve values are within delta of each other; the sweep clamps
/// away only the rounding of the parameter's floating representation.
struct ReachSeed {
    double a = 1.0;
    double b = 1.0;
};

/// Exact free-space reachability of the end corner (|A|, |B|) over the full
/// rectangle A x B from a set of seed points.  When free_left_edge is set,
/// every in-band point of the line {s = 1} counts as a seed as well.
/// O(|A| * |B|) time, O(|B|) memory.
bool region_reach(const std::vector<double>& a_vals, const std::vector<double>& b_vals,
                  double delta, const std::vector<ReachSeed>& seeds, bool free_left_edge);

}  // namespace frechet1d
