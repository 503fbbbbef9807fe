#pragma once

// Ground-truth implementations, deliberately simple and independent of the
// oracle machinery: the classical free-space decision procedure, exhaustive
// exact distance via critical-value search, and the signature-range helper.

#include <vector>

#include "frechet1d/series.hpp"

namespace frechet1d {

struct ValueInterval {
    double lo, hi;

    friend bool operator==(const ValueInterval& a, const ValueInterval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

/// True iff the continuous Frechet distance of P and Q is at most delta.
/// Free-space interval propagation, O(nm) time, O(m) memory.
bool free_space_decide(const TimeSeries& P, const TimeSeries& Q, double delta);

/// Exact Frechet distance: smallest critical value accepted by
/// free_space_decide.  Critical values are all cross vertex distances and all
/// half pairwise vertex distances within each curve.
double brute_exact(const TimeSeries& P, const TimeSeries& Q);

/// Closed value ranges around the delta-signature vertices of P: 3*delta
/// around the first and last, delta around interior signature vertices.
std::vector<ValueInterval> corollary_ranges(const TimeSeries& P, double delta);

}  // namespace frechet1d
