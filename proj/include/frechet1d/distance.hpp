#pragma once

// Exact distance queries on top of the decision oracle: the distance is
// always one of the critical values -- a vertex-to-vertex distance across
// the curves or half a vertex-to-vertex distance within one curve -- so the
// query searches those families with the decision procedure, homing in by
// rank until a single candidate survives.

#include <cstdint>
#include <vector>

#include "frechet1d/oracle.hpp"

namespace frechet1d {

/// One family of candidate distance values, stored implicitly: the multiset
/// {|a - b| : a in A, b in B}, divided by two when `half` is set (the
/// within-curve families use B = A and include the diagonal zeros).  Both
/// sequences are sorted ascending.
struct CriticalFamily {
    std::vector<double> a, b;
    bool half = false;

    std::uint64_t total() const { return std::uint64_t(a.size()) * std::uint64_t(b.size()); }
};

CriticalFamily cross_family(const TimeSeries& p, const TimeSeries& q);
CriticalFamily intra_family(const TimeSeries& s);

/// Number of family elements <= x (multiset count); two-pointer sweep over
/// the sorted sequences, O(|A| + |B|).
std::uint64_t count_le(const CriticalFamily& f, double x);

/// Number of family elements strictly < x.
std::uint64_t count_lt(const CriticalFamily& f, double x);

enum class SelectMethod {
    kCounting,  // value-range bisection with count_le, snapped to elements
    kMatrix,    // randomized quickselect on the sorted difference matrix
};

/// k-th smallest family element, k in [1, total()], 1-based multiset rank.
/// Both methods return exact family elements and agree on every input.
/// Throws std::out_of_range for k outside the valid range.
double select_kth(const CriticalFamily& f, std::uint64_t k,
                  SelectMethod method = SelectMethod::kCounting);

struct DistanceStats {
    int rounds = 0;  // decision queries issued by the search (incl. the zero probe)
};

/// Exact Frechet distance between the indexed curve and Q.  Probes zero
/// first, then keeps per-family rank intervals of surviving candidates,
/// repeatedly bisecting the largest interval at its median element with the
/// decision oracle; the number of decision rounds is logarithmic in the
/// total candidate count.
double exact_distance(const Oracle& o, const PreparedQuery& q, DistanceStats* stats = nullptr);
double exact_distance(const Oracle& o, const TimeSeries& raw_q, DistanceStats* stats = nullptr);

}  // namespace frechet1d
