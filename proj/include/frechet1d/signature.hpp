#pragma once

// Signatures of canonical series: the nested hierarchy of removal thresholds,
// size queries, extraction of the extended signature at a given delta, and a
// clause-by-clause validator used as the correctness arbiter in tests.

#include <string>
#include <vector>

#include "frechet1d/series.hpp"

namespace frechet1d {

struct ExtendedSignature {
    double delta = 0.0;
    std::vector<int> indices;  // extended signature vertices, ascending, first = 1, last = n
    std::vector<int> core;     // plain signature vertices; subset of indices
    bool degenerate = false;   // no signature exists at delta, or the core is just the endpoints

    int size() const { return int(indices.size()); }
};

struct SignatureHierarchy {
    TimeSeries series;  // canonical host series
    std::vector<double> removal_threshold;  // per vertex (1-based offset), +inf for survivors
    std::vector<double> levels;             // distinct finite thresholds, ascending
    std::vector<int> by_threshold;          // vertices by (threshold desc, index asc)
    std::vector<double> thresholds_sorted;  // all thresholds, ascending
    std::vector<int> prefix_argmin, prefix_argmax;  // earliest extreme index of P[1, i]
    std::vector<int> suffix_argmin, suffix_argmax;  // earliest extreme index of P[i, n]

    double threshold(int vertex) const { return removal_threshold[size_t(vertex - 1)]; }
};

/// Builds the removal-threshold hierarchy in O(n log n).  Adjacent interior
/// extrema retire pairwise at half their amplitude; a vertex whose neighbour
/// is a curve endpoint retires alone at the full edge amplitude; endpoints
/// never retire.  The queue is ordered by these retirement thresholds (ties
/// by left index), which keeps the retirement sequence monotone and the
/// resulting vertex sets nested.
SignatureHierarchy build_hierarchy(const TimeSeries& s);

/// Number of vertices with removal_threshold > delta; O(log n).
int signature_size_at(const SignatureHierarchy& h, double delta);

/// Extended signature at delta in O(l log l) for output size l.
ExtendedSignature extract_extended(const SignatureHierarchy& h, double delta);

struct SignatureCheck {
    bool ok = true;
    char clause = 0;   // 'a'..'d': first violated clause
    int position = 0;  // 1-based position k in the candidate sequence

    explicit operator bool() const { return ok; }
};

/// Checks the four signature clauses for a candidate vertex sequence:
/// (a) interior vertices lie strictly outside the segment of their
/// neighbours, (b) each piece is 2*delta-monotone, (c) interior edges span
/// more than 2*delta and end edges more than delta, (d) each piece stays in
/// its edge's segment, end pieces with delta slack.
SignatureCheck validate_signature(const TimeSeries& s, const std::vector<int>& indices,
                                  double delta);

}  // namespace frechet1d
