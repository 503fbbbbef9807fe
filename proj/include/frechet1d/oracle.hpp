#pragma once

// The distance decision oracle.  An Oracle preprocesses one series P
// (canonical form, removal-threshold hierarchy, positional value index,
// envelopes); decide(P, Q, delta) then answers "Fréchet distance <= delta?"
// in time near-linear in |Q| and polylogarithmic in |P|.  The decision runs
// on a grid over the extended signature vertices of both curves: boundary
// seeds fix where the first pieces can match, exit points are propagated
// across the grid cell by cell with positional range queries, and a final
// backward seed pass decides acceptance.  A successful grid decision can
// report a witness: a coupled visiting order certifying the match.

#include <cstdint>
#include <optional>
#include <vector>

#include "frechet1d/range_index.hpp"
#include "frechet1d/signature.hpp"

namespace frechet1d {

struct Oracle {
    TimeSeries series;     // canonical
    int original_length = 0;
    SignatureHierarchy hierarchy;
    RangeIndex index;
    PrefixEnvelope envelope;
};

/// Preprocesses a raw series: canonicalize, build hierarchy + index +
/// envelopes.  O(n log n).
Oracle build_oracle(const TimeSeries& raw);

/// Query-side artifacts, reusable across many deltas for the same Q.
struct PreparedQuery {
    TimeSeries series;  // canonical
    SignatureHierarchy hierarchy;
    RangeIndex index;
    PrefixEnvelope envelope;
};

PreparedQuery prepare_query(const TimeSeries& raw);

struct DecideStats {
    bool early_exit = false;           // signature-size bound refuted the match
    bool degenerate_fallback = false;  // tiny signature; the reference sweep answered
    bool seed_dp = false;              // a boundary seed needed the exact sweep
    std::uint64_t grid_cells = 0;      // propagation cells processed
    std::uint64_t index_nodes = 0;     // wavelet nodes visited by grid queries
};

/// True iff the continuous Fréchet distance between P and Q is <= delta.
/// Throws std::invalid_argument for negative delta.
bool decide(const Oracle& o, const PreparedQuery& q, double delta, DecideStats* stats = nullptr);
bool decide(const Oracle& o, const TimeSeries& raw_q, double delta, DecideStats* stats = nullptr);

/// A coupled visiting order: matched parameter pairs on (P, Q), both
/// coordinates non-decreasing, every pair within delta, covering all
/// extended signature vertices of both curves.  Certifies distance <= delta.
struct WitnessPair {
    double p = 0.0, q = 0.0;
};

struct CoupledVisitingOrder {
    double delta = 0.0;
    std::vector<WitnessPair> pairs;
};

struct DecideResult {
    bool accepted = false;
    bool grid_path = false;  // false when the degenerate fallback answered
    std::optional<CoupledVisitingOrder> witness;  // present iff accepted via the grid
};

/// decide + witness extraction from the propagation back-pointers.  The
/// degenerate fallback yields accepted with grid_path == false and no
/// witness (the distinct "no witness" outcome).
DecideResult decide_with_witness(const Oracle& o, const PreparedQuery& q, double delta);

/// Validates a coupled visiting order against the curves it refers to
/// (canonical P and Q as used by the oracle): monotone pairs, pairwise
/// value distance <= delta, all extended signature vertices of both curves
/// covered, and the reference sweep accepts the first and last pieces.
/// Comparisons allow 1e-9 absolute slack for roundoff in interpolated
/// parameters.
bool check_witness(const TimeSeries& p, const TimeSeries& q, const CoupledVisitingOrder& w);

}  // namespace frechet1d
