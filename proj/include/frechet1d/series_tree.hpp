#pragma once

// Segment tree over the vertex values of a series.  Serves range extrema and
// "first monotonicity violation" searches: the earliest position, scanning a
// window in either direction, where the value falls more than c below the
// running maximum (a drop) or rises more than c above the running minimum
// (a rise).  Each search descends O(log n) nodes.

#include <cstdint>
#include <optional>
#include <vector>

#include "frechet1d/series.hpp"

namespace frechet1d {

class SeriesTree {
public:
    explicit SeriesTree(const std::vector<double>& values);

    double range_min(int l, int r) const;  // 1-based inclusive
    double range_max(int l, int r) const;

    /// Smallest u in [l, r] with v[u] > min(seed_min, min v[l..u]) + c.
    std::optional<int> first_rise_after(int l, int r, double c, double seed_min = kInf) const;
    /// Smallest u in [l, r] with v[u] < max(seed_max, max v[l..u]) - c.
    std::optional<int> first_drop_after(int l, int r, double c, double seed_max = -kInf) const;
    /// Largest u in [l, r] with v[u] < max(seed_max, max v[u..r]) - c
    /// (first drop when the window is scanned right to left).
    std::optional<int> first_drop_backward(int l, int r, double c, double seed_max = -kInf) const;
    /// Largest u in [l, r] with v[u] > min(seed_min, min v[u..r]) + c.
    std::optional<int> first_rise_backward(int l, int r, double c, double seed_min = kInf) const;

    uint64_t nodes_visited() const { return visits_; }

private:
    struct Node {
        double mn, mx;
        double rise;  // max over i <= j within node of v[j] - v[i]
        double drop;  // max over i <= j within node of v[i] - v[j]
    };

    int query_dir(int node, int nl, int nr, int l, int r, double c, double& extreme, bool forward,
                  bool drop) const;
    int descend(int node, int nl, int nr, double c, double& extreme, bool forward,
                bool drop) const;

    int n_ = 0;
    size_t size_ = 1;  // leaves padded to a power of two
    std::vector<Node> t_;
    mutable uint64_t visits_ = 0;
};

}  // namespace frechet1d
