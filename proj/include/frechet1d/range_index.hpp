#pragma once

// Positional value-range queries over a fixed array: leftmost/rightmost index
// inside a window whose value lies in (or outside) a given interval.  Built as
// a wavelet matrix over coordinate-compressed values, so queries touch
// O(log sigma) implicit nodes; a visit counter is kept for instrumentation.

#include <atomic>
#include <cstdint>
#include <optional>
#include <vector>

namespace frechet1d {

namespace detail {

class BitRank {
public:
    void build(const std::vector<bool>& bits);
    size_t size() const { return n_; }
    bool get(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    size_t rank1(size_t i) const;  // ones in [0, i)
    size_t rank0(size_t i) const { return i - rank1(i); }
    size_t select0(size_t k) const;  // position of the k-th zero, k 0-based
    size_t select1(size_t k) const;

private:
    size_t n_ = 0;
    std::vector<uint64_t> words_;
    std::vector<uint32_t> blocks_;  // ones in [0, 64*i)
};

}  // namespace detail

class RangeIndex {
public:
    explicit RangeIndex(const std::vector<double>& values);

    // moves and copies carry the visit counter value across
    RangeIndex(const RangeIndex& o)
        : n_(o.n_), levels_(o.levels_), sorted_(o.sorted_), bits_(o.bits_), zeros_(o.zeros_),
          visits_(o.nodes_visited()) {}
    RangeIndex(RangeIndex&& o) noexcept
        : n_(o.n_), levels_(o.levels_), sorted_(std::move(o.sorted_)), bits_(std::move(o.bits_)),
          zeros_(std::move(o.zeros_)), visits_(o.nodes_visited()) {}
    RangeIndex& operator=(const RangeIndex& o) {
        n_ = o.n_;
        levels_ = o.levels_;
        sorted_ = o.sorted_;
        bits_ = o.bits_;
        zeros_ = o.zeros_;
        visits_.store(o.nodes_visited(), std::memory_order_relaxed);
        return *this;
    }
    RangeIndex& operator=(RangeIndex&& o) noexcept {
        n_ = o.n_;
        levels_ = o.levels_;
        sorted_ = std::move(o.sorted_);
        bits_ = std::move(o.bits_);
        zeros_ = std::move(o.zeros_);
        visits_.store(o.nodes_visited(), std::memory_order_relaxed);
        return *this;
    }

    int size() const { return int(n_); }

    /// Smallest index in [l, r] (1-based, inclusive) whose value lies in
    /// [lo, hi]; nullopt if none.  Bounds may be +-infinity.
    std::optional<int> leftmost_in(int l, int r, double lo, double hi) const;
    std::optional<int> rightmost_in(int l, int r, double lo, double hi) const;

    /// Same, but for values strictly outside [lo, hi].
    std::optional<int> leftmost_outside(int l, int r, double lo, double hi) const;
    std::optional<int> rightmost_outside(int l, int r, double lo, double hi) const;

    uint64_t nodes_visited() const { return visits_.load(std::memory_order_relaxed); }

private:
    // rank interval [a, b] (inclusive) of compressed values; -1 as "none"
    int64_t leftmost_rank(size_t l, size_t r, int64_t a, int64_t b) const;
    int64_t rightmost_rank(size_t l, size_t r, int64_t a, int64_t b) const;
    int64_t walk(int level, size_t l, size_t r, uint64_t lo, uint64_t hi, uint64_t a, uint64_t b,
                 bool leftmost) const;
    size_t map_up(int level, size_t pos, uint64_t node_lo) const;

    size_t n_ = 0;
    int levels_ = 0;
    std::vector<double> sorted_;  // distinct values, ascending
    std::vector<detail::BitRank> bits_;
    std::vector<size_t> zeros_;
    // atomic so concurrent queries on a shared index stay race-free
    mutable std::atomic<uint64_t> visits_{0};
};

}  // namespace frechet1d
