#include "frechet1d/range_index.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace frechet1d {

namespace detail {

void BitRank::build(const std::vector<bool>& bits) {
    n_ = bits.size();
    words_.assign((n_ + 63) / 64, 0);
    for (size_t i = 0; i < n_; ++i)
        if (bits[i]) words_[i >> 6] |= uint64_t(1) << (i & 63);
    blocks_.assign(words_.size() + 1, 0);
    for (size_t w = 0; w < words_.size(); ++w)
        blocks_[w + 1] = blocks_[w] + uint32_t(std::popcount(words_[w]));
}

size_t BitRank::rank1(size_t i) const {
    size_t w = i >> 6, off = i & 63;
    size_t r = blocks_[w];
    if (off) r += size_t(std::popcount(words_[w] & ((uint64_t(1) << off) - 1)));
    return r;
}

namespace {

size_t select_bit(const std::vector<uint32_t>& blocks, const std::vector<uint64_t>& words, size_t k,
                  bool one) {
    // first word whose prefix count (of the wanted bit) exceeds k
    size_t lo = 0, hi = words.size();
    while (lo + 1 < hi) {
        size_t mid = (lo + hi) / 2;
        size_t cnt = one ? blocks[mid] : mid * 64 - blocks[mid];
        if (cnt <= k)
            lo = mid;
        else
            hi = mid;
    }
    size_t done = one ? blocks[lo] : lo * 64 - blocks[lo];
    uint64_t w = one ? words[lo] : ~words[lo];
    size_t need = k - done;
    for (size_t b = 0; b < need; ++b) w &= w - 1;  // clear lowest set bits
    return lo * 64 + size_t(std::countr_zero(w));
}

}  // namespace

size_t BitRank::select0(size_t k) const { return select_bit(blocks_, words_, k, false); }
size_t BitRank::select1(size_t k) const { return select_bit(blocks_, words_, k, true); }

}  // namespace detail

namespace {

constexpr int64_t kNone = -1;

}  // namespace

RangeIndex::RangeIndex(const std::vector<double>& values) {
    n_ = values.size();
    sorted_ = values;
    std::sort(sorted_.begin(), sorted_.end());
    sorted_.erase(std::unique(sorted_.begin(), sorted_.end()), sorted_.end());
    size_t sigma = sorted_.size();
    levels_ = sigma <= 1 ? 0 : std::bit_width(sigma - 1);

    std::vector<uint32_t> cur(n_);
    for (size_t i = 0; i < n_; ++i)
        cur[i] = uint32_t(std::lower_bound(sorted_.begin(), sorted_.end(), values[i]) -
                          sorted_.begin());

    bits_.resize(size_t(levels_));
    zeros_.resize(size_t(levels_));
    std::vector<uint32_t> nxt(n_);
    std::vector<bool> level_bits(n_);
    for (int d = 0; d < levels_; ++d) {
        int shift = levels_ - 1 - d;
        size_t z = 0;
        for (size_t i = 0; i < n_; ++i) {
            bool b = (cur[i] >> shift) & 1;
            level_bits[i] = b;
            if (!b) ++z;
        }
        bits_[size_t(d)].build(level_bits);
        zeros_[size_t(d)] = z;
        size_t p0 = 0, p1 = z;
        for (size_t i = 0; i < n_; ++i) {
            if (level_bits[i])
                nxt[p1++] = cur[i];
            else
                nxt[p0++] = cur[i];
        }
        cur.swap(nxt);
    }
}

size_t RangeIndex::map_up(int level, size_t pos, uint64_t node_lo) const {
    for (int d = level - 1; d >= 0; --d) {
        bool b = (node_lo >> (levels_ - 1 - d)) & 1;
        pos = b ? bits_[size_t(d)].select1(pos - zeros_[size_t(d)]) : bits_[size_t(d)].select0(pos);
    }
    return pos;
}

int64_t RangeIndex::walk(int level, size_t l, size_t r, uint64_t lo, uint64_t hi, uint64_t a,
                         uint64_t b, bool leftmost) const {
    visits_.fetch_add(1, std::memory_order_relaxed);
    if (l >= r || b < lo || hi < a) return kNone;
    if (a <= lo && hi <= b) return int64_t(map_up(level, leftmost ? l : r - 1, lo));
    uint64_t mid = lo + ((hi - lo) >> 1);
    size_t l0 = bits_[size_t(level)].rank0(l), r0 = bits_[size_t(level)].rank0(r);
    int64_t left = walk(level + 1, l0, r0, lo, mid, a, b, leftmost);
    size_t z = zeros_[size_t(level)];
    int64_t right = walk(level + 1, z + (l - l0), z + (r - r0), mid + 1, hi, a, b, leftmost);
    if (left == kNone) return right;
    if (right == kNone) return left;
    return leftmost ? std::min(left, right) : std::max(left, right);
}

int64_t RangeIndex::leftmost_rank(size_t l, size_t r, int64_t a, int64_t b) const {
    if (a > b || l >= r) return kNone;
    uint64_t hi = (uint64_t(1) << levels_) - 1;
    return walk(0, l, r, 0, hi, uint64_t(a), uint64_t(b), true);
}

int64_t RangeIndex::rightmost_rank(size_t l, size_t r, int64_t a, int64_t b) const {
    if (a > b || l >= r) return kNone;
    uint64_t hi = (uint64_t(1) << levels_) - 1;
    return walk(0, l, r, 0, hi, uint64_t(a), uint64_t(b), false);
}

// rank of the first distinct value >= x
static int64_t rank_geq(const std::vector<double>& sorted, double x) {
    return std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin();
}

std::optional<int> RangeIndex::leftmost_in(int l, int r, double lo, double hi) const {
    if (l < 1) l = 1;
    if (r > int(n_)) r = int(n_);
    if (l > r) return std::nullopt;
    int64_t a = rank_geq(sorted_, lo);
    int64_t b = std::upper_bound(sorted_.begin(), sorted_.end(), hi) - sorted_.begin() - 1;
    int64_t pos = leftmost_rank(size_t(l - 1), size_t(r), a, b);
    if (pos == kNone) return std::nullopt;
    return int(pos) + 1;
}

std::optional<int> RangeIndex::rightmost_in(int l, int r, double lo, double hi) const {
    if (l < 1) l = 1;
    if (r > int(n_)) r = int(n_);
    if (l > r) return std::nullopt;
    int64_t a = rank_geq(sorted_, lo);
    int64_t b = std::upper_bound(sorted_.begin(), sorted_.end(), hi) - sorted_.begin() - 1;
    int64_t pos = rightmost_rank(size_t(l - 1), size_t(r), a, b);
    if (pos == kNone) return std::nullopt;
    return int(pos) + 1;
}

std::optional<int> RangeIndex::leftmost_outside(int l, int r, double lo, double hi) const {
    if (l < 1) l = 1;
    if (r > int(n_)) r = int(n_);
    if (l > r) return std::nullopt;
    int64_t below_hi = rank_geq(sorted_, lo) - 1;  // last rank with value < lo
    int64_t above_lo =
        std::upper_bound(sorted_.begin(), sorted_.end(), hi) - sorted_.begin();  // first > hi
    int64_t p1 = leftmost_rank(size_t(l - 1), size_t(r), 0, below_hi);
    int64_t p2 = leftmost_rank(size_t(l - 1), size_t(r), above_lo, int64_t(sorted_.size()) - 1);
    int64_t pos = p1 == kNone ? p2 : (p2 == kNone ? p1 : std::min(p1, p2));
    if (pos == kNone) return std::nullopt;
    return int(pos) + 1;
}

std::optional<int> RangeIndex::rightmost_outside(int l, int r, double lo, double hi) const {
    if (l < 1) l = 1;
    if (r > int(n_)) r = int(n_);
    if (l > r) return std::nullopt;
    int64_t below_hi = rank_geq(sorted_, lo) - 1;
    int64_t above_lo = std::upper_bound(sorted_.begin(), sorted_.end(), hi) - sorted_.begin();
    int64_t p1 = rightmost_rank(size_t(l - 1), size_t(r), 0, below_hi);
    int64_t p2 = rightmost_rank(size_t(l - 1), size_t(r), above_lo, int64_t(sorted_.size()) - 1);
    int64_t pos = std::max(p1, p2);
    if (pos == kNone) return std::nullopt;
    return int(pos) + 1;
}

}  // namespace frechet1d
