#include "frechet1d/series_tree.hpp"

#include <algorithm>
#include <bit>

namespace frechet1d {

namespace {

constexpr double kNeg = -kInf;

}  // namespace

SeriesTree::SeriesTree(const std::vector<double>& values) {
    n_ = int(values.size());
    size_ = std::bit_ceil(values.size() | 1);
    t_.assign(2 * size_, Node{kInf, kNeg, kNeg, kNeg});
    for (size_t i = 0; i < values.size(); ++i)
        t_[size_ + i] = Node{values[i], values[i], 0.0, 0.0};
    for (size_t j = size_ - 1; j >= 1; --j) {
        const Node& a = t_[2 * j];
        const Node& b = t_[2 * j + 1];
        t_[j] = Node{std::min(a.mn, b.mn), std::max(a.mx, b.mx),
                     std::max({a.rise, b.rise, b.mx - a.mn}),
                     std::max({a.drop, b.drop, a.mx - b.mn})};
    }
}

// For drop searches `extreme` is the running max, for rise searches the
// running min.  Scanning backward swaps which internal aggregate applies:
// a backward drop against the running max of the suffix is a forward rise.
int SeriesTree::descend(int node, int nl, int nr, double c, double& extreme, bool forward,
                        bool drop) const {
    ++visits_;
    if (nl == nr) return nl;
    int mid = (nl + nr) / 2;
    int first = forward ? 2 * node : 2 * node + 1;
    int second = forward ? 2 * node + 1 : 2 * node;
    int fl = forward ? nl : mid + 1, fr = forward ? mid : nr;
    int sl = forward ? mid + 1 : nl, sr = forward ? nr : mid;
    const Node& f = t_[size_t(first)];
    double internal = (drop == forward) ? f.drop : f.rise;
    double boundary = drop ? extreme - f.mn : f.mx - extreme;
    if (std::max(internal, boundary) > c) return descend(first, fl, fr, c, extreme, forward, drop);
    extreme = drop ? std::max(extreme, f.mx) : std::min(extreme, f.mn);
    return descend(second, sl, sr, c, extreme, forward, drop);
}

int SeriesTree::query_dir(int node, int nl, int nr, int l, int r, double c, double& extreme,
                          bool forward, bool drop) const {
    ++visits_;
    if (nr < l || r < nl) return 0;
    if (l <= nl && nr <= r) {
        const Node& nd = t_[size_t(node)];
        double internal = (drop == forward) ? nd.drop : nd.rise;
        double boundary = drop ? extreme - nd.mn : nd.mx - extreme;
        if (std::max(internal, boundary) <= c) {
            extreme = drop ? std::max(extreme, nd.mx) : std::min(extreme, nd.mn);
            return 0;
        }
        return descend(node, nl, nr, c, extreme, forward, drop);
    }
    int mid = (nl + nr) / 2;
    int a = forward ? 2 * node : 2 * node + 1;
    int b = forward ? 2 * node + 1 : 2 * node;
    int al = forward ? nl : mid + 1, ar = forward ? mid : nr;
    int bl = forward ? mid + 1 : nl, br = forward ? nr : mid;
    int res = query_dir(a, al, ar, l, r, c, extreme, forward, drop);
    if (res) return res;
    return query_dir(b, bl, br, l, r, c, extreme, forward, drop);
}

std::optional<int> SeriesTree::first_rise_after(int l, int r, double c, double seed_min) const {
    l = std::max(l, 1);
    r = std::min(r, n_);
    if (l > r) return std::nullopt;
    double extreme = seed_min;
    int res = query_dir(1, 1, int(size_), l, r, c, extreme, true, false);
    return res ? std::optional<int>(res) : std::nullopt;
}

std::optional<int> SeriesTree::first_drop_after(int l, int r, double c, double seed_max) const {
    l = std::max(l, 1);
    r = std::min(r, n_);
    if (l > r) return std::nullopt;
    double extreme = seed_max;
    int res = query_dir(1, 1, int(size_), l, r, c, extreme, true, true);
    return res ? std::optional<int>(res) : std::nullopt;
}

std::optional<int> SeriesTree::first_drop_backward(int l, int r, double c, double seed_max) const {
    l = std::max(l, 1);
    r = std::min(r, n_);
    if (l > r) return std::nullopt;
    double extreme = seed_max;
    int res = query_dir(1, 1, int(size_), l, r, c, extreme, false, true);
    return res ? std::optional<int>(res) : std::nullopt;
}

std::optional<int> SeriesTree::first_rise_backward(int l, int r, double c, double seed_min) const {
    l = std::max(l, 1);
    r = std::min(r, n_);
    if (l > r) return std::nullopt;
    double extreme = seed_min;
    int res = query_dir(1, 1, int(size_), l, r, c, extreme, false, false);
    return res ? std::optional<int>(res) : std::nullopt;
}

double SeriesTree::range_min(int l, int r) const {
    l = std::max(l, 1);
    r = std::min(r, n_);
    double best = kInf;
    int node = 1, nl = 1, nr = int(size_);
    // iterative descent over the canonical decomposition
    struct Item {
        int node, nl, nr;
    };
    std::vector<Item> stack{{node, nl, nr}};
    while (!stack.empty()) {
        auto [nd, a, b] = stack.back();
        stack.pop_back();
        ++visits_;
        if (b < l || r < a) continue;
        if (l <= a && b <= r) {
            best = std::min(best, t_[size_t(nd)].mn);
            continue;
        }
        int mid = (a + b) / 2;
        stack.push_back({2 * nd, a, mid});
        stack.push_back({2 * nd + 1, mid + 1, b});
    }
    return best;
}

double SeriesTree::range_max(int l, int r) const {
    l = std::max(l, 1);
    r = std::min(r, n_);
    double best = -kInf;
    struct Item {
        int node, nl, nr;
    };
    std::vector<Item> stack{{1, 1, int(size_)}};
    while (!stack.empty()) {
        auto [nd, a, b] = stack.back();
        stack.pop_back();
        ++visits_;
        if (b < l || r < a) continue;
        if (l <= a && b <= r) {
            best = std::max(best, t_[size_t(nd)].mx);
            continue;
        }
        int mid = (a + b) / 2;
        stack.push_back({2 * nd, a, mid});
        stack.push_back({2 * nd + 1, mid + 1, b});
    }
    return best;
}

}  // namespace frechet1d
