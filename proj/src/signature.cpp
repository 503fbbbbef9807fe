#include "frechet1d/signature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <tuple>

namespace frechet1d {

namespace {

double pair_threshold(const TimeSeries& s, int a, int b) {
    double amp = std::abs(s.value(a) - s.value(b));
    bool end_edge = a == 1 || b == s.size();
    return end_edge ? amp : amp / 2.0;
}

}  // namespace

SignatureHierarchy build_hierarchy(const TimeSeries& s) {
    if (!is_canonical(s)) throw std::invalid_argument("series is not canonical");
    int n = s.size();
    SignatureHierarchy h;
    h.series = s;
    h.removal_threshold.assign(size_t(n), kInf);

    if (n > 2) {
        std::vector<int> prev(size_t(n) + 1), next(size_t(n) + 1);
        std::vector<char> alive(size_t(n) + 1, 1);
        for (int i = 1; i <= n; ++i) {
            prev[size_t(i)] = i - 1;
            next[size_t(i)] = i + 1;
        }
        using Event = std::tuple<double, int, int>;  // threshold, left, right
        std::priority_queue<Event, std::vector<Event>, std::greater<>> pq;
        auto push = [&](int a, int b) {
            if (a == 1 && b == n) return;
            pq.push({pair_threshold(s, a, b), a, b});
        };
        for (int i = 1; i < n; ++i) push(i, i + 1);
        while (!pq.empty()) {
            auto [thr, a, b] = pq.top();
            pq.pop();
            if (!alive[size_t(a)] || !alive[size_t(b)] || next[size_t(a)] != b) continue;
            int p, q;
            if (a == 1) {  // end edge: b retires alone
                h.removal_threshold[size_t(b - 1)] = thr;
                alive[size_t(b)] = 0;
                p = a;
                q = next[size_t(b)];
            } else if (b == n) {
                h.removal_threshold[size_t(a - 1)] = thr;
                alive[size_t(a)] = 0;
                p = prev[size_t(a)];
                q = b;
            } else {  // interior pair: both retire at half the amplitude
                h.removal_threshold[size_t(a - 1)] = thr;
                h.removal_threshold[size_t(b - 1)] = thr;
                alive[size_t(a)] = alive[size_t(b)] = 0;
                p = prev[size_t(a)];
                q = next[size_t(b)];
            }
            next[size_t(p)] = q;
            prev[size_t(q)] = p;
            if (p >= 1 && q <= n && !(p == 1 && q == n)) push(p, q);
        }
    }

    h.thresholds_sorted = h.removal_threshold;
    std::sort(h.thresholds_sorted.begin(), h.thresholds_sorted.end());
    for (double t : h.thresholds_sorted)
        if (std::isfinite(t) && (h.levels.empty() || h.levels.back() != t)) h.levels.push_back(t);
    h.by_threshold.resize(size_t(n));
    for (int i = 1; i <= n; ++i) h.by_threshold[size_t(i - 1)] = i;
    std::sort(h.by_threshold.begin(), h.by_threshold.end(), [&](int x, int y) {
        double tx = h.threshold(x), ty = h.threshold(y);
        return tx != ty ? tx > ty : x < y;
    });

    h.prefix_argmin.resize(size_t(n));
    h.prefix_argmax.resize(size_t(n));
    h.suffix_argmin.resize(size_t(n));
    h.suffix_argmax.resize(size_t(n));
    for (int i = 1; i <= n; ++i) {
        h.prefix_argmin[size_t(i - 1)] =
            (i == 1 || s.value(i) < s.value(h.prefix_argmin[size_t(i - 2)]))
                ? i
                : h.prefix_argmin[size_t(i - 2)];
        h.prefix_argmax[size_t(i - 1)] =
            (i == 1 || s.value(i) > s.value(h.prefix_argmax[size_t(i - 2)]))
                ? i
                : h.prefix_argmax[size_t(i - 2)];
    }
    for (int i = n; i >= 1; --i) {
        h.suffix_argmin[size_t(i - 1)] =
            (i == n || s.value(i) <= s.value(h.suffix_argmin[size_t(i)]))
                ? i
                : h.suffix_argmin[size_t(i)];
        h.suffix_argmax[size_t(i - 1)] =
            (i == n || s.value(i) >= s.value(h.suffix_argmax[size_t(i)]))
                ? i
                : h.suffix_argmax[size_t(i)];
    }
    return h;
}

int signature_size_at(const SignatureHierarchy& h, double delta) {
    if (!(delta >= 0)) throw std::invalid_argument("delta must be nonnegative");
    auto it = std::upper_bound(h.thresholds_sorted.begin(), h.thresholds_sorted.end(), delta);
    return int(h.thresholds_sorted.end() - it);
}

ExtendedSignature extract_extended(const SignatureHierarchy& h, double delta) {
    int n = h.series.size();
    ExtendedSignature e;
    e.delta = delta;
    int l = signature_size_at(h, delta);
    e.core.assign(h.by_threshold.begin(), h.by_threshold.begin() + l);
    std::sort(e.core.begin(), e.core.end());
    e.indices = e.core;
    if (l <= 2) {
        e.degenerate = true;
        e.indices.push_back(h.prefix_argmin[size_t(n - 1)]);  // earliest global min
        e.indices.push_back(h.prefix_argmax[size_t(n - 1)]);  // earliest global max
    } else {
        const TimeSeries& s = h.series;
        int i2 = e.core[1], ilast = e.core[size_t(l - 2)];
        bool first_up = s.value(i2) > s.value(e.core[0]);
        bool last_up = s.value(e.core[size_t(l - 1)]) > s.value(ilast);
        e.indices.push_back(first_up ? h.prefix_argmin[size_t(i2 - 1)]
                                     : h.prefix_argmax[size_t(i2 - 1)]);
        e.indices.push_back(last_up ? h.suffix_argmax[size_t(ilast - 1)]
                                    : h.suffix_argmin[size_t(ilast - 1)]);
    }
    std::sort(e.indices.begin(), e.indices.end());
    // The added front/back vertices stay in the list even when they coincide
    // with the first or last vertex: the first and last pieces of the
    // extended list must always be the narrow ones, so a coinciding
    // extension contributes a zero-width end piece rather than vanishing
    // (which would promote a wide piece to the boundary).  The degenerate
    // list is only a set of probe vertices, so it is deduplicated.
    if (e.degenerate)
        e.indices.erase(std::unique(e.indices.begin(), e.indices.end()), e.indices.end());
    return e;
}

SignatureCheck validate_signature(const TimeSeries& s, const std::vector<int>& indices,
                                  double delta) {
    int n = s.size();
    int t = int(indices.size());
    if (t < 1 || indices.front() != 1 || indices.back() != n)
        throw std::invalid_argument("candidate must start at 1 and end at n");
    for (int k = 1; k < t; ++k)
        if (indices[size_t(k)] <= indices[size_t(k - 1)])
            throw std::invalid_argument("candidate indices must be strictly increasing");

    auto val = [&](int k) { return s.value(indices[size_t(k - 1)]); };  // k is 1-based

    // (a) non-degenerate interior vertices
    for (int k = 2; k <= t - 1; ++k) {
        double lo = std::min(val(k - 1), val(k + 1)), hi = std::max(val(k - 1), val(k + 1));
        if (val(k) >= lo && val(k) <= hi) return {false, 'a', k};
    }
    // (b) every piece 2*delta-monotone increasing or decreasing
    for (int k = 1; k <= t - 1; ++k) {
        double rise = 0, drop = 0, mn = kInf, mx = -kInf;
        for (int i = indices[size_t(k - 1)]; i <= indices[size_t(k)]; ++i) {
            double v = s.value(i);
            rise = std::max(rise, v - mn);
            drop = std::max(drop, mx - v);
            mn = std::min(mn, v);
            mx = std::max(mx, v);
        }
        if (drop > 2 * delta && rise > 2 * delta) return {false, 'b', k};
    }
    // (c) minimum edge lengths
    if (t >= 2) {
        if (!(std::abs(val(1) - val(2)) > delta)) return {false, 'c', 1};
        if (!(std::abs(val(t - 1) - val(t)) > delta)) return {false, 'c', t - 1};
        for (int k = 2; k <= t - 2; ++k)
            if (!(std::abs(val(k) - val(k + 1)) > 2 * delta)) return {false, 'c', k};
    }
    // (d) pieces stay inside their edge segment, with delta slack at the ends
    for (int k = 1; k <= t - 1; ++k) {
        double lo = std::min(val(k), val(k + 1)), hi = std::max(val(k), val(k + 1));
        if (k == 1 || k == t - 1) {
            lo -= delta;
            hi += delta;
        }
        for (int i = indices[size_t(k - 1)]; i <= indices[size_t(k)]; ++i) {
            double v = s.value(i);
            if (v < lo || v > hi) return {false, 'd', k};
        }
    }
    return {};
}

}  // namespace frechet1d
