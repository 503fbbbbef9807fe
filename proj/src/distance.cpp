#include "frechet1d/distance.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace frechet1d {

namespace {

std::vector<double> sorted_values(const TimeSeries& s) {
    std::vector<double> v = s.values;
    std::sort(v.begin(), v.end());
    return v;
}

// Raw difference threshold corresponding to a family value x.
double raw_threshold(const CriticalFamily& f, double x) { return f.half ? 2.0 * x : x; }

// Smallest family element strictly greater than x, or +inf.  For each a the
// nearest raw differences beyond t live just outside the window [a-t, a+t]:
// the first b above a+t and the last b below a-t.
double successor(const CriticalFamily& f, double x) {
    double t = raw_threshold(f, x);
    double best = kInf;
    for (double av : f.a) {
        auto up = std::upper_bound(f.b.begin(), f.b.end(), av + t);
        if (up != f.b.end()) best = std::min(best, *up - av);
        auto down = std::lower_bound(f.b.begin(), f.b.end(), av - t);
        if (down != f.b.begin()) best = std::min(best, av - *(down - 1));
    }
    return f.half ? best / 2.0 : best;
}

double family_max(const CriticalFamily& f) {
    double raw = std::max(f.a.back() - f.b.front(), f.b.back() - f.a.front());
    raw = std::max(raw, 0.0);
    return f.half ? raw / 2.0 : raw;
}

// All family values v with lo < v <= hi, by per-row window scans.
std::vector<double> collect_window(const CriticalFamily& f, double lo, double hi) {
    double th = raw_threshold(f, hi), tl = raw_threshold(f, lo);
    std::vector<double> vals;
    for (double av : f.a) {
        auto wl = std::lower_bound(f.b.begin(), f.b.end(), av - th);
        auto wr = std::upper_bound(f.b.begin(), f.b.end(), av + th);
        for (auto it = wl; it != wr; ++it) {
            double d = std::abs(av - *it);
            if (tl >= 0 && d <= tl) continue;
            vals.push_back(f.half ? d / 2.0 : d);
        }
    }
    return vals;
}

double select_counting(const CriticalFamily& f, std::uint64_t k) {
    if (count_le(f, 0.0) >= k) return 0.0;
    // Invariant: count_le(lo) = k_lo < k <= k_hi = count_le(hi).  Bisection
    // narrows the value window until few candidates remain, which are then
    // enumerated exactly; the answer is always an exact family element.
    double lo = 0.0, hi = family_max(f);
    std::uint64_t k_lo = count_le(f, 0.0), k_hi = f.total();
    while (true) {
        if (k_hi - k_lo <= 64) {
            std::vector<double> vals = collect_window(f, lo, hi);
            std::uint64_t want = k - k_lo;
            std::nth_element(vals.begin(), vals.begin() + long(want - 1), vals.end());
            return vals[size_t(want - 1)];
        }
        double mid = lo + (hi - lo) / 2.0;
        if (!(mid > lo) || !(mid < hi)) {
            // the window collapsed onto one value of high multiplicity
            return successor(f, lo);
        }
        std::uint64_t c = count_le(f, mid);
        if (c >= k) {
            hi = mid;
            k_hi = c;
        } else {
            lo = mid;
            k_lo = c;
        }
    }
}

// Randomized quickselect on the implicit difference matrix.  The active
// candidates always form, per row a, up to two contiguous runs of b: the
// window (lo, hi] of surviving values cuts each V-shaped row |a - b| into a
// left and a right run.  Sampling a uniformly random active cell gives the
// pivot; counting against it shrinks the window.  Expected logarithmic
// rounds, each O(|A| log |B|).
double select_matrix(const CriticalFamily& f, std::uint64_t k) {
    // deterministic per-call seed: correctness never depends on the draw
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ (k * 0xbf58476d1ce4e5b9ull) ^
                        (std::uint64_t(f.a.size()) << 32) ^ std::uint64_t(f.b.size()));
    double lo = -1.0, hi = family_max(f);  // candidates lie in (lo, hi]
    std::uint64_t k_lo = 0;                // count_le(lo)
    const auto& B = f.b;
    while (true) {
        // per-row active counts: b in [a-th, a+th] minus b in [a-tl, a+tl]
        double th = raw_threshold(f, hi), tl = raw_threshold(f, lo);
        std::vector<std::uint64_t> pref(f.a.size() + 1, 0);
        for (size_t i = 0; i < f.a.size(); ++i) {
            double av = f.a[i];
            auto wide_l = std::lower_bound(B.begin(), B.end(), av - th);
            auto wide_r = std::upper_bound(B.begin(), B.end(), av + th);
            std::uint64_t cnt = std::uint64_t(wide_r - wide_l);
            if (tl >= 0) {
                auto nar_l = std::lower_bound(B.begin(), B.end(), av - tl);
                auto nar_r = std::upper_bound(B.begin(), B.end(), av + tl);
                cnt -= std::uint64_t(nar_r - nar_l);
            }
            pref[i + 1] = pref[i] + cnt;
        }
        std::uint64_t active = pref.back();
        if (active == 0) return hi;
        if (active <= 64) {
            std::vector<double> vals = collect_window(f, lo, hi);
            std::uint64_t want = k - k_lo;  // rank within the window
            std::nth_element(vals.begin(), vals.begin() + long(want - 1), vals.end());
            return vals[size_t(want - 1)];
        }
        // sample the pivot uniformly among active cells
        std::uint64_t r = std::uniform_int_distribution<std::uint64_t>(0, active - 1)(rng);
        size_t row = size_t(std::upper_bound(pref.begin(), pref.end(), r) - pref.begin() - 1);
        std::uint64_t off = r - pref[row];
        double av = f.a[row];
        auto wl = std::lower_bound(B.begin(), B.end(), av - th);
        auto wr = std::upper_bound(B.begin(), B.end(), av + th);
        double pivot = kInf;
        if (tl < 0) {
            pivot = std::abs(av - *(wl + long(off)));
        } else {
            auto nl = std::lower_bound(B.begin(), B.end(), av - tl);
            auto nr = std::upper_bound(B.begin(), B.end(), av + tl);
            std::uint64_t left_run = std::uint64_t(nl - wl);  // b < a - tl
            pivot = off < left_run ? std::abs(av - *(wl + long(off)))
                                   : std::abs(av - *(nr + long(off - left_run)));
        }
        if (f.half) pivot /= 2.0;
        std::uint64_t c = count_le(f, pivot);
        if (c >= k) {
            hi = pivot;
        } else {
            lo = pivot;
            k_lo = c;
        }
    }
}

}  // namespace

CriticalFamily cross_family(const TimeSeries& p, const TimeSeries& q) {
    return CriticalFamily{sorted_values(p), sorted_values(q), false};
}

CriticalFamily intra_family(const TimeSeries& s) {
    auto v = sorted_values(s);
    return CriticalFamily{v, v, true};
}

std::uint64_t count_le(const CriticalFamily& f, double x) {
    if (!(x >= 0)) return 0;
    double t = raw_threshold(f, x);
    std::uint64_t cnt = 0;
    size_t lo = 0, hi = 0;  // [lo, hi) = b within [a - t, a + t]
    for (double av : f.a) {
        while (lo < f.b.size() && f.b[lo] < av - t) ++lo;
        if (hi < lo) hi = lo;
        while (hi < f.b.size() && f.b[hi] <= av + t) ++hi;
        cnt += hi - lo;
    }
    return cnt;
}

std::uint64_t count_lt(const CriticalFamily& f, double x) {
    if (!(x > 0)) return 0;
    double t = raw_threshold(f, x);
    std::uint64_t cnt = 0;
    size_t lo = 0, hi = 0;  // [lo, hi) = b within (a - t, a + t)
    for (double av : f.a) {
        while (lo < f.b.size() && f.b[lo] <= av - t) ++lo;
        if (hi < lo) hi = lo;
        while (hi < f.b.size() && f.b[hi] < av + t) ++hi;
        cnt += hi - lo;
    }
    return cnt;
}

double select_kth(const CriticalFamily& f, std::uint64_t k, SelectMethod method) {
    if (k < 1 || k > f.total()) throw std::out_of_range("selection rank out of range");
    return method == SelectMethod::kCounting ? select_counting(f, k) : select_matrix(f, k);
}

double exact_distance(const Oracle& o, const PreparedQuery& q, DistanceStats* stats) {
    DistanceStats st;
    auto probe = [&](double delta) {
        ++st.rounds;
        return decide(o, q, delta);
    };
    double result = 0.0;
    if (!probe(0.0)) {
        CriticalFamily fams[3] = {cross_family(o.series, q.series), intra_family(o.series),
                                  intra_family(q.series)};
        // The distance is a member of the families, hence <= best; every
        // element <= refuted is known infeasible.  The loop keeps the
        // surviving rank interval (refuted, best) of each family and bisects
        // the largest one at its median element; either outcome empties half
        // of it, so the round count is logarithmic in the candidate count.
        double best = 0.0, refuted = 0.0;
        for (const auto& f : fams) best = std::max(best, family_max(f));
        while (true) {
            int pick = -1;
            std::uint64_t pick_lo = 0, pick_size = 0;
            for (int i = 0; i < 3; ++i) {
                std::uint64_t lo = count_le(fams[i], refuted);
                std::uint64_t hi = count_lt(fams[i], best);
                if (hi > lo && hi - lo > pick_size) {
                    pick = i;
                    pick_lo = lo;
                    pick_size = hi - lo;
                }
            }
            if (pick < 0) break;  // nothing left strictly inside: best is it
            double pivot = select_kth(fams[pick], pick_lo + (pick_size + 1) / 2);
            if (probe(pivot))
                best = pivot;
            else
                refuted = pivot;
        }
        result = best;
    }
    if (stats) *stats = st;
    return result;
}

double exact_distance(const Oracle& o, const TimeSeries& raw_q, DistanceStats* stats) {
    PreparedQuery pq = prepare_query(raw_q);
    return exact_distance(o, pq, stats);
}

}  // namespace frechet1d
