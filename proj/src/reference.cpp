#include "frechet1d/reference.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "frechet1d/signature.hpp"

namespace frechet1d {

namespace {

struct Iv {
    double lo = 1.0, hi = 0.0;  // empty by default

    bool empty() const { return lo > hi; }
};

// {t in [j, j+1] : |level - Q(t)| <= delta} for the edge Q(j) -> Q(j+1),
// as an interval of the global curve parameter.
Iv edge_slab(double qa, double qb, int j, double level, double delta) {
    double lo = level - delta, hi = level + delta;
    if (qa == qb) {
        if (qa < lo || qa > hi) return {};
        return {double(j), double(j + 1)};
    }
    double t0 = (lo - qa) / (qb - qa);
    double t1 = (hi - qa) / (qb - qa);
    if (t0 > t1) std::swap(t0, t1);
    t0 = std::max(t0, 0.0);
    t1 = std::min(t1, 1.0);
    if (t0 > t1) return {};
    return {double(j) + t0, double(j) + t1};
}

// Largest t* such that the whole prefix path {start} x [1, t*] stays free,
// i.e. |anchor - C(t)| <= delta for all t <= t*.
double free_prefix_end(const TimeSeries& c, double anchor, double delta) {
    int k = c.size();
    for (int j = 1; j <= k - 1; ++j) {
        Iv f = edge_slab(c.value(j), c.value(j + 1), j, anchor, delta);
        if (f.empty() || f.lo > double(j)) return double(j);
        if (f.hi < double(j + 1)) return f.hi;
    }
    return double(k);
}

}  // namespace

bool free_space_decide(const TimeSeries& P, const TimeSeries& Q, double delta) {
    if (!(delta >= 0)) throw std::invalid_argument("delta must be nonnegative");
    int n = P.size(), m = Q.size();
    if (std::abs(P.value(1) - Q.value(1)) > delta) return false;
    if (std::abs(P.value(n) - Q.value(m)) > delta) return false;
    if (n == 1 || m == 1) {
        const TimeSeries& pt = n == 1 ? P : Q;
        const TimeSeries& cv = n == 1 ? Q : P;
        double c = pt.value(1);
        for (int i = 1; i <= cv.size(); ++i)
            if (std::abs(cv.value(i) - c) > delta) return false;
        return true;
    }

    // Cell (i, j) spans P edge i and Q edge j.  L[j] is the reachable
    // interval (in t) of the cell's left boundary {s = i} x [j, j+1]; B is
    // the reachable interval (in s) of the current cell's bottom boundary.
    double t_star = free_prefix_end(Q, P.value(1), delta);
    double s_star = free_prefix_end(P, Q.value(1), delta);
    std::vector<Iv> L(size_t(m - 1));
    for (int j = 1; j <= m - 1 && t_star >= double(j); ++j)
        L[size_t(j - 1)] = {double(j), std::min(double(j + 1), t_star)};

    Iv last_right, last_top;
    for (int i = 1; i <= n - 1; ++i) {
        Iv B;  // bottom of cell (i, 1), reachable only along the t = 1 line
        if (s_star >= double(i)) B = {double(i), std::min(double(i + 1), s_star)};
        for (int j = 1; j <= m - 1; ++j) {
            Iv left = L[size_t(j - 1)];
            Iv fr = edge_slab(Q.value(j), Q.value(j + 1), j, P.value(i + 1), delta);
            Iv ft = edge_slab(P.value(i), P.value(i + 1), i, Q.value(j + 1), delta);
            Iv right, top;
            if (!B.empty())
                right = fr;
            else if (!left.empty() && !fr.empty())
                right = {std::max(fr.lo, left.lo), fr.hi};
            if (!left.empty())
                top = ft;
            else if (!B.empty() && !ft.empty())
                top = {std::max(ft.lo, B.lo), ft.hi};
            L[size_t(j - 1)] = right;
            B = top;
        }
        last_right = L[size_t(m - 2)];
        last_top = B;
    }
    return (!last_right.empty() && last_right.hi >= double(m)) ||
           (!last_top.empty() && last_top.hi >= double(n));
}

double brute_exact(const TimeSeries& P, const TimeSeries& Q) {
    std::vector<double> crit{0.0};
    for (int i = 1; i <= P.size(); ++i)
        for (int j = 1; j <= Q.size(); ++j) crit.push_back(std::abs(P.value(i) - Q.value(j)));
    for (int i = 1; i <= P.size(); ++i)
        for (int j = i; j <= P.size(); ++j) crit.push_back(std::abs(P.value(i) - P.value(j)) / 2);
    for (int i = 1; i <= Q.size(); ++i)
        for (int j = i; j <= Q.size(); ++j) crit.push_back(std::abs(Q.value(i) - Q.value(j)) / 2);
    std::sort(crit.begin(), crit.end());
    crit.erase(std::unique(crit.begin(), crit.end()), crit.end());
    size_t lo = 0, hi = crit.size() - 1;  // decide(crit.back()) is always true
    while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        if (free_space_decide(P, Q, crit[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    return crit[lo];
}

std::vector<ValueInterval> corollary_ranges(const TimeSeries& P, double delta) {
    if (!(delta >= 0)) throw std::invalid_argument("delta must be nonnegative");
    auto h = build_hierarchy(canonicalize(P));
    auto sig = extract_extended(h, delta).core;
    std::vector<ValueInterval> out;
    for (size_t k = 0; k < sig.size(); ++k) {
        double v = h.series.value(sig[k]);
        double r = (k == 0 || k + 1 == sig.size()) ? 3 * delta : delta;
        out.push_back({v - r, v + r});
    }
    return out;
}

}  // namespace frechet1d
