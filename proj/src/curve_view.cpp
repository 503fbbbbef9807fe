#include "frechet1d/curve_view.hpp"

#include <algorithm>

namespace frechet1d {

Param CurveView::to_underlying(Param t) const {
    int n = s_->size();
    if (!rev_) return normalize_param(t, n);
    if (n <= 1) return Param{1, 0.0};
    // view position t = e + f  maps to  n+1-t = (n-e) + (1-f)
    if (t.is_vertex()) {
        int u = n + 1 - t.floor_vertex();
        return u == n ? Param{n - 1, 1.0} : Param{u, 0.0};
    }
    return normalize_param(Param{n - t.edge, 1.0 - t.frac}, n);
}

namespace {

// Earliest view parameter >= start whose value is <= level (leq) / >= level.
std::optional<Param> first_reach(const CurveView& c, Param start, double level, bool leq) {
    int n = c.size();
    double v0 = c.eval(start);
    if (leq ? v0 <= level : v0 >= level) return start;
    if (start.frac == 1.0) return std::nullopt;  // start is the curve end
    for (int e = start.edge; e < n; ++e) {
        double a = c.value(e), b = c.value(e + 1);
        if (leq ? b <= level : b >= level) {
            double f = (level - a) / (b - a);
            Param p = f >= 1.0 ? Param{e, 1.0} : Param{e, f};
            if (p < start) p = start;
            return normalize_param(p, n);
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Param> first_entry(const CurveView& c, Param start, Param bound, double lo,
                                 double hi) {
    if (lo > hi) return std::nullopt;
    auto a = first_reach(c, start, hi, true);
    if (!a) return std::nullopt;
    auto b = first_reach(c, start, lo, false);
    if (!b) return std::nullopt;
    Param t = std::max(*a, *b);
    if (bound < t) return std::nullopt;
    return t;
}

}  // namespace frechet1d
