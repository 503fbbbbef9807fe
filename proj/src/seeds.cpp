#include "frechet1d/seeds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace frechet1d {

namespace {

constexpr Param kStart{1, 0.0};
constexpr double kInfSeed = std::numeric_limits<double>::infinity();

struct Iv {
    double lo = 1.0, hi = 0.0;  // empty by default

    bool empty() const { return lo > hi; }
};

// {t in [j, j+1] : |level - C(t)| <= delta} for the view edge j -> j+1, as
// an interval of the view parameter.
Iv edge_slab(double ca, double cb, int j, double level, double delta) {
    double lo = level - delta, hi = level + delta;
    if (ca == cb) {
        if (ca < lo || ca > hi) return {};
        return {double(j), double(j + 1)};
    }
    double t0 = (lo - ca) / (cb - ca);
    double t1 = (hi - ca) / (cb - ca);
    if (t0 > t1) std::swap(t0, t1);
    t0 = std::max(t0, 0.0);
    t1 = std::min(t1, 1.0);
    if (t0 > t1) return {};
    return {double(j) + t0, double(j) + t1};
}

// Largest t* <= last such that |anchor - C(t)| <= delta for all t <= t*.
double free_prefix_end(const CurveView& c, int last, double anchor, double delta) {
    for (int j = 1; j <= last - 1; ++j) {
        Iv f = edge_slab(c.value(j), c.value(j + 1), j, anchor, delta);
        if (f.empty() || f.lo > double(j)) return double(j);
        if (f.hi < double(j + 1)) return f.hi;
    }
    return double(last);
}

}  // namespace

SeedOutcome algorithm1_seed(const CurveView& a, int a_end, const CurveView& b, int b_end,
                            double delta) {
    double band_lo = a.vertex_prefix_max(a_end) - delta;
    double band_hi = a.vertex_prefix_min(a_end) + delta;
    auto w = first_entry(b, kStart, Param::vertex(b_end), band_lo, band_hi);
    if (!w) return {SeedOutcome::kNone, kStart};

    Param s = Param::vertex(a_end);
    Param t = *w;
    long iterations = 0;
    while (!(s == kStart && t == kStart)) {
        if (++iterations > long(a_end) + long(b_end) + 16) return {SeedOutcome::kOverrun, kStart};
        // tighten the A side: earliest s' covering all of B[1, t]
        auto s2 = first_entry(a, kStart, s, b.prefix_max(t) - delta, b.prefix_min(t) + delta);
        if (!s2 || *s2 == s) return {SeedOutcome::kNone, kStart};
        s = *s2;
        if (s == kStart && t == kStart) break;
        // tighten the B side: earliest t' covering all of A[1, s]
        auto t2 = first_entry(b, kStart, t, a.prefix_max(s) - delta, a.prefix_min(s) + delta);
        if (!t2 || *t2 == t) return {SeedOutcome::kNone, kStart};
        t = *t2;
    }
    return {SeedOutcome::kFound, *w};
}

std::optional<Param> boundary_seed(const CurveView& a, int a_end, const CurveView& b, int b_end,
                                   double delta) {
    SeedOutcome r = algorithm1_seed(a, a_end, b, b_end, delta);
    if (r.kind == SeedOutcome::kFound) return r.w;
    return std::nullopt;
}

std::optional<Param> dp_first_reach(const CurveView& a, int a_end, const CurveView& b, int b_end,
                                    double delta) {
    if (std::abs(a.value(1) - b.value(1)) > delta) return std::nullopt;
    if (a_end == 1) return Param{1, 0.0};  // a point matches exactly B[1, 1]
    if (b_end == 1) {
        for (int i = 1; i <= a_end; ++i)
            if (std::abs(a.value(i) - b.value(1)) > delta) return std::nullopt;
        return Param{1, 0.0};
    }

    // Cell (i, j) spans A edge i and B edge j.  L[j] is the reachable
    // interval (in t) of the cell's left boundary {s = i} x [j, j+1]; B0 is
    // the reachable interval (in s) of the current cell's bottom boundary.
    double t_star = free_prefix_end(b, b_end, a.value(1), delta);
    double s_star = free_prefix_end(a, a_end, b.value(1), delta);
    std::vector<Iv> L(size_t(b_end - 1));
    for (int j = 1; j <= b_end - 1 && t_star >= double(j); ++j)
        L[size_t(j - 1)] = {double(j), std::min(double(j + 1), t_star)};

    for (int i = 1; i <= a_end - 1; ++i) {
        Iv B0;
        if (s_star >= double(i)) B0 = {double(i), std::min(double(i + 1), s_star)};
        for (int j = 1; j <= b_end - 1; ++j) {
            Iv left = L[size_t(j - 1)];
            Iv fr = edge_slab(b.value(j), b.value(j + 1), j, a.value(i + 1), delta);
            Iv ft = edge_slab(a.value(i), a.value(i + 1), i, b.value(j + 1), delta);
            Iv right, top;
            if (!B0.empty())
                right = fr;
            else if (!left.empty() && !fr.empty())
                right = {std::max(fr.lo, left.lo), fr.hi};
            if (!left.empty())
                top = ft;
            else if (!B0.empty() && !ft.empty())
                top = {std::max(ft.lo, B0.lo), ft.hi};
            L[size_t(j - 1)] = right;
            B0 = top;
        }
    }
    // L now holds the reachable intervals on the line s = a_end.
    for (int j = 1; j <= b_end - 1; ++j) {
        const Iv& iv = L[size_t(j - 1)];
        if (!iv.empty()) return param_at(iv.lo, b.size());
    }
    return std::nullopt;
}

std::optional<Param> prefix_seed(const CurveView& a, int a_end, const CurveView& b, int b_end,
                                 double delta, bool* used_dp) {
    double width_a = a.vertex_prefix_max(a_end) - a.vertex_prefix_min(a_end);
    double width_b = b.vertex_prefix_max(b_end) - b.vertex_prefix_min(b_end);
    if (width_a <= 2 * delta && width_b <= 2 * delta) {
        SeedOutcome r = algorithm1_seed(a, a_end, b, b_end, delta);
        if (r.kind == SeedOutcome::kFound) return r.w;
        if (r.kind == SeedOutcome::kNone) return std::nullopt;
    }
    if (used_dp) *used_dp = true;
    return dp_first_reach(a, a_end, b, b_end, delta);
}

bool region_reach(const std::vector<double>& a_vals, const std::vector<double>& b_vals,
                  double delta, const std::vector<ReachSeed>& seeds, bool free_left_edge) {
    int an = int(a_vals.size()), bn = int(b_vals.size());
    if (an == 0 || bn == 0) return false;
    auto aval = [&](int i) { return a_vals[size_t(i - 1)]; };
    auto bval = [&](int j) { return b_vals[size_t(j - 1)]; };
    // absorbs only the floating representation of a seed parameter that is
    // in band by construction; never widens the band itself
    constexpr double kSeedBand = 0x1p-48;

    // seeds sitting on B's last vertex line reach the corner by sliding
    // along it; everything of A past the seed must stay in band
    auto a_tail_in_band = [&](double a0) {
        double level = bval(bn);
        for (int i = std::max(1, int(std::ceil(a0 - kSeedBand))); i <= an; ++i)
            if (std::abs(aval(i) - level) > delta) return false;
        return true;
    };
    for (const auto& s : seeds)
        if (s.b == double(bn) && a_tail_in_band(s.a)) return true;
    if (bn == 1) {
        if (free_left_edge && std::abs(aval(1) - bval(1)) <= delta && a_tail_in_band(1.0))
            return true;
        return false;
    }

    // Cell (i, j) spans A edge i and B edge j; L[j] is the reachable
    // interval (in t) of the left boundary {s = i} x [j, j+1], B0 the
    // reachable interval (in s) of the current cell's bottom boundary.
    std::vector<Iv> L(size_t(bn - 1));
    bool carry = false;  // the reach on the line {s = 1} touches vertex j
    for (int j = 1; j <= bn - 1; ++j) {
        Iv f = edge_slab(bval(j), bval(j + 1), j, aval(1), delta);
        double lo = kInfSeed;
        if (!f.empty()) {
            if (free_left_edge) lo = f.lo;
            if (carry && f.lo == double(j)) lo = f.lo;
            for (const auto& s : seeds) {
                if (s.a != 1.0 || s.b < double(j) || s.b > double(j + 1)) continue;
                if (s.b >= f.lo - kSeedBand && s.b <= f.hi + kSeedBand)
                    lo = std::min(lo, std::clamp(s.b, f.lo, f.hi));
            }
        }
        if (lo < kInfSeed) {
            L[size_t(j - 1)] = {lo, f.hi};
            carry = f.hi == double(j + 1);
        } else {
            L[size_t(j - 1)] = {};
            carry = false;
        }
    }

    for (int i = 1; i <= an - 1; ++i) {
        Iv B0;
        for (int j = 1; j <= bn - 1; ++j) {
            Iv left = L[size_t(j - 1)];
            Iv fb = edge_slab(aval(i), aval(i + 1), i, bval(j), delta);
            if (!fb.empty()) {
                double lo = B0.empty() ? kInfSeed : B0.lo;
                for (const auto& s : seeds) {
                    if (s.b != double(j) || s.a < double(i) || s.a > double(i + 1)) continue;
                    if (s.a >= fb.lo - kSeedBand && s.a <= fb.hi + kSeedBand)
                        lo = std::min(lo, std::clamp(s.a, fb.lo, fb.hi));
                }
                if (lo < kInfSeed) B0 = {lo, fb.hi};
            }
            Iv fr = edge_slab(bval(j), bval(j + 1), j, aval(i + 1), delta);
            Iv ft = edge_slab(aval(i), aval(i + 1), i, bval(j + 1), delta);
            Iv right, top;
            if (!B0.empty())
                right = fr;
            else if (!left.empty() && !fr.empty())
                right = {std::max(fr.lo, left.lo), fr.hi};
            if (!left.empty())
                top = ft;
            else if (!B0.empty() && !ft.empty())
                top = {std::max(ft.lo, B0.lo), ft.hi};
            L[size_t(j - 1)] = right;
            B0 = top;
        }
    }
    const Iv& last = L[size_t(bn - 2)];
    return !last.empty() && last.hi >= double(bn);
}

}  // namespace frechet1d
