#include "doctest.h"
#include "frechet1d/curve_view.hpp"

#include <algorithm>
#include <random>

using namespace frechet1d;

namespace {

TimeSeries ts(std::vector<double> v) { return make_series(v); }

TimeSeries reversed_copy(const TimeSeries& s) {
    std::vector<double> v(s.values.rbegin(), s.values.rend());
    return make_series(v);
}

std::vector<double> random_values(std::mt19937& rng, int max_len) {
    std::uniform_int_distribution<int> len(1, max_len), val(-6, 6);
    std::vector<double> v(size_t(len(rng)), 0.0);
    for (auto& x : v) x = val(rng);
    return v;
}

}  // namespace

TEST_CASE("forward view mirrors the series") {
    auto s = ts({0, 4, 1, 5});
    auto e = build_envelope(s);
    CurveView v(s, e, false);
    CHECK(v.size() == 4);
    CHECK(v.value(1) == 0);
    CHECK(v.value(4) == 5);
    CHECK(v.eval(Param{2, 0.5}) == 2.5);
    CHECK(v.vertex_prefix_min(3) == 0);
    CHECK(v.vertex_prefix_max(3) == 4);
    CHECK(v.prefix_max(Param{3, 0.5}) == 4);
    CHECK(v.prefix_min(Param{2, 0.5}) == 0);
}

TEST_CASE("reversed view renumbers from the far end") {
    auto s = ts({0, 4, 1, 5});
    auto e = build_envelope(s);
    CurveView v(s, e, true);
    CHECK(v.value(1) == 5);
    CHECK(v.value(4) == 0);
    CHECK(v.vertex_prefix_min(2) == 1);
    CHECK(v.vertex_prefix_max(2) == 5);
    // view parameter 1.5 sits halfway along edge 5 -> 1
    CHECK(v.eval(Param{1, 0.5}) == 3);
    CHECK(v.prefix_min(Param{1, 0.5}) == 3);

    CHECK(v.to_underlying(Param{1, 0.0}) == Param{3, 1.0});  // view vertex 1 = series end
    CHECK(v.to_underlying(Param{1, 0.5}) == Param{3, 0.5});
    CHECK(v.to_underlying(Param{4, 0.0}) == Param{1, 0.0});
    CHECK(v.to_underlying(Param{3, 0.25}) == Param{1, 0.75});
}

TEST_CASE("view evaluation agrees with the underlying series") {
    std::mt19937 rng(5);
    for (int it = 0; it < 200; ++it) {
        auto s = ts(random_values(rng, 8));
        auto e = build_envelope(s);
        for (bool rev : {false, true}) {
            CurveView v(s, e, rev);
            std::uniform_real_distribution<double> pos(1.0, double(s.size()));
            for (int k = 0; k < 20; ++k) {
                Param t = param_at(pos(rng), s.size());
                // same point, interpolated from opposite ends: equal up to roundoff
                CHECK(std::abs(v.eval(t) - eval(s, v.to_underlying(t))) <= 1e-12);
            }
            for (int i = 1; i <= s.size(); ++i) {
                double mn = v.value(1), mx = v.value(1);
                for (int j = 2; j <= i; ++j) {
                    mn = std::min(mn, v.value(j));
                    mx = std::max(mx, v.value(j));
                }
                CHECK(v.vertex_prefix_min(i) == mn);
                CHECK(v.vertex_prefix_max(i) == mx);
            }
        }
    }
}

TEST_CASE("view first_entry matches the series scanner") {
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> band(-7.0, 7.0);
    for (int it = 0; it < 300; ++it) {
        auto s = ts(random_values(rng, 8));
        auto e = build_envelope(s);
        auto r = reversed_copy(s);
        std::uniform_real_distribution<double> pos(1.0, double(s.size()));
        double a = band(rng), b = band(rng);
        double lo = std::min(a, b), hi = std::max(a, b);
        Param start = param_at(pos(rng), s.size());
        Param bound = param_at(pos(rng), s.size());
        if (bound < start) std::swap(start, bound);

        CurveView fwd(s, e, false);
        CHECK(first_entry(fwd, start, bound, lo, hi) == first_entry(s, start, bound, lo, hi));

        // the reversed view must agree with a physically reversed series
        CurveView rev(s, e, true);
        CHECK(first_entry(rev, start, bound, lo, hi) == first_entry(r, start, bound, lo, hi));
    }
}
