#include "doctest.h"
#include "frechet1d/series.hpp"

#include <random>

using namespace frechet1d;

namespace {

TimeSeries ts(std::vector<double> v) { return make_series(v); }

// Exact reference for first_entry: the earliest entry is either the start
// parameter, a vertex, or a crossing of lo/hi on some edge, so enumerating
// those candidates and taking the smallest admissible one is exhaustive.
std::optional<Param> first_entry_brute(const TimeSeries& s, Param start, Param bound, double lo,
                                       double hi) {
    if (lo > hi) return std::nullopt;
    int n = s.size();
    std::vector<Param> cand;
    cand.push_back(start);
    for (int i = 1; i <= n; ++i) cand.push_back(normalize_param(Param::vertex(i), n));
    for (int e = 1; e < n; ++e) {
        double a = s.value(e), b = s.value(e + 1);
        for (double level : {lo, hi}) {
            if ((a - level) * (b - level) < 0) {
                cand.push_back(Param{e, (level - a) / (b - a)});
            }
        }
    }
    std::optional<Param> best;
    for (Param p : cand) {
        if (p < start || bound < p) continue;
        double v = eval(s, p);
        if (v < lo - 1e-12 || v > hi + 1e-12) continue;
        if (!best || p < *best) best = p;
    }
    return best;
}

}  // namespace

TEST_CASE("make_series validates input") {
    CHECK_THROWS_WITH_AS(make_series({}), "empty series", std::invalid_argument);
    CHECK_THROWS_WITH_AS(make_series({1.0, std::nan(""), 2.0}), "non-finite value at index 2",
                         std::invalid_argument);
    CHECK_THROWS_AS(make_series({kInf}), std::invalid_argument);
    CHECK(ts({4.0}).size() == 1);
}

TEST_CASE("eval interpolates linearly") {
    auto s = ts({5, 0});
    CHECK(eval(s, 1.0) == 5.0);
    CHECK(eval(s, 1.2) == doctest::Approx(4.0));  // 5 + 0.2 * (0 - 5)
    CHECK(eval(s, 2.0) == 0.0);
    auto one = ts({7});
    CHECK(eval(one, 1.0) == 7.0);
}

TEST_CASE("param representation") {
    CHECK(param_at(2.0, 3) == Param::vertex(2));
    CHECK(param_at(3.0, 3) == (Param{2, 1.0}));
    CHECK((Param{2, 1.0}).to_double() == 3.0);
    CHECK(param_at(1.0, 1) == Param::vertex(1));
    CHECK(normalize_param(Param{1, 1.0}, 3) == Param::vertex(2));
    CHECK(normalize_param(Param{2, 1.0}, 3) == (Param{2, 1.0}));
    CHECK((Param{2, 1.0}).floor_vertex() == 3);
    CHECK((Param{2, 1.0}).ceil_vertex() == 3);
    CHECK((Param{2, 0.5}).floor_vertex() == 2);
    CHECK((Param{2, 0.5}).ceil_vertex() == 3);
    CHECK(Param::vertex(2) < (Param{2, 0.1}));
    CHECK((Param{1, 0.9}) < Param::vertex(2));
}

TEST_CASE("canonicalize removes non-extremal vertices") {
    auto c = canonicalize(ts({0, 3, 3, 5, 1}));
    CHECK(c.values == std::vector<double>{0, 5, 1});
    CHECK(c.canonical);
    CHECK(is_canonical(c));

    CHECK(canonicalize(ts({7})).values == std::vector<double>{7});
    CHECK(canonicalize(ts({2, 2, 2})).values == std::vector<double>{2});
    CHECK(canonicalize(ts({0, 1, 2, 3})).values == std::vector<double>{0, 3});
    CHECK(canonicalize(ts({0, 1, 0.5, 3})).values == std::vector<double>{0, 1, 0.5, 3});
    CHECK(canonicalize(ts({1, 0, 0, 2, 2, 1})).values == std::vector<double>{1, 0, 2, 1});

    CHECK_FALSE(is_canonical(ts({0, 1, 2})));
    CHECK_FALSE(is_canonical(ts({1, 1})));
    CHECK(is_canonical(ts({5, 0, 10})));
}

TEST_CASE("canonicalize keeps interior vertices strict extrema") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> val(-5, 5), len(1, 12);
    for (int it = 0; it < 200; ++it) {
        std::vector<double> v(size_t(len(rng)), 0.0);
        for (auto& x : v) x = val(rng);
        auto c = canonicalize(make_series(v));
        CHECK(is_canonical(c));
        CHECK(c.front() == v.front());
        CHECK(c.back() == v.back());
        // image preserved at the ends and extrema preserved overall
        auto e0 = build_envelope(make_series(v));
        auto e1 = build_envelope(c);
        CHECK(e0.prefix_min.back() == e1.prefix_min.back());
        CHECK(e0.prefix_max.back() == e1.prefix_max.back());
    }
}

TEST_CASE("envelopes") {
    auto e = build_envelope(ts({3, 2, 4}));
    CHECK(e.prefix_min == std::vector<double>{3, 2, 2});
    CHECK(e.prefix_max == std::vector<double>{3, 3, 4});
    CHECK(e.suffix_min == std::vector<double>{2, 2, 4});
    CHECK(e.suffix_max == std::vector<double>{4, 4, 4});
    CHECK(e.pmin(2) == 2);
    CHECK(e.smax(1) == 4);
}

TEST_CASE("first_entry basics") {
    auto s = ts({5, 0});
    auto r = first_entry(s, Param::vertex(1), Param{1, 1.0}, 3, 4);
    REQUIRE(r.has_value());
    CHECK(r->to_double() == doctest::Approx(1.2));

    auto s2 = ts({3, 2, 4});
    auto r2 = first_entry(s2, Param::vertex(1), Param{2, 1.0}, 2, 3);
    REQUIRE(r2.has_value());
    CHECK(*r2 == Param::vertex(1));

    CHECK_FALSE(first_entry(ts({0, 1}), Param::vertex(1), Param{1, 1.0}, 5, 6).has_value());
    CHECK_FALSE(first_entry(s, Param::vertex(1), Param{1, 1.0}, 4, 3).has_value());
}

TEST_CASE("first_entry with fractional start and pass-through edges") {
    auto s = ts({0, 10, 0});
    auto r = first_entry(s, Param{1, 0.5}, Param{2, 1.0}, 6, 7);
    REQUIRE(r.has_value());
    CHECK(r->to_double() == doctest::Approx(1.6));
    CHECK(eval(s, *r) == doctest::Approx(6.0));

    // entry strictly inside an edge that passes through the interval
    auto s2 = ts({0, 10});
    auto r2 = first_entry(s2, Param::vertex(1), Param{1, 1.0}, 3, 4);
    REQUIRE(r2.has_value());
    CHECK(r2->to_double() == doctest::Approx(1.3));

    // bound cuts off an otherwise later entry
    CHECK_FALSE(first_entry(s2, Param::vertex(1), Param{1, 0.2}, 3, 4).has_value());
}

TEST_CASE("first_entry matches exhaustive candidate search") {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<int> val(-4, 4), len(1, 9);
    std::uniform_real_distribution<double> fr(0.0, 1.0);
    for (int it = 0; it < 500; ++it) {
        int n = len(rng);
        std::vector<double> v(size_t(n), 0.0);
        for (auto& x : v) x = val(rng);
        auto s = make_series(v);
        double t0 = 1.0 + fr(rng) * (n - 1), t1 = 1.0 + fr(rng) * (n - 1);
        Param start = param_at(std::min(t0, t1), n), bound = param_at(std::max(t0, t1), n);
        double lo = val(rng) + fr(rng) - 0.5;
        double hi = lo + fr(rng) * 3.0;
        auto got = first_entry(s, start, bound, lo, hi);
        auto want = first_entry_brute(s, start, bound, lo, hi);
        REQUIRE(got.has_value() == want.has_value());
        if (got) {
            CHECK(got->to_double() == doctest::Approx(want->to_double()).epsilon(1e-9));
            double g = eval(s, *got);
            CHECK(g >= lo - 1e-9);
            CHECK(g <= hi + 1e-9);
        }
    }
}

TEST_CASE("subcurve extraction") {
    auto s = ts({0, 10, 0});
    CHECK(subcurve(s, Param{1, 0.5}, Param{2, 0.5}).values == std::vector<double>{5, 10, 5});
    CHECK(subcurve(s, Param::vertex(2), Param::vertex(2)).values == std::vector<double>{10});
    CHECK(subcurve(s, Param::vertex(1), Param{2, 1.0}).values == std::vector<double>{0, 10, 0});
    CHECK(subcurve(s, Param{1, 0.25}, Param{1, 0.75}).values == std::vector<double>{2.5, 7.5});
}
