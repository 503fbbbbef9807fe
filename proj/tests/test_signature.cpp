#include "doctest.h"
#include "frechet1d/signature.hpp"

#include <cmath>
#include <random>

using namespace frechet1d;

namespace {

TimeSeries canon(std::vector<double> v) { return canonicalize(make_series(v)); }

std::vector<int> level_set(const SignatureHierarchy& h, double delta) {
    std::vector<int> out;
    for (int i = 1; i <= h.series.size(); ++i)
        if (h.threshold(i) > delta) out.push_back(i);
    return out;
}

// Exhaustive search: does any valid delta-signature exist?  Candidates are
// all vertex subsets containing both endpoints (small n only).
bool signature_exists_brute(const TimeSeries& s, double delta) {
    int n = s.size();
    if (n == 1) return true;
    int interior = n - 2;
    for (int mask = 0; mask < (1 << interior); ++mask) {
        std::vector<int> idx{1};
        for (int b = 0; b < interior; ++b)
            if (mask & (1 << b)) idx.push_back(b + 2);
        idx.push_back(n);
        if (validate_signature(s, idx, delta).ok) return true;
    }
    return false;
}

TimeSeries random_canonical(std::mt19937& rng, int max_len) {
    std::uniform_int_distribution<int> len(1, max_len), val(-8, 8);
    while (true) {
        std::vector<double> v(size_t(len(rng)), 0.0);
        for (auto& x : v) x = val(rng);
        auto c = canonicalize(make_series(v));
        if (c.size() >= 1) return c;
    }
}

}  // namespace

TEST_CASE("hierarchy thresholds, pinned") {
    auto h = build_hierarchy(canon({0, 1, 0.5, 3}));
    CHECK(h.removal_threshold == std::vector<double>{kInf, 0.25, 0.25, kInf});
    CHECK(h.levels == std::vector<double>{0.25});

    auto h2 = build_hierarchy(canon({5, 0, 10}));
    CHECK(h2.removal_threshold == std::vector<double>{kInf, 5, kInf});

    auto h3 = build_hierarchy(canon({0, 10}));
    CHECK(h3.removal_threshold == std::vector<double>{kInf, kInf});
    CHECK(h3.levels.empty());

    // the interior pair retires first on its half-amplitude, before the
    // smaller-amplitude end edge
    auto h4 = build_hierarchy(canon({5, 7, 4.9, 10}));
    double half = (7.0 - 4.9) / 2;  // 1.05 up to representation
    CHECK(h4.removal_threshold == std::vector<double>{kInf, half, half, kInf});

    auto h5 = build_hierarchy(canon({2, 8, 0, 3}));
    CHECK(h5.removal_threshold == std::vector<double>{kInf, 5, 3, kInf});

    CHECK_THROWS_AS(build_hierarchy(make_series({0, 1, 2})), std::invalid_argument);
}

TEST_CASE("signature_size_at") {
    auto h = build_hierarchy(canon({0, 1, 0.5, 3}));
    CHECK(signature_size_at(h, 0.1) == 4);
    CHECK(signature_size_at(h, 0.25) == 2);  // strict: threshold > delta
    CHECK(signature_size_at(h, 0.3) == 2);
    CHECK(signature_size_at(h, 0.0) == 4);
    auto h2 = build_hierarchy(canon({0, 10}));
    CHECK(signature_size_at(h2, 0) == 2);
    CHECK_THROWS_AS(signature_size_at(h, -1), std::invalid_argument);
}

TEST_CASE("extract_extended, pinned") {
    auto h = build_hierarchy(canon({0, 1, 0.5, 3}));
    auto e = extract_extended(h, 0.2);
    // both extension vertices collide with the endpoints and are kept as
    // zero-width end pieces
    CHECK(e.indices == std::vector<int>{1, 1, 2, 3, 4, 4});
    CHECK(e.core == std::vector<int>{1, 2, 3, 4});
    CHECK_FALSE(e.degenerate);

    auto e2 = extract_extended(h, 0.3);
    CHECK(e2.degenerate);
    CHECK(e2.indices == std::vector<int>{1, 4});  // argmin 1, argmax 4 already endpoints
    CHECK(e2.core == std::vector<int>{1, 4});

    auto h3 = build_hierarchy(canon({5, 0, 10}));
    auto e3 = extract_extended(h3, 1);
    CHECK(e3.indices == std::vector<int>{1, 1, 2, 3, 3});
    CHECK_FALSE(e3.degenerate);

    // degenerate core with interior global extrema: all four distinct
    auto h4 = build_hierarchy(canon({2, 8, 0, 3}));
    auto e4 = extract_extended(h4, 5);
    CHECK(e4.degenerate);
    CHECK(e4.core == std::vector<int>{1, 4});
    CHECK(e4.indices == std::vector<int>{1, 2, 3, 4});

    // wide prefix: the opposite-extreme vertex collides with the endpoint
    // and stays in the list as a zero-width end piece
    auto h5 = build_hierarchy(canon({0, 10, 5}));
    auto e5 = extract_extended(h5, 1);
    CHECK(e5.indices == std::vector<int>{1, 1, 2, 3, 3});
    CHECK_FALSE(e5.degenerate);
}

TEST_CASE("validate_signature, pinned") {
    auto s = canon({0, 1, 0.5, 3});
    CHECK(validate_signature(s, {1, 4}, 0.3).ok);
    auto r = validate_signature(s, {1, 4}, 0.2);
    CHECK_FALSE(r.ok);
    CHECK(r.clause == 'b');
    CHECK(validate_signature(canon({0, 10}), {1, 2}, 0).ok);
    CHECK(validate_signature(s, {1, 2, 3, 4}, 0.2).ok);

    // clause (a): vertex 2 of the candidate lies between its neighbours
    auto sa = make_series({0, 1, 0.5, 3});  // non-canonical host is fine for the checker
    CHECK(validate_signature(sa, {1, 2, 4}, 0.0).clause == 'a');
    // clause (c): interior edge must exceed 2 delta
    auto sc = canon({0, 5, 1, 6, 0.5, 7});
    auto rc = validate_signature(sc, {1, 2, 3, 4, 5, 6}, 2.0);
    CHECK_FALSE(rc.ok);
    CHECK(rc.clause == 'c');
    // clause (d): end piece dips below the delta-widened segment band
    auto sd = canon({0, -1.5, 10});
    auto rd = validate_signature(sd, {1, 3}, 1.0);
    CHECK_FALSE(rd.ok);
    CHECK(rd.clause == 'd');

    CHECK_THROWS_AS(validate_signature(s, {2, 4}, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(validate_signature(s, {1, 3, 2, 4}, 0.1), std::invalid_argument);
}

TEST_CASE("hierarchy levels arbitrated by the validator across a delta sweep") {
    std::mt19937 rng(31337);
    for (int it = 0; it < 150; ++it) {
        auto s = random_canonical(rng, 11);
        auto h = build_hierarchy(s);
        std::vector<double> sweep{0.0};
        for (size_t i = 0; i < h.levels.size(); ++i) {
            double t = h.levels[i];
            if (t > 1e-6) sweep.push_back(t - 1e-6);
            sweep.push_back(t);
            sweep.push_back(t + 1e-6);
            double next = i + 1 < h.levels.size() ? h.levels[i + 1] : t + 2;
            sweep.push_back((t + next) / 2);
        }
        sweep.push_back(h.levels.empty() ? 1.0 : h.levels.back() + 10);

        std::vector<int> prev_set;
        double prev_delta = -1;
        for (double d : sweep) {
            auto set = level_set(h, d);
            CAPTURE(it);
            CAPTURE(d);
            if (int(set.size()) > 2) {
                CHECK(validate_signature(h.series, set, d).ok);
            } else if (s.size() >= 2) {
                REQUIRE(set.size() == 2);
                // the hierarchy may only degenerate to the endpoints when the
                // endpoint pair is valid or nothing at all is valid
                bool endpoint_ok = validate_signature(h.series, set, d).ok;
                if (!endpoint_ok) CHECK_FALSE(signature_exists_brute(h.series, d));
            }
            CHECK(signature_size_at(h, d) == int(set.size()));
            if (prev_delta >= 0 && d >= prev_delta) {
                // nesting: larger delta keeps a subset
                for (int v : set)
                    CHECK(std::find(prev_set.begin(), prev_set.end(), v) != prev_set.end());
            }
            prev_set = set;
            prev_delta = d;
        }
        CHECK(int(level_set(h, 0).size()) == s.size());
    }
}

TEST_CASE("extraction properties across a delta sweep") {
    std::mt19937 rng(4242);
    for (int it = 0; it < 200; ++it) {
        auto s = random_canonical(rng, 24);
        auto h = build_hierarchy(s);
        std::vector<double> sweep{0.0, 0.13};
        for (double t : h.levels) {
            sweep.push_back(std::max(0.0, t - 1e-6));
            sweep.push_back(t + 1e-6);
        }
        for (double d : sweep) {
            auto e = extract_extended(h, d);
            CAPTURE(it);
            CAPTURE(d);
            REQUIRE(!e.indices.empty());
            CHECK(e.indices.front() == 1);
            CHECK(e.indices.back() == s.size());
            CHECK(int(e.core.size()) == signature_size_at(h, d));
            // non-decreasing: colliding extension vertices stay as duplicates
            for (size_t i = 1; i < e.indices.size(); ++i)
                CHECK(e.indices[i] >= e.indices[i - 1]);
            if (e.degenerate) {
                CHECK(e.core.size() <= 2);
                // indices are exactly endpoints plus global extrema
                std::vector<int> want{1, h.prefix_argmin[size_t(s.size() - 1)],
                                      h.prefix_argmax[size_t(s.size() - 1)], s.size()};
                std::sort(want.begin(), want.end());
                want.erase(std::unique(want.begin(), want.end()), want.end());
                CHECK(e.indices == want);
            } else {
                CHECK(validate_signature(s, e.core, d).ok);
                // extension vertices bracket the prefix and suffix
                int i2 = e.core[1], ilast = e.core[e.core.size() - 2];
                int ip = e.indices[1] < i2 ? e.indices[1] : 1;
                double lo = std::min(s.value(ip), s.value(i2));
                double hi = std::max(s.value(ip), s.value(i2));
                for (int i = 1; i <= i2; ++i) {
                    CHECK(s.value(i) >= lo);
                    CHECK(s.value(i) <= hi);
                }
                int is = e.indices[e.indices.size() - 2] > ilast ? e.indices[e.indices.size() - 2]
                                                                 : s.size();
                double lo2 = std::min(s.value(is), s.value(ilast));
                double hi2 = std::max(s.value(is), s.value(ilast));
                for (int i = ilast; i <= s.size(); ++i) {
                    CHECK(s.value(i) >= lo2);
                    CHECK(s.value(i) <= hi2);
                }
            }
        }
    }
}
