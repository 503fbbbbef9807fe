#include "frechet1d/series.hpp"

#include <algorithm>
#include <cmath>

namespace frechet1d {

Param normalize_param(Param p, int n) {
    if (n <= 1) return Param{1, 0.0};
    if (p.frac == 1.0 && p.edge + 1 < n) return Param{p.edge + 1, 0.0};
    if (p.frac == 0.0 && p.edge == n) return Param{n - 1, 1.0};
    return p;
}

Param param_at(double t, int n) {
    if (n <= 1 || t <= 1.0) return Param{1, 0.0};
    if (t >= double(n)) return Param{n - 1, 1.0};
    int i = int(std::floor(t));
    double f = t - double(i);
    return normalize_param(Param{i, f}, n);
}

TimeSeries make_series(const std::vector<double>& values) {
    if (values.empty()) throw std::invalid_argument("empty series");
    for (size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i]))
            throw std::invalid_argument("non-finite value at index " + std::to_string(i + 1));
    }
    TimeSeries s;
    s.values = values;
    s.canonical = false;
    return s;
}

TimeSeries canonicalize(const TimeSeries& s) {
    std::vector<double> out;
    out.reserve(s.values.size());
    for (double v : s.values) {
        if (!out.empty() && out.back() == v) continue;
        out.push_back(v);
        while (out.size() >= 3) {
            double a = out[out.size() - 3];
            double b = out[out.size() - 2];
            double c = out[out.size() - 1];
            if ((a < b && b < c) || (a > b && b > c)) {
                out.erase(out.end() - 2);
            } else {
                break;
            }
        }
    }
    TimeSeries r;
    r.values = std::move(out);
    r.canonical = true;
    return r;
}

bool is_canonical(const TimeSeries& s) {
    int n = s.size();
    for (int i = 1; i < n; ++i)
        if (s.value(i) == s.value(i + 1)) return false;
    for (int i = 2; i < n; ++i) {
        double a = s.value(i - 1), b = s.value(i), c = s.value(i + 1);
        if ((a < b && b < c) || (a > b && b > c)) return false;
    }
    return true;
}

double eval(const TimeSeries& s, Param t) {
    if (t.frac == 0.0) return s.value(t.edge);
    if (t.frac == 1.0) return s.value(t.edge + 1);
    double a = s.value(t.edge), b = s.value(t.edge + 1);
    return a + t.frac * (b - a);
}

double eval(const TimeSeries& s, double t) { return eval(s, param_at(t, s.size())); }

PrefixEnvelope build_envelope(const TimeSeries& s) {
    int n = s.size();
    PrefixEnvelope e;
    e.prefix_min.resize(size_t(n));
    e.prefix_max.resize(size_t(n));
    e.suffix_min.resize(size_t(n));
    e.suffix_max.resize(size_t(n));
    for (int i = 1; i <= n; ++i) {
        double v = s.value(i);
        e.prefix_min[size_t(i - 1)] = i == 1 ? v : std::min(v, e.prefix_min[size_t(i - 2)]);
        e.prefix_max[size_t(i - 1)] = i == 1 ? v : std::max(v, e.prefix_max[size_t(i - 2)]);
    }
    for (int i = n; i >= 1; --i) {
        double v = s.value(i);
        e.suffix_min[size_t(i - 1)] = i == n ? v : std::min(v, e.suffix_min[size_t(i)]);
        e.suffix_max[size_t(i - 1)] = i == n ? v : std::max(v, e.suffix_max[size_t(i)]);
    }
    return e;
}

namespace {

// Earliest t >= start whose value is <= level (leq) / >= level (!leq).
std::optional<Param> first_reach(const TimeSeries& s, Param start, double level, bool leq) {
    int n = s.size();
    double v0 = eval(s, start);
    if (leq ? v0 <= level : v0 >= level) return start;
    if (start.frac == 1.0) return std::nullopt;  // start is the curve end
    for (int e = start.edge; e < n; ++e) {
        double a = s.value(e), b = s.value(e + 1);
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

std::optional<Param> first_entry(const TimeSeries& s, Param start, Param bound, double lo,
                                 double hi) {
    if (lo > hi) return std::nullopt;
    auto a = first_reach(s, start, hi, true);
    if (!a) return std::nullopt;
    auto b = first_reach(s, start, lo, false);
    if (!b) return std::nullopt;
    Param t = std::max(*a, *b);
    if (bound < t) return std::nullopt;
    return t;
}

TimeSeries subcurve(const TimeSeries& s, Param from, Param to) {
    TimeSeries r;
    r.canonical = false;
    if (to < from) std::swap(from, to);
    r.values.push_back(eval(s, from));
    int first = from.ceil_vertex();
    if (from.frac == 0.0) ++first;  // starting vertex already emitted
    int last = to.floor_vertex();
    if (to.frac == 0.0 || to.frac == 1.0) --last;  // ending vertex emitted below
    for (int i = first; i <= last; ++i) r.values.push_back(s.value(i));
    if (from < to) r.values.push_back(eval(s, to));
    return r;
}

}  // namespace frechet1d
