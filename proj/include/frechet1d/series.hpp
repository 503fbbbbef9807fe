#pragma once

// Time series as 1D polygonal curves: storage, canonical form, continuous
// evaluation and prefix/suffix envelopes.  Vertex indices are 1-based
// throughout, matching the conventions used by the rest of the library.

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace frechet1d {

/// A curve parameter in [1, n].  Stored exactly as (edge, fraction) so that
/// parameters derived from different computations compare reliably: `edge` is
/// the 1-based index of the edge the point lies on and `frac` in [0, 1) its
/// offset.  The curve end (parameter n) is the single point represented with
/// frac == 1 on the last edge; a one-vertex curve uses edge 1, frac 0.
struct Param {
    int edge = 1;
    double frac = 0.0;

    static Param vertex(int i) { return Param{i, 0.0}; }

    double to_double() const { return double(edge) + frac; }
    bool is_vertex() const { return frac == 0.0 || frac == 1.0; }
    /// Nearest vertex index at or after this parameter.
    int ceil_vertex() const { return frac == 0.0 ? edge : edge + 1; }
    int floor_vertex() const { return frac == 1.0 ? edge + 1 : edge; }

    friend bool operator==(const Param& a, const Param& b) {
        return a.edge == b.edge && a.frac == b.frac;
    }
    friend bool operator<(const Param& a, const Param& b) {
        return a.edge != b.edge ? a.edge < b.edge : a.frac < b.frac;
    }
    friend bool operator<=(const Param& a, const Param& b) { return a < b || a == b; }
    friend bool operator>(const Param& a, const Param& b) { return b < a; }
    friend bool operator>=(const Param& a, const Param& b) { return b <= a; }
};

/// Normalizes frac == 1 to the next vertex where possible, keeping the
/// representation unique (frac in [0,1) except at the very end of a curve).
Param normalize_param(Param p, int n);

/// Make a Param for an arbitrary real position t in [1, n].
Param param_at(double t, int n);

struct TimeSeries {
    std::vector<double> values;  // vertex i is values[i-1]
    bool canonical = false;

    int size() const { return int(values.size()); }
    double value(int i) const { return values[size_t(i - 1)]; }
    double front() const { return values.front(); }
    double back() const { return values.back(); }
};

/// Validates raw input values (non-empty, all finite) and wraps them.
/// Throws std::invalid_argument with a 1-based position on bad input.
TimeSeries make_series(const std::vector<double>& values);

/// Removes vertices that lie (weakly) between their neighbours, yielding the
/// minimal vertex sequence with the same image and traversal order.  Every
/// interior vertex of the result is a strict local extremum and no two
/// consecutive values are equal.  Fréchet distances to arbitrary curves are
/// unchanged.
TimeSeries canonicalize(const TimeSeries& s);

bool is_canonical(const TimeSeries& s);

/// Value of the curve at parameter t (1-based, linear interpolation).
double eval(const TimeSeries& s, double t);
double eval(const TimeSeries& s, Param t);

/// Monotone running extrema in both directions, O(1) subrange width at the
/// curve ends.
struct PrefixEnvelope {
    std::vector<double> prefix_min, prefix_max, suffix_min, suffix_max;

    double pmin(int i) const { return prefix_min[size_t(i - 1)]; }
    double pmax(int i) const { return prefix_max[size_t(i - 1)]; }
    double smin(int i) const { return suffix_min[size_t(i - 1)]; }
    double smax(int i) const { return suffix_max[size_t(i - 1)]; }
};

PrefixEnvelope build_envelope(const TimeSeries& s);

/// Extracts the vertex list of the subcurve between two parameters as a new
/// (generally non-canonical) series with interpolated endpoints.
TimeSeries subcurve(const TimeSeries& s, Param from, Param to);

/// Earliest parameter t with start <= t <= bound and eval(t) in [lo, hi], or
/// nullopt if the curve never enters the interval in that window.  Linear
/// scan; the indexed equivalent lives on CurveView.
std::optional<Param> first_entry(const TimeSeries& s, Param start, Param bound, double lo,
                                 double hi);

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace frechet1d
