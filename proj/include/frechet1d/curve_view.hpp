#pragma once

// Orientation-aware, zero-copy access to a series and its envelope.  The
// decision pipeline runs the same boundary machinery from both curve ends;
// a reversed view renumbers vertices as i -> n+1-i lazily so that suffix
// computations reuse prefix code without materializing reversed arrays.

#include <optional>

#include "frechet1d/series.hpp"

namespace frechet1d {

class CurveView {
public:
    CurveView(const TimeSeries& s, const PrefixEnvelope& e, bool reversed)
        : s_(&s), e_(&e), rev_(reversed) {}

    int size() const { return s_->size(); }
    bool is_reversed() const { return rev_; }

    /// 1-based vertex index in view coordinates.
    double value(int i) const { return s_->value(underlying_vertex(i)); }
    int underlying_vertex(int i) const { return rev_ ? s_->size() + 1 - i : i; }

    double eval(Param t) const {
        if (t.frac == 0.0) return value(t.edge);
        if (t.frac == 1.0) return value(t.edge + 1);
        double a = value(t.edge), b = value(t.edge + 1);
        return a + t.frac * (b - a);
    }

    /// Extrema over view vertices 1..i.
    double vertex_prefix_min(int i) const {
        return rev_ ? e_->smin(s_->size() + 1 - i) : e_->pmin(i);
    }
    double vertex_prefix_max(int i) const {
        return rev_ ? e_->smax(s_->size() + 1 - i) : e_->pmax(i);
    }

    /// Extrema over view parameters [1, t], including the partial edge.
    double prefix_min(Param t) const {
        double base = vertex_prefix_min(t.floor_vertex());
        if (t.frac != 0.0 && t.frac != 1.0) base = std::min(base, eval(t));
        return base;
    }
    double prefix_max(Param t) const {
        double base = vertex_prefix_max(t.floor_vertex());
        if (t.frac != 0.0 && t.frac != 1.0) base = std::max(base, eval(t));
        return base;
    }

    /// Maps a view parameter to the equivalent parameter on the underlying
    /// forward series.
    Param to_underlying(Param t) const;

private:
    const TimeSeries* s_;
    const PrefixEnvelope* e_;
    bool rev_;
};

/// Earliest view parameter t with start <= t <= bound and eval(t) in
/// [lo, hi]; nullopt if the view never enters the interval in that window.
std::optional<Param> first_entry(const CurveView& c, Param start, Param bound, double lo,
                                 double hi);

}  // namespace frechet1d
