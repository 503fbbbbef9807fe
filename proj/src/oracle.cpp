#include "frechet1d/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "frechet1d/curve_view.hpp"
#include "frechet1d/reference.hpp"
#include "frechet1d/seeds.hpp"

namespace frechet1d {

Oracle build_oracle(const TimeSeries& raw) {
    TimeSeries canon = canonicalize(raw);
    SignatureHierarchy h = build_hierarchy(canon);
    RangeIndex idx(canon.values);
    PrefixEnvelope env = build_envelope(canon);
    return Oracle{std::move(canon), raw.size(), std::move(h), std::move(idx), std::move(env)};
}

PreparedQuery prepare_query(const TimeSeries& raw) {
    TimeSeries canon = canonicalize(raw);
    SignatureHierarchy h = build_hierarchy(canon);
    RangeIndex idx(canon.values);
    PrefixEnvelope env = build_envelope(canon);
    return PreparedQuery{std::move(canon), std::move(h), std::move(idx), std::move(env)};
}

namespace {

enum class Origin : std::uint8_t { kNone, kSeed, kFromBottom, kFromLeft };

// Full record of the propagation inputs, kept only when a witness may be
// requested.  V(k, l) / W(k, l) are the bottom and left entry parameters of
// cell (k, l), with the origin describing which input of the producing cell
// justified the value.
struct GridLog {
    int kp = 0, kq = 0;
    bool filled = false;
    bool v_side = false;
    bool glue_final = false;  // accepted through the final cell's own entries
    double v_fin = kInf, w_fin = kInf;
    std::vector<double> v, w;
    std::vector<Origin> vo, wo;

    void init(int kp_, int kq_) {
        kp = kp_;
        kq = kq_;
        size_t cells = size_t(kp) * size_t(kq);
        v.assign(cells, kInf);
        w.assign(cells, kInf);
        vo.assign(cells, Origin::kNone);
        wo.assign(cells, Origin::kNone);
    }
    size_t at(int k, int l) const { return size_t(k - 1) * size_t(kq) + size_t(l - 1); }
};

struct InternalResult {
    bool accepted = false;
    bool fallback = false;  // answered by the reference sweep
};

// Earliest parameter in [from, to] whose value lies in [lo, hi].  Entering
// the band from below means crossing the level lo (from above: hi), so one
// threshold query pins the crossing edge and the fraction is a single
// division of exact differences.
std::optional<Param> indexed_entry(const TimeSeries& s, const RangeIndex& ix, int from, int to,
                                   double lo, double hi) {
    if (from > to) return std::nullopt;
    double x0 = s.value(from);
    if (x0 >= lo && x0 <= hi) return Param::vertex(from);
    double level = x0 < lo ? lo : hi;
    std::optional<int> i1 =
        x0 < lo ? ix.leftmost_in(from, to, lo, kInf) : ix.leftmost_in(from, to, -kInf, hi);
    if (!i1) return std::nullopt;
    double a = s.value(*i1 - 1), b = s.value(*i1);
    return normalize_param(Param{*i1 - 1, (level - a) / (b - a)}, s.size());
}

// Earliest parameter at or after `from` (which may sit mid-edge) whose value
// lies in [lo, hi].  The remaining part of `from`'s edge is inspected by
// comparing fractions that are quotients over one common denominator, so a
// stalled entry point carried from the previous cell is recognized exactly;
// past that edge the search continues at the next vertex.
std::optional<Param> continuous_entry(const TimeSeries& s, const RangeIndex& ix, Param from,
                                      int to, double lo, double hi) {
    from = normalize_param(from, s.size());
    if (from.is_vertex()) return indexed_entry(s, ix, from.floor_vertex(), to, lo, hi);
    if (from.edge >= to) return std::nullopt;
    double a = s.value(from.edge), b = s.value(from.edge + 1);
    double f1 = 0.0, f2 = -1.0;  // in-band window of this edge, as fractions
    if (a < b) {
        if (lo <= b && a <= hi) {
            f1 = lo <= a ? 0.0 : (lo - a) / (b - a);
            f2 = hi >= b ? 1.0 : (hi - a) / (b - a);
        }
    } else if (a > b) {
        if (lo <= a && b <= hi) {
            f1 = hi >= a ? 0.0 : (a - hi) / (a - b);
            f2 = lo <= b ? 1.0 : (a - lo) / (a - b);
        }
    } else if (lo <= a && a <= hi) {
        f2 = 1.0;
    }
    if (from.frac <= f2)
        return normalize_param(Param{from.edge, std::max(from.frac, f1)}, s.size());
    return indexed_entry(s, ix, from.edge + 1, to, lo, hi);
}

// Ordering of curve parameters with a hair of slack on the fractional part,
// so that a boundary contact computed along two different arithmetic routes
// (forward crossing vs. reversed crossing) still compares as equal.  The
// slack is far below the spacing of distinct crossing fractions.
bool param_leq(Param a, Param b) {
    constexpr double kBand = 0x1p-48;
    int ae = a.is_vertex() ? a.floor_vertex() : a.edge;
    int be = b.is_vertex() ? b.floor_vertex() : b.edge;
    double af = a.is_vertex() ? 0.0 : a.frac;
    double bf = b.is_vertex() ? 0.0 : b.frac;
    if (ae != be) return ae < be;
    return af <= bf + kBand;
}

// Cell entry parameters of the whole grid: for cell (k, l), w is the first
// crossing of the line of P's signature vertex i_k inside Q piece l (a Q
// parameter), v the first crossing of the j_l vertex line inside P piece k
// (a P parameter).  Both indices run from 1.
struct GridEntries {
    int kp = 0, kq = 0;
    std::vector<std::optional<Param>> w, v;

    void init(int kp_, int kq_) {
        kp = kp_;
        kq = kq_;
        w.assign(size_t(kp) * size_t(kq), std::nullopt);
        v.assign(size_t(kp) * size_t(kq), std::nullopt);
    }
    size_t at(int k, int l) const { return size_t(k - 1) * size_t(kq) + size_t(l - 1); }
};

// Column-major propagation of cell entry parameters across the signature
// grid.  ip / jq are the extended signature vertices of P and Q.  Every
// entry is the true continuous first entry, so a fractional stall point
// (one level matched against two consecutive signature vertices of the
// other curve) survives the hand-off from cell to cell.  The forward seed
// v_seed crosses the line of Q's plain-signature second vertex (the left
// line of column 3); it is injected into the one row whose P piece contains
// it, so every leg the propagation later builds stays inside a single
// signature piece of each curve.  w_seed is symmetric (bottom line of row
// 3, in the containing column).  Everything else starts unreachable, so
// every entry descends from a seed.  Returns the entries of every cell.
GridEntries propagate(const Oracle& o, const PreparedQuery& q, double delta,
                      const std::vector<int>& ip, const std::vector<int>& jq,
                      std::optional<Param> v_seed, std::optional<Param> w_seed, DecideStats& st,
                      GridLog* log) {
    int kp = int(ip.size()) - 1, kq = int(jq.size()) - 1;
    // rows / columns whose piece contains the seed parameter (the seeds lie
    // at or before the plain-signature second vertices, so row/column 1 or 2)
    int v_row = v_seed && param_leq(*v_seed, Param::vertex(ip[1])) ? 1 : 2;
    int w_col = w_seed && param_leq(*w_seed, Param::vertex(jq[1])) ? 1 : 2;
    // vin[k] = v_{k,l} of the current column
    std::vector<std::optional<Param>> vin(size_t(kp) + 1);
    std::vector<Origin> vin_o(size_t(kp) + 1, Origin::kNone);
    GridEntries out;
    out.init(kp, kq);

    for (int l = 1; l <= kq; ++l) {
        std::optional<Param> w_cur;  // w_{k,l}, carried up the column
        Origin w_cur_o = Origin::kNone;
        for (int k = 1; k <= kp; ++k) {
            if (v_seed && l == 3 && k == v_row) {
                vin[size_t(k)] = v_seed;
                vin_o[size_t(k)] = Origin::kSeed;
            }
            if (w_seed && k == 3 && l == w_col) {
                w_cur = w_seed;
                w_cur_o = Origin::kSeed;
            }
            if (log) {
                log->v[log->at(k, l)] = vin[size_t(k)] ? vin[size_t(k)]->to_double() : kInf;
                log->vo[log->at(k, l)] = vin_o[size_t(k)];
                log->w[log->at(k, l)] = w_cur ? w_cur->to_double() : kInf;
                log->wo[log->at(k, l)] = w_cur_o;
            }
            out.w[out.at(k, l)] = w_cur;
            out.v[out.at(k, l)] = vin[size_t(k)];
            if (k == kp && l == kq) break;
            ++st.grid_cells;
            std::optional<Param> vb = vin[size_t(k)], wl = w_cur;
            if (!vb && !wl) {
                if (k < kp) {
                    w_cur = std::nullopt;
                    w_cur_o = Origin::kNone;
                }
                if (l < kq) {
                    vin[size_t(k)] = std::nullopt;
                    vin_o[size_t(k)] = Origin::kNone;
                }
                continue;
            }
            // right exit w_{k+1,l}: first parameter on this Q piece at or
            // after w_min whose value matches the next P signature value
            if (k < kp) {
                Param w_min = vb ? Param::vertex(jq[size_t(l - 1)]) : *wl;
                Origin og = vb ? Origin::kFromBottom : Origin::kFromLeft;
                double center = o.series.value(ip[size_t(k)]);
                auto hit = continuous_entry(q.series, q.index, w_min, jq[size_t(l)],
                                            center - delta, center + delta);
                w_cur = hit;
                w_cur_o = hit ? og : Origin::kNone;
            }
            // top exit v_{k,l+1}: symmetric on the P piece
            if (l < kq) {
                Param v_min = wl ? Param::vertex(ip[size_t(k - 1)]) : *vb;
                Origin og = wl ? Origin::kFromLeft : Origin::kFromBottom;
                double center = q.series.value(jq[size_t(l)]);
                auto hit = continuous_entry(o.series, o.index, v_min, ip[size_t(k)],
                                            center - delta, center + delta);
                vin[size_t(k)] = hit;
                vin_o[size_t(k)] = hit ? og : Origin::kNone;
            }
        }
    }
    return out;
}

InternalResult decide_impl(const Oracle& o, const PreparedQuery& q, double delta, DecideStats& st,
                           GridLog* log, ExtendedSignature* sp_out, ExtendedSignature* sq_out) {
    if (!(delta >= 0)) throw std::invalid_argument("delta must be nonnegative");
    const TimeSeries& P = o.series;
    const TimeSeries& Q = q.series;
    int n = P.size(), m = Q.size();

    // A signature larger than |Q| + 2 cannot be matched within delta.
    if (signature_size_at(o.hierarchy, delta) > m + 2) {
        st.early_exit = true;
        return {false, false};
    }

    ExtendedSignature sp = extract_extended(o.hierarchy, delta);
    ExtendedSignature sq = extract_extended(q.hierarchy, delta);
    if (sp.degenerate || sq.degenerate || sp.size() < 3 || sq.size() < 3) {
        st.degenerate_fallback = true;
        return {free_space_decide(P, Q, delta), true};
    }
    if (sp_out) *sp_out = sp;
    if (sq_out) *sq_out = sq;

    // All four boundary anchors are plain-signature vertices: the forward
    // seeds must claim a whole first piece (up to the second plain vertex,
    // not merely the added front vertex), and the backward seeds must leave
    // the entire last plain piece to the suffix match.  Anchoring them at
    // the added vertices would let a zero-width end piece produce a vacuous
    // seed that certifies nothing.
    int lp = int(sp.core.size()), lq = int(sq.core.size());
    int i2c = sp.core[1], j2c = sq.core[1];
    int ipen = sp.core[size_t(lp - 2)], jpen = sq.core[size_t(lq - 2)];
    int ip_last = sp.indices[size_t(sp.size() - 2)];  // second-to-last extended vertex

    CurveView pf(P, o.envelope, false), pr(P, o.envelope, true);
    CurveView qf(Q, q.envelope, false), qr(Q, q.envelope, true);
    int i2r = n + 1 - ipen, j2r = m + 1 - jpen;

    std::uint64_t nodes0 = o.index.nodes_visited() + q.index.nodes_visited();

    // forward seeds: earliest match of each first plain piece
    auto w_seed = prefix_seed(pf, i2c, qf, j2c, delta, &st.seed_dp);
    auto v_seed = prefix_seed(qf, j2c, pf, i2c, delta, &st.seed_dp);

    // backward seeds: latest parameters from which the last plain pieces
    // match, computed by the same machinery on reversed views
    auto wr = prefix_seed(pr, i2r, qr, j2r, delta, &st.seed_dp);
    auto vr = prefix_seed(qr, j2r, pr, i2r, delta, &st.seed_dp);
    std::optional<Param> w_tilde_p, v_tilde_p;
    if (wr) w_tilde_p = qr.to_underlying(*wr);
    if (vr) v_tilde_p = pr.to_underlying(*vr);

    bool accepted = false;
    bool run_grid = (w_seed || v_seed) && (w_tilde_p || v_tilde_p);
    if (run_grid) {
        if (log) log->init(sp.size() - 1, sq.size() - 1);
        auto ge = propagate(o, q, delta, sp.indices, sq.indices, v_seed, w_seed, st, log);
        int kp = sp.size() - 1, kq = sq.size() - 1;
        std::optional<Param> v_fin_p = ge.v[ge.at(kp, kq)], w_fin_p = ge.w[ge.at(kp, kq)];
        // Gluing the final cell: from an entry of the last cell the rest of
        // the matching is a plain question on P's short end piece against a
        // suffix of Q, decided exactly by a sweep.  A chain entry certifies a
        // matching of the prefixes up to it, so entry plus sweep is a full
        // matching with no further condition; comparing the entry against the
        // latest feasible suffix start would be neither sound on its own (the
        // suffix may dip out of the waiting vertex's band between the two
        // parameters) nor a valid filter here (that bound concerns crossings
        // of the penultimate core line, and the final cell may sit past it).
        TimeSeries p_tail = subcurve(P, Param::vertex(ip_last), Param::vertex(n));
        auto try_v = [&](int l) {
            if (!ge.v[ge.at(kp, l)]) return false;
            int jl = sq.indices[size_t(l - 1)];
            TimeSeries a = subcurve(P, *ge.v[ge.at(kp, l)], Param::vertex(n));
            // the entry value lies inside the band by construction; clamping
            // strips interpolation round-off so the sweep sees the exact level
            a.values.front() =
                std::clamp(a.values.front(), Q.value(jl) - delta, Q.value(jl) + delta);
            return free_space_decide(a, subcurve(Q, Param::vertex(jl), Param::vertex(m)), delta);
        };
        auto try_w = [&](int l) {
            if (!ge.w[ge.at(kp, l)]) return false;
            TimeSeries b = subcurve(Q, *ge.w[ge.at(kp, l)], Param::vertex(m));
            b.values.front() =
                std::clamp(b.values.front(), P.value(ip_last) - delta, P.value(ip_last) + delta);
            return free_space_decide(p_tail, b, delta);
        };
        bool v_ok = v_fin_p && try_v(kq);
        bool w_ok = !v_ok && w_fin_p && try_w(kq);
        bool glue_final = v_ok || w_ok;
        accepted = glue_final;
        // The endgame, decided by a pair of sweeps per end region.  Every
        // matching crosses the line of P's signature vertex i_k exactly once
        // (its position along P never decreases) and stays right of that
        // line afterwards, so acceptance is equivalent to reaching the end
        // corner of the region [i_k, n] x [1, m] from a crossing of that
        // line.  Sweeping from the justified chain entries of row k is a
        // sound lower bound; sweeping from every in-band point of the line
        // is a sound upper bound, because a crossing must be in band.  When
        // the bounds agree the answer is exact; they can disagree only when
        // a matching loiters below the line through a band gap, which the
        // first-entry chain cannot see, and then the region grows by one
        // piece and the sweeps repeat.  Row 1's region is the whole space,
        // where the sweep from the start corner is the plain exact decision,
        // so the loop always terminates with an exact answer; in practice
        // the bounds agree at the last row and the sweeps touch only the
        // short end piece.
        if (!accepted) {
            for (int k = kp; k >= 1; --k) {
                if (k == 1) {
                    accepted = free_space_decide(P, Q, delta);
                    break;
                }
                int ik = sp.indices[size_t(k - 1)];
                std::vector<double> tail(P.values.begin() + (ik - 1), P.values.end());
                if (!region_reach(tail, Q.values, delta, {}, true)) break;
                std::vector<ReachSeed> sd;
                for (int l = 1; l <= kq; ++l) {
                    if (auto wp = ge.w[ge.at(k, l)]) sd.push_back({1.0, wp->to_double()});
                    if (auto vp = ge.v[ge.at(k, l)])
                        sd.push_back({vp->to_double() - double(ik - 1),
                                      double(sq.indices[size_t(l - 1)])});
                }
                if (!sd.empty() && region_reach(tail, Q.values, delta, sd, false)) {
                    accepted = true;
                    break;
                }
            }
        }
        if (log) {
            log->filled = true;
            log->v_fin = v_fin_p ? v_fin_p->to_double() : kInf;
            log->w_fin = w_fin_p ? w_fin_p->to_double() : kInf;
            log->v_side = v_ok;
            log->glue_final = glue_final;
        }
    }
    st.index_nodes += o.index.nodes_visited() + q.index.nodes_visited() - nodes0;
    return {accepted, false};
}

CoupledVisitingOrder extract_witness(const GridLog& g, const std::vector<int>& ip,
                                     const std::vector<int>& jq, double delta, int n, int m) {
    std::vector<WitnessPair> rev;
    rev.push_back({double(n), double(m)});
    // the walk's first pair is the final cell's own entry, which doubles as
    // the glue tuple: the tail match from it was decided directly
    int k = g.kp, l = g.kq;
    bool bottom = g.v_side;
    while (true) {
        double val = bottom ? g.v[g.at(k, l)] : g.w[g.at(k, l)];
        Origin og = bottom ? g.vo[g.at(k, l)] : g.wo[g.at(k, l)];
        if (bottom)
            rev.push_back({val, double(jq[size_t(l - 1)])});
        else
            rev.push_back({double(ip[size_t(k - 1)]), val});
        if (og != Origin::kFromBottom && og != Origin::kFromLeft) break;  // reached a seed
        if (bottom)
            --l;
        else
            --k;
        bottom = og == Origin::kFromBottom;
    }
    rev.push_back({1.0, 1.0});
    std::reverse(rev.begin(), rev.end());
    return CoupledVisitingOrder{delta, std::move(rev)};
}

}  // namespace

bool decide(const Oracle& o, const PreparedQuery& q, double delta, DecideStats* stats) {
    DecideStats local;
    InternalResult r = decide_impl(o, q, delta, local, nullptr, nullptr, nullptr);
    if (stats) *stats = local;
    return r.accepted;
}

bool decide(const Oracle& o, const TimeSeries& raw_q, double delta, DecideStats* stats) {
    PreparedQuery pq = prepare_query(raw_q);
    return decide(o, pq, delta, stats);
}

DecideResult decide_with_witness(const Oracle& o, const PreparedQuery& q, double delta) {
    DecideStats st;
    GridLog log;
    ExtendedSignature sp, sq;
    InternalResult r = decide_impl(o, q, delta, st, &log, &sp, &sq);
    DecideResult out;
    out.accepted = r.accepted;
    out.grid_path = !r.fallback;
    if (r.accepted && !r.fallback && log.filled && log.glue_final)
        out.witness =
            extract_witness(log, sp.indices, sq.indices, delta, o.series.size(), q.series.size());
    return out;
}

bool check_witness(const TimeSeries& p, const TimeSeries& q, const CoupledVisitingOrder& w) {
    constexpr double kSlack = 1e-9;
    double delta = w.delta;
    if (!(delta >= 0)) return false;
    const auto& ps = w.pairs;
    if (ps.size() < 2) return false;
    int n = p.size(), m = q.size();
    if (ps.front().p != 1.0 || ps.front().q != 1.0) return false;
    if (ps.back().p != double(n) || ps.back().q != double(m)) return false;
    for (size_t i = 0; i < ps.size(); ++i) {
        if (!(ps[i].p >= 1.0 && ps[i].p <= double(n))) return false;
        if (!(ps[i].q >= 1.0 && ps[i].q <= double(m))) return false;
        if (i > 0 && (ps[i].p < ps[i - 1].p || ps[i].q < ps[i - 1].q)) return false;
        if (std::abs(eval(p, ps[i].p) - eval(q, ps[i].q)) > delta + kSlack) return false;
    }

    // Signature vertices inside the first and last matched pieces need no
    // tuple of their own: those pieces are certified whole by the reference
    // checks below, so only vertices strictly between the second and
    // second-to-last pairs require a visit.
    double p_lo = ps[1].p, p_hi = ps[ps.size() - 2].p;
    double q_lo = ps[1].q, q_hi = ps[ps.size() - 2].q;
    auto covered = [&](const std::vector<int>& idx, bool on_p) {
        double lo = on_p ? p_lo : q_lo, hi = on_p ? p_hi : q_hi;
        for (int v : idx) {
            if (double(v) <= lo || double(v) >= hi) continue;
            bool found = false;
            for (const auto& pr : ps)
                if ((on_p ? pr.p : pr.q) == double(v)) {
                    found = true;
                    break;
                }
            if (!found) return false;
        }
        return true;
    };
    ExtendedSignature sp = extract_extended(build_hierarchy(canonicalize(p)), delta);
    ExtendedSignature sq = extract_extended(build_hierarchy(canonicalize(q)), delta);
    if (!covered(sp.indices, true)) return false;
    if (!covered(sq.indices, false)) return false;

    Param p2 = param_at(ps[1].p, n), q2 = param_at(ps[1].q, m);
    if (!free_space_decide(subcurve(p, Param{1, 0.0}, p2), subcurve(q, Param{1, 0.0}, q2),
                           delta + kSlack))
        return false;
    Param pz = param_at(ps[ps.size() - 2].p, n), qz = param_at(ps[ps.size() - 2].q, m);
    if (!free_space_decide(subcurve(p, pz, param_at(double(n), n)),
                           subcurve(q, qz, param_at(double(m), m)), delta + kSlack))
        return false;
    return true;
}

}  // namespace frechet1d
