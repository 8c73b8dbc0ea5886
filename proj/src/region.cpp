#include "bca/region.hpp"

#include <algorithm>
#include <cassert>

namespace bca {

namespace {

Rat side_period(const std::optional<Tail>& t) {
    return t ? t->period : Rat(1);
}

// Trace of U_{k>=0}(pattern + start + k*period) on the finite window (lo, hi).
IntervalSet tail_trace(const Tail& t, const Rat& lo, const Rat& hi) {
    if (!(lo < hi) || hi <= t.start) return IntervalSet::empty();
    std::int64_t k_lo = 0;
    if (lo > t.start)
        k_lo = std::max<std::int64_t>(0, rat_floor((lo - t.start) / t.period) - 1);
    std::int64_t k_hi = rat_ceil((hi - t.start) / t.period) + 1;
    std::vector<Interval> parts;
    for (std::int64_t k = k_lo; k <= k_hi; ++k) {
        Rat base = t.start + t.period * Rat(k);
        for (const Interval& iv : t.pattern.parts()) {
            Rat l = rat_max(base + iv.lo, lo);
            Rat h = rat_min(base + iv.hi, hi);
            if (l < h) parts.emplace_back(l, h);
        }
    }
    return IntervalSet::from_parts(std::move(parts));
}

bool tail_contains(const Tail& t, const Rat& x) {
    if (!(x > t.start)) return false;
    std::int64_t k = rat_floor((x - t.start) / t.period);
    Rat rem = x - t.start - t.period * Rat(k);
    return t.pattern.contains_point(rem);
}

}  // namespace

Region Region::plain(IntervalSet s) {
    Region r;
    r.core_ = std::move(s);
    return r;
}

bool Region::contains_point(const Rat& x) const {
    if (core_.contains_point(x)) return true;
    if (right_ && tail_contains(*right_, x)) return true;
    if (left_ && tail_contains(*left_, -x)) return true;
    return false;
}

IntervalSet Region::trace(const Rat& lo, const Rat& hi) const {
    IntervalSet out = set_clip(core_, lo, hi);
    if (right_) out = set_union(out, tail_trace(*right_, lo, hi));
    if (left_) out = set_union(out, set_mirror(tail_trace(*left_, -hi, -lo)));
    return out;
}

std::vector<Interval> Region::components_in(const Rat& lo, const Rat& hi) const {
    std::vector<Interval> out;
    auto want = [&](const Interval& iv) {
        return rat_max(iv.lo, lo) < rat_min(iv.hi, hi);
    };
    for (const Interval& iv : core_.parts())
        if (want(iv)) out.push_back(iv);
    if (right_) {
        const Tail& t = *right_;
        if (hi > t.start) {
            std::int64_t k_lo = 0;
            if (lo > t.start)
                k_lo = std::max<std::int64_t>(0, rat_floor((lo - t.start) / t.period) - 1);
            std::int64_t k_hi = rat_ceil((rat_max(hi, t.start + Rat(1)) - t.start) / t.period) + 1;
            for (std::int64_t k = k_lo; k <= k_hi; ++k) {
                Rat base = t.start + t.period * Rat(k);
                for (const Interval& iv : t.pattern.parts()) {
                    Interval part(base + iv.lo, base + iv.hi);
                    if (want(part)) out.push_back(part);
                }
            }
        }
    }
    if (left_) {
        const Tail& t = *left_;
        if (-lo > t.start) {
            std::int64_t k_lo = 0;
            if (-hi > t.start)
                k_lo = std::max<std::int64_t>(0, rat_floor((-hi - t.start) / t.period) - 1);
            std::int64_t k_hi = rat_ceil((rat_max(-lo, t.start + Rat(1)) - t.start) / t.period) + 1;
            for (std::int64_t k = k_lo; k <= k_hi; ++k) {
                Rat base = t.start + t.period * Rat(k);
                for (const Interval& iv : t.pattern.parts()) {
                    Interval part(-(base + iv.hi), -(base + iv.lo));
                    if (want(part)) out.push_back(part);
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Interval& a, const Interval& b) {
        return a.lo < b.lo;
    });
    return out;
}

Rat Region::content_bound() const {
    Rat b(2);
    for (const Interval& iv : core_.parts()) {
        if (iv.lo.is_finite()) b = rat_max(b, rat_abs(iv.lo));
        if (iv.hi.is_finite()) b = rat_max(b, rat_abs(iv.hi));
    }
    if (right_) b = rat_max(b, rat_abs(right_->start) + right_->period);
    if (left_) b = rat_max(b, rat_abs(left_->start) + left_->period);
    return b + Rat(1);
}

std::string Region::str() const {
    if (is_zero()) return "empty";
    std::string out;
    auto emit = [&](const std::string& piece) {
        if (!out.empty()) out += "|";
        out += piece;
    };
    if (left_)
        emit("ltail(" + left_->period.str() + "," + left_->start.str() + "," +
             left_->pattern.str() + ")");
    for (const Interval& iv : core_.parts())
        emit("(" + iv.lo.str() + "," + iv.hi.str() + ")");
    if (right_)
        emit("tail(" + right_->period.str() + "," + right_->start.str() + "," +
             right_->pattern.str() + ")");
    return out;
}

Region Region::mirrored() const {
    Region r;
    r.core_ = set_mirror(core_);
    r.left_ = right_;
    r.right_ = left_;
    return r;
}

// ---------------------------------------------------------------------------
// Canonical construction
// ---------------------------------------------------------------------------

namespace {

using TraceFn = std::function<IntervalSet(Rat, Rat)>;

bool member(const TraceFn& tr, const Rat& x) {
    return tr(x - Rat(1), x + Rat(1)).contains_point(x);
}

struct SideAnalysis {
    enum Kind { Bounded, Ray, Periodic } kind = Bounded;
    Rat period;  // minimal, Periodic only
    Rat beta;    // least excluded residue in [0, period), Periodic only
};

// Eventual behaviour of the +inf side: the set is `period`-periodic beyond
// `bound`; classify and minimize the period.
SideAnalysis analyze_side(const TraceFn& tr, const Rat& bound, const Rat& period) {
    SideAnalysis out;
    Rat w0 = period * Rat(rat_ceil(bound / period) + 1);
    IntervalSet window = tr(w0, w0 + period);
    bool seam = member(tr, w0 + period);
    bool full = window == IntervalSet(Interval(w0, w0 + period));
    if (window.is_empty()) {
        out.kind = SideAnalysis::Bounded;
        return out;
    }
    if (full && seam) {
        out.kind = SideAnalysis::Ray;
        return out;
    }
    // minimal period: the period group is discrete, so any smaller period is
    // period/k; one shifted-window comparison certifies a candidate
    Rat p = period;
    int max_k = static_cast<int>(window.parts().size());
    for (int k = max_k; k >= 2; --k) {
        Rat cand = Rat(period.num, period.den * k);
        if (tr(w0 + cand, w0 + cand + period) == set_shift(window, cand)) {
            p = cand;
            break;
        }
    }
    out.kind = SideAnalysis::Periodic;
    out.period = p;
    IntervalSet wp = tr(w0, w0 + p);
    if (!member(tr, w0))
        out.beta = Rat(0);
    else
        out.beta = wp.parts().front().hi - w0;  // first gap after the seam
    return out;
}

// Least threshold t in beta + pZ with t not in the set and the set equal to
// its periodic continuation above t. Starts from the aligned point a0 and
// walks down; terminates because the set is not fully periodic.
Rat minimize_threshold(const TraceFn& tr, const Rat& p, const Rat& a0,
                       const IntervalSet& pattern) {
    Rat t = a0;
    int guard = 0;
    while (true) {
        if (++guard > 100000) throw std::logic_error("threshold search diverged");
        Rat t2 = t - p;
        if (member(tr, t2)) break;
        if (tr(t2, t) != set_shift(pattern, t2)) break;
        t = t2;
    }
    return t;
}

}  // namespace

Region build_canonical(const TraceFn& tr, Rat bound, Rat left_period,
                       Rat right_period) {
    TraceFn mtr = [&tr](Rat a, Rat b) { return set_mirror(tr(-b, -a)); };
    SideAnalysis right = analyze_side(tr, bound, right_period);
    SideAnalysis left = analyze_side(mtr, bound, left_period);

    Region out;
    Rat big = bound + left_period + right_period + Rat(4);

    if (right.kind == SideAnalysis::Periodic && left.kind == SideAnalysis::Periodic) {
        // fully periodic sets get the threshold convention T in [0, p)
        const Rat& p = right.period;
        Rat m = big + p;
        if (tr(-m, m) == set_shift(tr(-m - p, m - p), p)) {
            Rat t_r = right.beta;
            Rat t_l = left.beta;
            Rat a0 = t_r + p * Rat(rat_ceil((bound - t_r) / p) + 1);
            out.right_ = Tail{t_r, p, set_shift(tr(a0, a0 + p), -a0)};
            Rat b0 = t_l + p * Rat(rat_ceil((bound - t_l) / p) + 1);
            out.left_ = Tail{t_l, p, set_shift(mtr(b0, b0 + p), -b0)};
            out.core_ = tr(-t_l, t_r);
            return out;
        }
    }

    Rat right_edge = big;
    Rat left_edge = -big;
    if (right.kind == SideAnalysis::Periodic) {
        Rat a0 = right.beta +
                 right.period * Rat(rat_ceil((bound - right.beta) / right.period) + 1);
        IntervalSet pat = set_shift(tr(a0, a0 + right.period), -a0);
        Rat t = minimize_threshold(tr, right.period, a0, pat);
        out.right_ = Tail{t, right.period, pat};
        right_edge = t;
    }
    if (left.kind == SideAnalysis::Periodic) {
        Rat a0 = left.beta +
                 left.period * Rat(rat_ceil((bound - left.beta) / left.period) + 1);
        IntervalSet pat = set_shift(mtr(a0, a0 + left.period), -a0);
        Rat t = minimize_threshold(mtr, left.period, a0, pat);
        out.left_ = Tail{t, left.period, pat};
        left_edge = -t;
    }
    // the two periodic zones may not interleave; push the right threshold up
    while (out.right_ && out.left_ && right_edge < left_edge) {
        out.right_->start = out.right_->start + out.right_->period;
        right_edge = out.right_->start;
    }

    IntervalSet core = tr(left_edge, right_edge);
    if (right.kind == SideAnalysis::Ray || left.kind == SideAnalysis::Ray) {
        std::vector<Interval> parts = core.parts();
        if (right.kind == SideAnalysis::Ray) {
            assert(!parts.empty() && parts.back().hi == right_edge);
            parts.back().hi = Rat::pos_inf();
        }
        if (left.kind == SideAnalysis::Ray) {
            assert(!parts.empty() && parts.front().lo == left_edge);
            parts.front().lo = Rat::neg_inf();
        }
        core = IntervalSet::from_parts(std::move(parts));
    }
    out.core_ = core;
    return out;
}

Region Region::from_raw(IntervalSet core, std::optional<Tail> left,
                        std::optional<Tail> right) {
    for (const std::optional<Tail>* t : {&left, &right}) {
        if (!*t) continue;
        const Tail& tail = **t;
        if (!tail.period.is_finite() || !(tail.period > Rat(0)))
            throw std::invalid_argument("tail period must be positive");
        if (!tail.start.is_finite())
            throw std::invalid_argument("tail threshold must be finite");
        for (const Interval& iv : tail.pattern.parts())
            if (iv.lo < Rat(0) || iv.hi > tail.period)
                throw std::invalid_argument("tail pattern must lie within [0, period]");
    }
    Region raw;
    raw.core_ = std::move(core);
    raw.left_ = std::move(left);
    raw.right_ = std::move(right);
    if (raw.is_plain()) return raw;  // core is already canonical
    TraceFn tr = [&raw](Rat a, Rat b) { return raw.trace(a, b); };
    return build_canonical(tr, raw.content_bound(), side_period(raw.left_),
                           side_period(raw.right_));
}

// ---------------------------------------------------------------------------
// Algebra operations
// ---------------------------------------------------------------------------

namespace {

Rat op_bound(const Region& a, const Region& b) {
    return rat_max(a.content_bound(), b.content_bound()) + Rat(1);
}

Rat lcm_side(const std::optional<Tail>& x, const std::optional<Tail>& y) {
    return rat_lcm(side_period(x), side_period(y));
}

}  // namespace

Region meet(const Region& a, const Region& b) {
    if (a.is_plain() && b.is_plain())
        return Region::plain(set_meet(a.core(), b.core()));
    TraceFn tr = [&](Rat lo, Rat hi) { return set_meet(a.trace(lo, hi), b.trace(lo, hi)); };
    return build_canonical(tr, op_bound(a, b), lcm_side(a.left_tail(), b.left_tail()),
                           lcm_side(a.right_tail(), b.right_tail()));
}

Region region_union(const Region& a, const Region& b) {
    if (a.is_plain() && b.is_plain())
        return Region::plain(set_union(a.core(), b.core()));
    TraceFn tr = [&](Rat lo, Rat hi) { return set_union(a.trace(lo, hi), b.trace(lo, hi)); };
    return build_canonical(tr, op_bound(a, b), lcm_side(a.left_tail(), b.left_tail()),
                           lcm_side(a.right_tail(), b.right_tail()));
}

Region join(const Region& a, const Region& b) {
    if (a.is_plain() && b.is_plain())
        return Region::plain(ro_join(a.core(), b.core()));
    TraceFn tr = [&](Rat lo, Rat hi) {
        // Int Cl is local: a padded window decides the result exactly
        return set_clip(ro_join(a.trace(lo - Rat(1), hi + Rat(1)),
                                b.trace(lo - Rat(1), hi + Rat(1))),
                        lo, hi);
    };
    return build_canonical(tr, op_bound(a, b), lcm_side(a.left_tail(), b.left_tail()),
                           lcm_side(a.right_tail(), b.right_tail()));
}

Region complement(const Region& a) {
    if (a.is_plain()) return Region::plain(ro_complement(a.core()));
    TraceFn tr = [&](Rat lo, Rat hi) {
        return set_clip(ro_complement(a.trace(lo - Rat(1), hi + Rat(1))), lo, hi);
    };
    return build_canonical(tr, a.content_bound() + Rat(1), side_period(a.left_tail()),
                           side_period(a.right_tail()));
}

// ---------------------------------------------------------------------------
// Predicates
// ---------------------------------------------------------------------------

namespace {

// Window half-width such that any violation/witness beyond it folds back
// into the window by periodicity.
Rat decision_width(const Region& a, const Region& b) {
    return op_bound(a, b) + lcm_side(a.left_tail(), b.left_tail()) +
           lcm_side(a.right_tail(), b.right_tail()) + Rat(2);
}

}  // namespace

namespace {

// allocation-free paths for the single-interval regions that dominate
// catalog scans
const Interval* single_part(const Region& r) {
    return r.is_plain() && r.core().parts().size() == 1 ? &r.core().parts()[0]
                                                        : nullptr;
}

}  // namespace

bool leq(const Region& a, const Region& b) {
    if (const Interval* x = single_part(a))
        if (const Interval* y = single_part(b))
            return y->lo <= x->lo && x->hi <= y->hi;
    if (a.is_plain() && b.is_plain()) return subset_of(a.core(), b.core());
    Rat w = decision_width(a, b);
    return subset_of(a.trace(-w, w), b.trace(-w - Rat(1), w + Rat(1)));
}

bool overlap(const Region& a, const Region& b) {
    if (const Interval* x = single_part(a))
        if (const Interval* y = single_part(b))
            return rat_max(x->lo, y->lo) < rat_min(x->hi, y->hi);
    if (a.is_plain() && b.is_plain()) return overlaps(a.core(), b.core());
    Rat w = decision_width(a, b);
    return overlaps(a.trace(-w, w), b.trace(-w, w));
}

bool contact(const Region& a, const Region& b) {
    if (a.is_zero() || b.is_zero()) return false;
    if (const Interval* x = single_part(a))
        if (const Interval* y = single_part(b))
            return rat_max(x->lo, y->lo) <= rat_min(x->hi, y->hi);
    if (a.is_plain() && b.is_plain()) return closures_meet(a.core(), b.core());
    Rat w = decision_width(a, b) + Rat(1);
    return closures_meet(a.trace(-w, w), b.trace(-w, w));
}

bool well_inside(const Region& a, const Region& b) {
    if (const Interval* x = single_part(a)) {
        if (const Interval* y = single_part(b)) {
            bool lo_ok = x->lo.is_neg_inf() ? y->lo.is_neg_inf() : y->lo < x->lo;
            bool hi_ok = x->hi.is_pos_inf() ? y->hi.is_pos_inf() : x->hi < y->hi;
            return lo_ok && hi_ok;
        }
    }
    if (a.is_plain() && b.is_plain()) return closure_inside(a.core(), b.core());
    Rat w = decision_width(a, b);
    return closure_inside(a.trace(-w, w), b.trace(-w - Rat(1), w + Rat(1)));
}

// ---------------------------------------------------------------------------
// DV6 / DV7 witnesses
// ---------------------------------------------------------------------------

namespace {

// Closure components of r intersecting (lo, hi): open components merged when
// they share an endpoint; true endpoints.
std::vector<Interval> closure_components_in(const Region& r, const Rat& lo,
                                            const Rat& hi) {
    std::vector<Interval> open = r.components_in(lo, hi);
    std::vector<Interval> out;
    for (const Interval& iv : open) {
        if (!out.empty() && iv.lo <= out.back().hi)
            out.back().hi = rat_max(out.back().hi, iv.hi);
        else
            out.push_back(iv);
    }
    return out;
}

Rat stretch_amount(const Rat& gap) {
    if (!gap.is_finite()) return Rat(1);
    Rat half = gap / Rat(2);
    return rat_min(half, Rat(1));
}

}  // namespace

Region interpolate(const Region& a, const Region& b) {
    if (a.is_zero()) throw std::invalid_argument("interpolate: first region is zero");
    if (!well_inside(a, b)) {
        Rat w = decision_width(a, b);
        std::string touch;
        for (const Interval& x : closure_components_in(a, -w, w)) {
            bool ok = false;
            for (const Interval& y : b.components_in(-w - Rat(1), w + Rat(1))) {
                bool lo_ok = x.lo.is_neg_inf() ? y.lo.is_neg_inf() : y.lo < x.lo;
                bool hi_ok = x.hi.is_pos_inf() ? y.hi.is_pos_inf() : x.hi < y.hi;
                if (lo_ok && hi_ok) { ok = true; break; }
            }
            if (!ok) { touch = "[" + x.lo.str() + "," + x.hi.str() + "]"; break; }
        }
        throw std::invalid_argument(
            "interpolate: first region is not well inside the second (closure part " +
            touch + " touches the boundary)");
    }
    // Every stretch is capped at 1, so the construction is local.
    TraceFn tr = [&](Rat lo, Rat hi) {
        std::vector<Interval> parts;
        for (const Interval& comp : closure_components_in(a, lo - Rat(2), hi + Rat(2))) {
            // enclosing component of b
            Rat qlo = comp.lo.is_finite() ? comp.lo : lo - Rat(3);
            Rat qhi = comp.hi.is_finite() ? comp.hi : hi + Rat(3);
            Interval host(Rat::neg_inf(), Rat::pos_inf());
            bool found = false;
            for (const Interval& y : b.components_in(qlo, qhi)) {
                bool lo_ok = comp.lo.is_neg_inf() ? y.lo.is_neg_inf() : y.lo < comp.lo;
                bool hi_ok = comp.hi.is_pos_inf() ? y.hi.is_pos_inf() : comp.hi < y.hi;
                if (lo_ok && hi_ok) { host = y; found = true; break; }
            }
            if (!found) continue;  // component far outside the window
            Rat nlo = comp.lo.is_finite()
                          ? comp.lo - stretch_amount(host.lo.is_finite() ? comp.lo - host.lo
                                                                         : Rat::pos_inf())
                          : Rat::neg_inf();
            Rat nhi = comp.hi.is_finite()
                          ? comp.hi + stretch_amount(host.hi.is_finite() ? host.hi - comp.hi
                                                                         : Rat::pos_inf())
                          : Rat::pos_inf();
            Rat l = rat_max(nlo, lo), h = rat_min(nhi, hi);
            if (l < h) parts.emplace_back(l, h);
        }
        return IntervalSet::from_parts(std::move(parts));
    };
    return build_canonical(tr, op_bound(a, b) + Rat(2),
                           lcm_side(a.left_tail(), b.left_tail()),
                           lcm_side(a.right_tail(), b.right_tail()));
}

Region shrink(const Region& a) {
    if (a.is_zero()) throw std::invalid_argument("shrink: zero region");
    auto third = [](const Interval& iv) {
        Rat len = iv.hi - iv.lo;
        return Region::interval(iv.lo + len / Rat(3), iv.hi - len / Rat(3));
    };
    for (const Interval& iv : a.core().parts())
        if (iv.lo.is_finite() && iv.hi.is_finite()) return third(iv);
    if (a.right_tail()) {
        const Tail& t = *a.right_tail();
        const Interval& p = t.pattern.parts().front();
        return third(Interval(t.start + p.lo, t.start + p.hi));
    }
    if (a.left_tail()) {
        const Tail& t = *a.left_tail();
        const Interval& p = t.pattern.parts().front();
        return third(Interval(-(t.start + p.hi), -(t.start + p.lo)));
    }
    const Interval& iv = a.core().parts().front();
    if (iv.lo.is_neg_inf() && iv.hi.is_pos_inf()) return Region::interval(Rat(0), Rat(1));
    if (iv.lo.is_neg_inf()) return Region::interval(iv.hi - Rat(2), iv.hi - Rat(1));
    return Region::interval(iv.lo + Rat(1), iv.lo + Rat(2));
}

}  // namespace bca
