#include "bca/interval.hpp"

#include <algorithm>

namespace bca {

Interval::Interval(Rat l, Rat h) : lo(l), hi(h) {
    if (!(lo < hi))
        throw std::invalid_argument("interval requires lower < upper, got (" +
                                    lo.str() + "," + hi.str() + ")");
}

IntervalSet IntervalSet::from_parts(std::vector<Interval> parts) {
    std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) {
        if (a.lo != b.lo) return a.lo < b.lo;
        return a.hi < b.hi;
    });
    IntervalSet out;
    for (const Interval& iv : parts) {
        if (!out.parts_.empty()) {
            Interval& last = out.parts_.back();
            if (iv.lo < last.hi) {  // strict overlap merges, shared endpoint stays
                last.hi = rat_max(last.hi, iv.hi);
                continue;
            }
        }
        out.parts_.push_back(iv);
    }
    return out;
}

bool IntervalSet::is_regular_open() const {
    for (std::size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i].lo == parts_[i - 1].hi) return false;
    return true;
}

bool IntervalSet::contains_point(const Rat& x) const {
    for (const Interval& iv : parts_)
        if (iv.lo < x && x < iv.hi) return true;
    return false;
}

std::string IntervalSet::str() const {
    if (parts_.empty()) return "empty";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += "|";
        out += "(" + parts_[i].lo.str() + "," + parts_[i].hi.str() + ")";
    }
    return out;
}

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b) {
    std::vector<Interval> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return IntervalSet::from_parts(std::move(parts));
}

IntervalSet set_meet(const IntervalSet& a, const IntervalSet& b) {
    std::vector<Interval> out;
    for (const Interval& x : a.parts())
        for (const Interval& y : b.parts()) {
            Rat lo = rat_max(x.lo, y.lo);
            Rat hi = rat_min(x.hi, y.hi);
            if (lo < hi) out.emplace_back(lo, hi);
        }
    return IntervalSet::from_parts(std::move(out));
}

IntervalSet set_clip(const IntervalSet& a, const Rat& lo, const Rat& hi) {
    if (!(lo < hi)) return IntervalSet::empty();
    return set_meet(a, IntervalSet(Interval(lo, hi)));
}

IntervalSet set_shift(const IntervalSet& a, const Rat& delta) {
    std::vector<Interval> out;
    for (const Interval& iv : a.parts())
        out.emplace_back(iv.lo.is_finite() ? iv.lo + delta : iv.lo,
                         iv.hi.is_finite() ? iv.hi + delta : iv.hi);
    return IntervalSet::from_parts(std::move(out));
}

IntervalSet set_mirror(const IntervalSet& a) {
    std::vector<Interval> out;
    for (const Interval& iv : a.parts()) out.emplace_back(-iv.hi, -iv.lo);
    return IntervalSet::from_parts(std::move(out));
}

std::vector<Interval> closure_parts(const IntervalSet& a) {
    std::vector<Interval> out;
    for (const Interval& iv : a.parts()) {
        if (!out.empty() && iv.lo <= out.back().hi)
            out.back().hi = rat_max(out.back().hi, iv.hi);
        else
            out.push_back(iv);
    }
    return out;  // read as closed intervals [lo, hi]
}

IntervalSet ro_regularize(const IntervalSet& a) {
    std::vector<Interval> cl = closure_parts(a);
    return IntervalSet::from_parts(std::move(cl));
}

IntervalSet ro_join(const IntervalSet& a, const IntervalSet& b) {
    return ro_regularize(set_union(a, b));
}

IntervalSet ro_complement(const IntervalSet& a) {
    // Interior of the set complement: open gaps between closure components.
    std::vector<Interval> cl = closure_parts(a);
    std::vector<Interval> out;
    Rat cursor = Rat::neg_inf();
    for (const Interval& iv : cl) {
        if (cursor < iv.lo) out.emplace_back(cursor, iv.lo);
        cursor = iv.hi;
    }
    if (cursor < Rat::pos_inf()) out.emplace_back(cursor, Rat::pos_inf());
    return IntervalSet::from_parts(std::move(out));
}

bool subset_of(const IntervalSet& a, const IntervalSet& b) {
    for (const Interval& x : a.parts()) {
        bool covered = false;
        for (const Interval& y : b.parts())
            if (y.lo <= x.lo && x.hi <= y.hi) { covered = true; break; }
        if (!covered) return false;
    }
    return true;
}

bool overlaps(const IntervalSet& a, const IntervalSet& b) {
    return !set_meet(a, b).is_empty();
}

bool closures_meet(const IntervalSet& a, const IntervalSet& b) {
    if (a.is_empty() || b.is_empty()) return false;
    for (const Interval& x : closure_parts(a))
        for (const Interval& y : closure_parts(b))
            if (rat_max(x.lo, y.lo) <= rat_min(x.hi, y.hi)) return true;
    return false;
}

bool closure_inside(const IntervalSet& a, const IntervalSet& b) {
    for (const Interval& x : closure_parts(a)) {
        bool covered = false;
        for (const Interval& y : b.parts()) {
            bool lo_ok = x.lo.is_neg_inf() ? y.lo.is_neg_inf() : y.lo < x.lo;
            bool hi_ok = x.hi.is_pos_inf() ? y.hi.is_pos_inf() : x.hi < y.hi;
            if (lo_ok && hi_ok) { covered = true; break; }
        }
        if (!covered) return false;
    }
    return true;
}

}  // namespace bca
