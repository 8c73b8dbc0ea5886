#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bca/rational.hpp"

namespace bca {

/// Open interval (lo, hi) with lo < hi; endpoints rational or infinite.
struct Interval {
    Rat lo;
    Rat hi;

    Interval() = default;
    Interval(Rat l, Rat h);

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

/// Finite union of open intervals in canonical form: components sorted,
/// pairwise non-overlapping, overlapping inputs merged. Two components may
/// share an endpoint (the shared point is NOT in the set); such a value is
/// a legitimate open set but not a regular open one.
class IntervalSet {
public:
    IntervalSet() = default;
    explicit IntervalSet(Interval iv) : parts_{iv} {}

    /// Canonicalizes an arbitrary list: sorts and merges overlapping
    /// intervals, preserving the represented set exactly.
    static IntervalSet from_parts(std::vector<Interval> parts);

    static IntervalSet empty() { return IntervalSet(); }
    static IntervalSet full() {
        return IntervalSet(Interval(Rat::neg_inf(), Rat::pos_inf()));
    }

    const std::vector<Interval>& parts() const { return parts_; }
    bool is_empty() const { return parts_.empty(); }
    bool is_full() const {
        return parts_.size() == 1 && parts_[0].lo.is_neg_inf() &&
               parts_[0].hi.is_pos_inf();
    }

    /// True when no two components share an endpoint, i.e. the set equals
    /// the interior of its closure.
    bool is_regular_open() const;

    bool contains_point(const Rat& x) const;

    friend bool operator==(const IntervalSet& a, const IntervalSet& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator!=(const IntervalSet& a, const IntervalSet& b) {
        return !(a == b);
    }

    std::string str() const;

private:
    std::vector<Interval> parts_;
};

// Set-theoretic operations (results canonical, sets exact).
IntervalSet set_union(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_meet(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_clip(const IntervalSet& a, const Rat& lo, const Rat& hi);
IntervalSet set_shift(const IntervalSet& a, const Rat& delta);
IntervalSet set_mirror(const IntervalSet& a);

// Regular-open algebra operations.
IntervalSet ro_join(const IntervalSet& a, const IntervalSet& b);  // Int Cl (a u b)
IntervalSet ro_complement(const IntervalSet& a);                  // Int (R \ a)
IntervalSet ro_regularize(const IntervalSet& a);                  // Int Cl a

/// Closure as a list of disjoint closed intervals [lo, hi]; components of
/// the open set whose closures touch are merged.
std::vector<Interval> closure_parts(const IntervalSet& a);

bool subset_of(const IntervalSet& a, const IntervalSet& b);
bool overlaps(const IntervalSet& a, const IntervalSet& b);
/// Closures intersect (both nonempty).
bool closures_meet(const IntervalSet& a, const IntervalSet& b);
/// Cl a is contained in b.
bool closure_inside(const IntervalSet& a, const IntervalSet& b);

}  // namespace bca
