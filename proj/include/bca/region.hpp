#pragma once

#include <functional>
#include <optional>

#include "bca/interval.hpp"

namespace bca {

/// Periodic tail: the set  U_{k>=0} (pattern + start + k*period).
/// pattern is an IntervalSet whose parts lie within [0, period].
/// Grid points start + k*period are never in the set (pattern is open).
struct Tail {
    Rat start;
    Rat period;
    IntervalSet pattern;

    friend bool operator==(const Tail& a, const Tail& b) {
        return a.start == b.start && a.period == b.period && a.pattern == b.pattern;
    }
};

/// A computable regular-open-able subset of R: finitely many open intervals
/// (the core, which may contain unbounded rays) plus optional eventually
/// periodic tails. The left tail is mirrored: it contributes
/// { x : -x in tail-set(left) } and covers a half line towards -infinity.
///
/// Values are kept in a canonical form that is intrinsic to the represented
/// set (minimal period, basepoint at the least excluded residue, least
/// matching threshold), so structural equality decides set equality.
class Region {
public:
    Region() = default;  // zero region

    static Region zero() { return Region(); }
    static Region unit() { return plain(IntervalSet::full()); }
    static Region plain(IntervalSet s);
    static Region interval(Rat lo, Rat hi) {
        return plain(IntervalSet(Interval(lo, hi)));
    }

    /// Canonicalizes an arbitrary core/tail description (union semantics;
    /// overlaps allowed). Throws std::invalid_argument on period <= 0 or a
    /// pattern part outside [0, period].
    static Region from_raw(IntervalSet core, std::optional<Tail> left,
                           std::optional<Tail> right);

    const IntervalSet& core() const { return core_; }
    const std::optional<Tail>& left_tail() const { return left_; }
    const std::optional<Tail>& right_tail() const { return right_; }

    bool is_zero() const { return core_.is_empty() && !left_ && !right_; }
    bool is_unit() const { return core_.is_full() && !left_ && !right_; }
    bool is_plain() const { return !left_ && !right_; }

    /// Set membership (the represented set is open).
    bool contains_point(const Rat& x) const;

    /// Exact trace of the represented set on a bounded window (lo, hi).
    IntervalSet trace(const Rat& lo, const Rat& hi) const;

    /// True components of the set intersecting (lo, hi), with their real
    /// (possibly infinite) endpoints, in increasing order.
    std::vector<Interval> components_in(const Rat& lo, const Rat& hi) const;

    /// All finite content lies within (-b, b) for the returned b, and each
    /// periodic side is in its periodic regime beyond it.
    Rat content_bound() const;

    friend bool operator==(const Region& a, const Region& b) {
        return a.core_ == b.core_ && a.left_ == b.left_ && a.right_ == b.right_;
    }
    friend bool operator!=(const Region& a, const Region& b) { return !(a == b); }

    /// Canonical rendering; re-parses to an equal value.
    std::string str() const;

    /// Reflection through 0.
    Region mirrored() const;

private:
    friend Region build_canonical(const std::function<IntervalSet(Rat, Rat)>&,
                                  Rat, Rat, Rat);
    IntervalSet core_;
    std::optional<Tail> left_;
    std::optional<Tail> right_;
};

/// Canonical constructor from a semantic window function. trace_fn(a,b) must
/// return the target set's exact trace on (a,b); the set must be periodic
/// with the given periods beyond |x| > bound (period 1 for sides that are
/// eventually empty or eventually a full ray).
Region build_canonical(const std::function<IntervalSet(Rat, Rat)>& trace_fn,
                       Rat bound, Rat left_period, Rat right_period);

// Regular-open algebra on regions.
Region meet(const Region& a, const Region& b);
Region join(const Region& a, const Region& b);        // Int Cl (a u b)
Region complement(const Region& a);                   // Int (R \ a)
Region region_union(const Region& a, const Region& b);  // plain set union

// Topological predicates, decided exactly.
bool leq(const Region& a, const Region& b);       // subset
bool overlap(const Region& a, const Region& b);   // meet nonzero
bool contact(const Region& a, const Region& b);   // closures intersect
bool well_inside(const Region& a, const Region& b);  // Cl a inside b

/// DV6 witness: requires a nonzero and a << b; returns w with a << w << b.
/// Each closure component of a is stretched on each side by half the gap to
/// the enclosing boundary of b, capped at 1 (a fixed stretch of 1 serves
/// unbounded gaps). Throws std::invalid_argument when the precondition
/// fails, naming the touching boundary.
Region interpolate(const Region& a, const Region& b);

/// DV7 witness: nonzero w << a for nonzero a. Middle third of the first
/// bounded component (core first, then right-tail, then left-tail pattern),
/// or a unit interval placed just inside an unbounded component.
Region shrink(const Region& a);

}  // namespace bca
