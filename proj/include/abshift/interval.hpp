#pragma once

#include "abshift/rational.hpp"

#include <span>
#include <vector>

namespace abshift {

/// Closed interval [lo, hi]; lo == hi is a point.
struct Interval {
    Rational lo;
    Rational hi;

    Interval() = default;
    Interval(Rational lo_, Rational hi_);

    Rational length() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool overlaps(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }

    friend bool operator==(const Interval&, const Interval&) = default;
};

/*
 * A finite union of closed intervals kept in canonical form: parts sorted by
 * lo, pairwise separated by a strictly positive gap. Overlapping or touching
 * inputs are merged on construction.
 */
class IntervalUnion {
public:
    IntervalUnion() = default;
    explicit IntervalUnion(std::vector<Interval> parts);

    /// Trusts that `parts` is already sorted with positive separations; verified in O(n).
    static IntervalUnion from_sorted(std::vector<Interval> parts);

    std::span<const Interval> parts() const { return parts_; }
    std::size_t size() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    const Interval& operator[](std::size_t i) const { return parts_[i]; }

    /// Smallest closed interval containing the union. Requires !empty().
    Interval hull() const;
    bool contains(const Rational& x) const;
    /// True iff every part of `other` lies inside some part of *this.
    bool contains(const IntervalUnion& other) const;

    friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;

private:
    std::vector<Interval> parts_;
};

IntervalUnion union_intersect(const IntervalUnion& a, const IntervalUnion& b);

}  // namespace abshift
