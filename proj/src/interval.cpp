#include "abshift/interval.hpp"

#include "abshift/error.hpp"

#include <algorithm>

namespace abshift {

Interval::Interval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (hi < lo) throw InvalidInput("interval with hi < lo: [" + lo.str() + ", " + hi.str() + "]");
}

IntervalUnion::IntervalUnion(std::vector<Interval> parts) {
    std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) {
        return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
    });
    for (auto& p : parts) {
        // zero-length separation merges too
        if (!parts_.empty() && p.lo <= parts_.back().hi) {
            if (parts_.back().hi < p.hi) parts_.back().hi = std::move(p.hi);
        } else {
            parts_.push_back(std::move(p));
        }
    }
}

IntervalUnion IntervalUnion::from_sorted(std::vector<Interval> parts) {
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (!(parts[i - 1].hi < parts[i].lo)) return IntervalUnion(std::move(parts));
    }
    IntervalUnion u;
    u.parts_ = std::move(parts);
    return u;
}

Interval IntervalUnion::hull() const {
    if (parts_.empty()) throw InvalidInput("hull of an empty interval union");
    return Interval(parts_.front().lo, parts_.back().hi);
}

bool IntervalUnion::contains(const Rational& x) const {
    auto it = std::upper_bound(parts_.begin(), parts_.end(), x,
                               [](const Rational& v, const Interval& p) { return v < p.lo; });
    if (it == parts_.begin()) return false;
    return x <= std::prev(it)->hi;
}

bool IntervalUnion::contains(const IntervalUnion& other) const {
    for (const auto& p : other.parts_) {
        auto it = std::upper_bound(parts_.begin(), parts_.end(), p.lo,
                                   [](const Rational& v, const Interval& q) { return v < q.lo; });
        if (it == parts_.begin() || !std::prev(it)->contains(p)) return false;
    }
    return true;
}

IntervalUnion union_intersect(const IntervalUnion& a, const IntervalUnion& b) {
    std::vector<Interval> out;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const Interval& x = a[i];
        const Interval& y = b[j];
        Rational lo = max(x.lo, y.lo);
        Rational hi = min(x.hi, y.hi);
        if (lo <= hi) out.emplace_back(lo, hi);
        if (x.hi < y.hi) ++i; else ++j;
    }
    return IntervalUnion::from_sorted(std::move(out));
}

}  // namespace abshift
