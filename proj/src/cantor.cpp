#include "abshift/cantor.hpp"

#include "abshift/error.hpp"
#include "abshift/series.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace abshift {

IfsSpec::IfsSpec(Rational beta, Digit digit_lo, Digit digit_hi, Affine affine)
    : beta_(std::move(beta)), lo_(digit_lo), hi_(digit_hi), affine_(std::move(affine)) {
    if (lo_ < 0 || hi_ < lo_) throw InvalidInput("IFS digit range must satisfy 0 <= lo <= hi");
    if (branches() < 2) throw InvalidInput("IFS needs at least two branches");
    if (beta_ <= Rational(branches()))
        throw InvalidInput("IFS children overlap: beta " + beta_.str() + " <= branch count " +
                           std::to_string(branches()));
    if (affine_.scale.sign() <= 0) throw InvalidInput("affine scale must be positive");
}

IfsSpec IfsSpec::laboratory(const Rational& beta, int ell, Affine affine) {
    if (ell < 3) throw InvalidInput("laboratory set needs ell >= 3");
    return IfsSpec(beta, 1, ell - 1, std::move(affine));
}

Interval IfsSpec::raw_hull() const {
    const Rational d = beta_ - Rational(1);
    return Interval(Rational(lo_) / d, Rational(hi_) / d);
}

Interval IfsSpec::hull() const { return affine_.apply(raw_hull()); }

Interval IfsSpec::cylinder(const Word& w) const {
    for (Digit d : w)
        if (d < lo_ || d > hi_) throw InvalidInput("digit outside the IFS range in " + word_str(w));
    const Rational left = word_value(w, beta_);
    const Rational shrink = pow(beta_, -static_cast<long>(w.size()));
    const Interval h = raw_hull();
    return affine_.apply(Interval(left + shrink * h.lo, left + shrink * h.hi));
}

Rational IfsSpec::point(const SymbolSeq& omega) const {
    if (omega.min_digit() < lo_ || omega.max_digit() > hi_)
        throw InvalidInput("digit outside the IFS range in " + omega.str());
    return affine_.apply(eventually_periodic_value(omega, beta_));
}

std::size_t max_intervals() {
    if (const char* env = std::getenv("ABSHIFT_MAX_INTERVALS")) {
        try {
            long long v = std::stoll(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
        throw InvalidInput(std::string("ABSHIFT_MAX_INTERVALS must be a positive integer, got '") + env + "'");
    }
    return 1'000'000;
}

IntervalUnion lambda_approx(const IfsSpec& spec, std::size_t level, std::size_t cap) {
    const auto m = static_cast<std::size_t>(spec.branches());
    std::size_t count = 1;
    for (std::size_t k = 0; k < level; ++k) {
        if (count > cap / m) throw CapExceeded("level " + std::to_string(level) + " exceeds the interval cap");
        count *= m;
    }
    if (count > cap) throw CapExceeded("level " + std::to_string(level) + " exceeds the interval cap");

    // Left sums sum_k w_k beta^{-k}, in lexicographic word order (= ascending, children are disjoint).
    std::vector<Rational> lefts{Rational(0)};
    Rational scale(1);
    for (std::size_t k = 1; k <= level; ++k) {
        scale /= spec.beta();
        std::vector<Rational> next;
        next.reserve(lefts.size() * m);
        for (const auto& s : lefts)
            for (Digit d = spec.digit_lo(); d <= spec.digit_hi(); ++d) next.push_back(s + Rational(d) * scale);
        lefts = std::move(next);
    }
    const Interval h = spec.raw_hull();
    const Rational lo_off = scale * h.lo, hi_off = scale * h.hi;
    std::vector<Interval> parts;
    parts.reserve(lefts.size());
    for (const auto& s : lefts) parts.push_back(spec.affine().apply(Interval(s + lo_off, s + hi_off)));
    return IntervalUnion::from_sorted(std::move(parts));
}

std::vector<Interval> gaps(const IntervalUnion& u, const Interval& hull) {
    if (!u.empty() && !hull.contains(u.hull())) throw InvalidInput("union is not contained in the hull");
    std::vector<Interval> out;
    for (std::size_t i = 0; i + 1 < u.size(); ++i) out.emplace_back(u[i].hi, u[i + 1].lo);
    return out;
}

ThicknessReport thickness(const IntervalUnion& u, std::size_t level) {
    const std::size_t k = u.size();
    if (k < 2) throw InvalidInput("thickness needs at least two parts");
    const std::size_t ng = k - 1;
    std::vector<Rational> len(ng);
    for (std::size_t i = 0; i < ng; ++i) len[i] = u[i + 1].lo - u[i].hi;

    // Nearest gap with length >= len[i] on each side (monotonic stacks).
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> left_block(ng, none), right_block(ng, none);
    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < ng; ++i) {
        while (!stack.empty() && len[stack.back()] < len[i]) stack.pop_back();
        if (!stack.empty()) left_block[i] = stack.back();
        stack.push_back(i);
    }
    stack.clear();
    for (std::size_t i = ng; i-- > 0;) {
        while (!stack.empty() && len[stack.back()] < len[i]) stack.pop_back();
        if (!stack.empty()) right_block[i] = stack.back();
        stack.push_back(i);
    }

    ThicknessReport best;
    bool have = false;
    auto consider = [&](const Interval& bridge, std::size_t i) {
        Rational ratio = bridge.length() / len[i];
        if (!have || ratio < best.tau) {
            best.tau = std::move(ratio);
            best.minimizing_gap = Interval(u[i].hi, u[i + 1].lo);
            best.minimizing_bridge = bridge;
            have = true;
        }
    };
    for (std::size_t i = 0; i < ng; ++i) {
        const Rational& left_end = left_block[i] == none ? u[0].lo : u[left_block[i] + 1].lo;
        consider(Interval(left_end, u[i].hi), i);
        const Rational& right_end = right_block[i] == none ? u[k - 1].hi : u[right_block[i]].hi;
        consider(Interval(u[i + 1].lo, right_end), i);
    }
    best.level = level;
    return best;
}

Rational partition_thickness_formula(const Rational& beta) {
    const Rational fl(rat_floor(beta));
    return (fl - Rational(1)) / (Rational(1) - fl + beta);
}

Rational laboratory_thickness(const Rational& beta, int ell) {
    if (ell < 3) throw InvalidInput("laboratory thickness needs ell >= 3");
    return Rational(ell - 2) / (beta + Rational(1) - Rational(ell));
}

Real newhouse_bound(const Rational& tau) {
    if (tau.sign() <= 0) throw InvalidInput("Newhouse bound needs tau > 0");
    const Real denom = Real::log(Real(Rational(2) + Rational(1) / tau, Round::Up), Round::Up);
    return Real::div(Real::log2_const(Round::Down), denom, Round::Down);
}

namespace {

// h lies in the closure of a complementary component (bounded or not) of s.
bool inside_gap_closure(const Interval& h, const IntervalUnion& s) {
    if (h.hi <= s[0].lo || h.lo >= s[s.size() - 1].hi) return true;
    auto parts = s.parts();
    auto it = std::upper_bound(parts.begin(), parts.end(), h.lo,
                               [](const Rational& v, const Interval& p) { return v < p.lo; });
    if (it == parts.begin() || it == parts.end()) return false;
    const Interval& before = *std::prev(it);
    return before.hi <= h.lo && h.hi <= it->lo;
}

}  // namespace

bool interleaved(const IntervalUnion& a, const IntervalUnion& b) {
    if (a.size() < 2 || b.size() < 2) throw InvalidInput("interleaving needs unions with at least two parts");
    return !inside_gap_closure(a.hull(), b) && !inside_gap_closure(b.hull(), a);
}

bool gap_lemma_test(const Rational& tau_a, const Rational& tau_b) {
    if (tau_a.sign() <= 0 || tau_b.sign() <= 0) throw InvalidInput("thicknesses must be positive");
    return tau_a * tau_b > Rational(1);
}

Intersection intersect_refine(const IfsSpec& a, const IfsSpec& b, std::size_t depth, std::size_t cap) {
    if (depth == 0) throw InvalidInput("intersection depth must be at least 1");
    struct Node {
        Word wa, wb;
        Rational la, lb;  // raw left sums
    };
    const Interval ha = a.raw_hull(), hb = b.raw_hull();
    auto cyl = [](const IfsSpec& s, const Interval& h, const Rational& left, const Rational& shrink) {
        return s.affine().apply(Interval(left + shrink * h.lo, left + shrink * h.hi));
    };

    std::vector<Node> live;
    if (a.hull().overlaps(b.hull())) live.push_back({{}, {}, Rational(0), Rational(0)});
    Rational sa(1), sb(1);
    for (std::size_t level = 1; level <= depth && !live.empty(); ++level) {
        sa /= a.beta();
        sb /= b.beta();
        std::vector<Node> next;
        std::vector<Interval> ca, cb;
        std::vector<Rational> lefts_a, lefts_b;
        for (const auto& node : live) {
            ca.clear();
            cb.clear();
            lefts_a.clear();
            lefts_b.clear();
            for (Digit d = a.digit_lo(); d <= a.digit_hi(); ++d) {
                lefts_a.push_back(node.la + Rational(d) * sa);
                ca.push_back(cyl(a, ha, lefts_a.back(), sa));
            }
            for (Digit d = b.digit_lo(); d <= b.digit_hi(); ++d) {
                lefts_b.push_back(node.lb + Rational(d) * sb);
                cb.push_back(cyl(b, hb, lefts_b.back(), sb));
            }
            for (std::size_t i = 0; i < ca.size(); ++i) {
                for (std::size_t j = 0; j < cb.size(); ++j) {
                    if (!ca[i].overlaps(cb[j])) continue;
                    Node child{node.wa, node.wb, lefts_a[i], lefts_b[j]};
                    child.wa.push_back(a.digit_lo() + static_cast<Digit>(i));
                    child.wb.push_back(b.digit_lo() + static_cast<Digit>(j));
                    next.push_back(std::move(child));
                    if (next.size() > cap)
                        throw CapExceeded("intersection refinement exceeds " + std::to_string(cap) +
                                          " live pairs at level " + std::to_string(level));
                }
            }
        }
        live = std::move(next);
    }

    Intersection out;
    std::vector<Interval> pieces;
    for (auto& node : live) {
        Interval ia = cyl(a, ha, node.la, sa), ib = cyl(b, hb, node.lb, sb);
        Interval overlap(max(ia.lo, ib.lo), min(ia.hi, ib.hi));
        pieces.push_back(overlap);
        out.pairs.push_back({std::move(node.wa), std::move(node.wb), std::move(overlap)});
    }
    std::stable_sort(out.pairs.begin(), out.pairs.end(),
                     [](const CylinderPair& x, const CylinderPair& y) { return x.overlap.lo < y.overlap.lo; });
    out.set = IntervalUnion(std::move(pieces));
    return out;
}

}  // namespace abshift
