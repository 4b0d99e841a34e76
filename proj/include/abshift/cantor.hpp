#pragma once

/*
 * Finite-level approximations of self-similar Cantor sets
 *
 *   Lambda = { sum_n omega_n / beta^n : omega_n in {lo, ..., hi} },
 *
 * optionally post-composed with an affine map, together with the
 * Palis-Takens thickness, the Newhouse dimension bound and the
 * gap-lemma/interleaving predicates used to intersect two such sets.
 */

#include "abshift/interval.hpp"
#include "abshift/rational.hpp"
#include "abshift/real.hpp"
#include "abshift/symbol_seq.hpp"

#include <cstddef>
#include <vector>

namespace abshift {

/// x -> scale * x + offset, scale > 0.
struct Affine {
    Rational scale{1};
    Rational offset{0};

    Rational apply(const Rational& x) const { return scale * x + offset; }
    Interval apply(const Interval& i) const { return Interval(apply(i.lo), apply(i.hi)); }
};

/// IFS f_j(x) = (x + j)/beta, j in [digit_lo, digit_hi], followed by `affine`.
class IfsSpec {
public:
    /// Throws InvalidInput unless digit_lo <= digit_hi, at least two branches,
    /// beta > branch count (disjoint children) and affine.scale > 0.
    IfsSpec(Rational beta, Digit digit_lo, Digit digit_hi, Affine affine = {});

    /// Digits {1, ..., ell-1}: the set of points whose coding avoids 0 and ell.
    static IfsSpec laboratory(const Rational& beta, int ell, Affine affine = {});

    const Rational& beta() const { return beta_; }
    Digit digit_lo() const { return lo_; }
    Digit digit_hi() const { return hi_; }
    const Affine& affine() const { return affine_; }
    int branches() const { return hi_ - lo_ + 1; }

    /// Convex hull before the affine map: [lo/(beta-1), hi/(beta-1)].
    Interval raw_hull() const;
    /// Convex hull of the set (after the affine map).
    Interval hull() const;
    /// Cylinder of a digit word, after the affine map.
    Interval cylinder(const Word& w) const;
    /// Point coded by an eventually periodic digit sequence, after the affine map.
    Rational point(const SymbolSeq& omega) const;

private:
    Rational beta_;
    Digit lo_;
    Digit hi_;
    Affine affine_;
};

/// Interval cap from ABSHIFT_MAX_INTERVALS, default 10^6.
std::size_t max_intervals();

/// The m^n level-n cylinders as a canonical union. Throws CapExceeded past `cap`.
IntervalUnion lambda_approx(const IfsSpec& spec, std::size_t level, std::size_t cap = max_intervals());

/// Bounded complementary intervals of `u` inside `hull` (closed endpoints).
std::vector<Interval> gaps(const IntervalUnion& u, const Interval& hull);

struct ThicknessReport {
    Rational tau;
    Interval minimizing_gap;
    Interval minimizing_bridge;
    std::size_t level = 0;
};

/*
 * Palis-Takens thickness of a finite union: for every endpoint x of every
 * bounded gap G, the bridge at x extends away from G up to the nearest gap of
 * length >= |G| (or the end of the hull); tau = min |bridge| / |G|.
 * Requires at least two parts. `level` is carried into the report.
 */
ThicknessReport thickness(const IntervalUnion& u, std::size_t level = 0);

/// (floor(beta) - 1)/(1 - floor(beta) + beta), the closed form obtained from the
/// partition intervals I^j. It does not match the computed thickness (2 against 1 at beta = 3).
Rational partition_thickness_formula(const Rational& beta);

/// Thickness of the laboratory set with digits {1..ell-1}: (ell-2)/(beta+1-ell).
Rational laboratory_thickness(const Rational& beta, int ell);

/// log 2 / log(2 + 1/tau), rounded toward zero. Throws InvalidInput for tau <= 0.
Real newhouse_bound(const Rational& tau);

/// Neither union lies in the closure of a complementary component of the other.
bool interleaved(const IntervalUnion& a, const IntervalUnion& b);

/// tau_a * tau_b > 1.
bool gap_lemma_test(const Rational& tau_a, const Rational& tau_b);

struct CylinderPair {
    Word a;
    Word b;
    Interval overlap;
};

struct Intersection {
    IntervalUnion set;
    std::vector<CylinderPair> pairs;  // sorted by overlap.lo
};

/// Branch-and-prune: refines only overlapping cylinder pairs, level by level, to `depth`.
/// Throws CapExceeded when the number of live pairs passes `cap`.
Intersection intersect_refine(const IfsSpec& a, const IfsSpec& b, std::size_t depth,
                              std::size_t cap = max_intervals());

}  // namespace abshift
