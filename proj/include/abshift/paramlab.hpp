#pragma once

/*
 * The two parameter sets in the alpha-fibre over a fixed beta, ell-1 < beta < ell+1:
 *
 *   R_beta  = { (beta-1)/beta * x0(omega) } intersect E_ell(beta),
 *   S~_beta = { (beta-1)/beta * (x0(omega) + 1 - beta + floor(beta)) }
 *             intersect [1 - beta + floor(beta), min(ell + 1 - beta, 1)),
 *
 * omega ranging over sequences with digits in {1..ell-1} and
 * x0(omega) = sum omega_n / beta^n. alpha in R_beta puts the orbit of 0
 * inside the Cantor set Lambda_{alpha,beta} after one step; alpha in S~_beta
 * does the same for the left-limit orbit of 1. An alpha in both yields
 * empty obstruction sets on both sides and hence specification.
 */

#include "abshift/cantor.hpp"
#include "abshift/dynamics.hpp"
#include "abshift/rational.hpp"
#include "abshift/real.hpp"
#include "abshift/shiftspace.hpp"
#include "abshift/symbol_seq.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace abshift {

/// Half-open alpha range [lo, hi).
struct AlphaWindow {
    Rational lo;
    Rational hi;
    bool contains(const Rational& a) const { return lo <= a && a < hi; }
    friend bool operator==(const AlphaWindow&, const AlphaWindow&) = default;
};

/// E_ell(beta): [ell - beta, 1) if beta <= ell, [0, ell + 1 - beta) otherwise.
/// Throws InvalidInput unless ell - 1 < beta < ell + 1.
AlphaWindow e_ell_window(const Rational& beta, int ell);

/// [1 - beta + floor(beta), min(ell + 1 - beta, 1)).
AlphaWindow s_tilde_window(const Rational& beta, int ell);

struct AlphaCandidate {
    Rational alpha;
    bool member = false;  // alpha lies in the defining window
};

/// (beta-1)/beta * x0(omega), membership in E_ell(beta).
AlphaCandidate r_alpha(const Rational& beta, int ell, const SymbolSeq& omega);
/// (beta-1)/beta * (x0(omega) + 1 - beta + floor(beta)), membership in the S~ window.
AlphaCandidate s_alpha(const Rational& beta, int ell, const SymbolSeq& omega);

/// R_beta and S~_beta as affine copies of the laboratory Cantor set.
IfsSpec r_beta_spec(const Rational& beta, int ell);
IfsSpec s_tilde_spec(const Rational& beta, int ell);

struct EpsilonConditions {
    bool cantor_eq1 = false;  // 1-b+[b] <= (b-1)/b (1/b + 1-b+[b])
    bool cantor_eq2 = false;  // (b-1)/b ([b]/b + 1-b+[b]) < 1
    bool beta_1 = false;      // ell - b < (b-1)/b * 1/b
    bool all() const { return cantor_eq1 && cantor_eq2 && beta_1; }
};

/// Exact evaluation of the three window conditions. Requires ell-1 < beta <= ell.
EpsilonConditions epsilon_conditions(const Rational& beta, int ell);

/*
 * The window (ell - epsilon, ell): epsilon is the largest dyadic (to 2^-32)
 * for which each condition, written as a polynomial in beta with
 * floor(beta) = ell - 1, is certified positive on [ell - epsilon, ell] by a
 * Sturm root count.
 */
struct Stratum {
    int ell = 0;
    Rational epsilon;
    Rational window_lo;  // ell - epsilon, open
    Rational window_hi;  // ell, open

    bool contains(const Rational& beta) const { return window_lo < beta && beta < window_hi; }
};

Rational max_epsilon(int ell);
Stratum make_stratum(int ell);

struct Identity {
    std::string name;
    bool holds = false;
    Rational residual;  // lhs - rhs
};

struct WitnessDiagnostics {
    Rational tau_r;
    Rational tau_s;
    bool gap_lemma = false;
    bool interleaved = false;
    std::size_t surviving_pairs = 0;
};

struct WitnessReport {
    Rational beta;
    int ell = 0;
    std::optional<Rational> alpha;       // exact witness
    std::vector<Interval> enclosures;    // nested alpha enclosures, one per depth 0..d
    std::optional<SymbolSeq> omega_r;
    std::optional<SymbolSeq> omega_s;
    SymbolSeq u;
    SymbolSeq v;
    KReport k_u;
    KReport k_v;
    std::vector<Identity> identities;
    bool digits_match = true;
    bool certified = false;
    std::optional<WitnessDiagnostics> diagnostics;

    bool identities_hold() const;
    /// "certified", "partial" (one side verified or one K-set certified), "enclosure", or "unverified".
    std::string status() const;
};

/*
 * Exact checks for a candidate witness. For omega_r: alpha = (beta-1)/beta x0(omega_r),
 * T(0) = x_{alpha,beta}(omega_r), and u = 0·omega_r. For omega_s: the left-limit
 * image of 1 equals x_{alpha,beta}(omega_s) = beta + alpha - 1 - floor(beta), and
 * v = ell·omega_s. Both K-sets are then computed with n_max = n. `certified`
 * requires both sides: a single omega yields at best "partial".
 */
WitnessReport verify_witness(const Rational& alpha, const Rational& beta, const std::optional<SymbolSeq>& omega_r,
                             const std::optional<SymbolSeq>& omega_s, std::size_t n,
                             std::size_t state_cap = kDefaultStateCap);

struct CommonPoint {
    Rational value;
    SymbolSeq omega_a;
    SymbolSeq omega_b;
};

/// Points coded by eventually periodic sequences of total length <= max_length
/// (preperiod + period) in both sets, found by exact value matching.
std::vector<CommonPoint> exact_common_points(const IfsSpec& a, const IfsSpec& b, std::size_t max_length);

struct WitnessOptions {
    std::optional<int> ell;           // default: floor(beta) + 1
    bool require_conditions = true;   // cantor-eq1, cantor-eq2, beta-1
    bool exact_search = true;
    std::size_t verify_digits = 200;
};

/// Intersects R_beta and S~_beta to `depth` and reports the leftmost surviving
/// chain of nested enclosures, upgraded to an exact certified witness when an
/// exactly coded common point exists. Throws SearchFailure when no pair survives.
WitnessReport find_witness(const Rational& beta, std::size_t depth, const WitnessOptions& options = {});

struct DimBound {
    Real fiber;    // lower bound for the alpha-fibre
    Real product;  // fiber + 1
};

/// log2 / log(2 + sqrt(8/(ell-2))) and the same plus one, rounded down.
DimBound dim_lower_bound(long ell);
/// Newhouse bound applied to (1/2) sqrt(tau): log2 / log(2 + 2/sqrt(tau)), and plus one.
DimBound dim_lower_bound_at(const Rational& tau);

}  // namespace abshift
