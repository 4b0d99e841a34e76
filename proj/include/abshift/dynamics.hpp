#pragma once

/*
 * The (alpha, beta)-transformation T(x) = beta*x + alpha - floor(beta*x + alpha)
 * on [0,1), its digit coding, and the two critical sequences that determine
 * the (alpha, beta)-shift:
 *
 *   u = itinerary of 0,
 *   v = left-limit itinerary of 1 (the virtual orbit of 1^-).
 *
 * All arithmetic is exact; parameters are rational.
 */

#include "abshift/rational.hpp"
#include "abshift/symbol_seq.hpp"

#include <cstddef>
#include <utility>

namespace abshift {

/// A point of the stratum E_ell: alpha in [0,1), beta > 1, ell = floor(alpha + beta).
class Params {
public:
    Params(Rational alpha, Rational beta);

    /// Same, additionally requiring ell >= 3 (the regime of the parameter-set construction).
    static Params laboratory(Rational alpha, Rational beta);

    const Rational& alpha() const { return alpha_; }
    const Rational& beta() const { return beta_; }
    int ell() const { return ell_; }

private:
    Rational alpha_;
    Rational beta_;
    int ell_;
};

inline constexpr std::size_t kDefaultStateCap = 1'000'000;

/// floor(beta*x + alpha). Boundary points (j - alpha)/beta take the higher digit.
Digit digit(const Params& p, const Rational& x);

/// (digit, T(x)).
std::pair<Digit, Rational> step(const Params& p, const Rational& x);

/*
 * Result of iterating an orbit: the first `digits.size()` symbols, and when a
 * rational state repeated within the budget, the exact eventually periodic
 * coding of the whole orbit.
 */
struct Coding {
    Word digits;
    bool periodic = false;
    SymbolSeq exact;  // valid iff periodic

    /// The exact sequence when known, otherwise the prefix.
    SymbolSeq sequence() const { return periodic ? exact : SymbolSeq::prefix(digits); }
};

/// First n digits of the coding of x; detects a repeated state among the
/// first min(n, state_cap) orbit points.
Coding itinerary(const Params& p, const Rational& x, std::size_t n, std::size_t state_cap = kDefaultStateCap);

/// First n digits of v via the virtual left-limit orbit: y0 = 1,
/// d = ceil(beta*y + alpha) - 1, y' = beta*y + alpha - d, y stays in (0,1].
Coding left_limit_critical(const Params& p, std::size_t n, std::size_t state_cap = kDefaultStateCap);

/// lim_{x -> 1^-} T(x) = beta + alpha - ceil(beta + alpha) + 1, the first state after y0 = 1.
Rational left_limit_image(const Params& p);

/// itinerary(p, 0, n).
Coding zero_critical(const Params& p, std::size_t n, std::size_t state_cap = kDefaultStateCap);

/// S_n = sum_{k<=n} (e_k - alpha)/beta^k.
Rational expansion_partial_sum(const Params& p, const Word& digits);

/// x_{alpha,beta}(omega) = sum (omega_n - alpha)/beta^n for eventually periodic omega,
/// i.e. x_{0,beta}(omega) - alpha/(beta - 1).
Rational coded_point(const Rational& alpha, const Rational& beta, const SymbolSeq& omega);

/// Lexicographic comparison of digit words of equal length; -1, 0, 1.
int lex_compare_words(const Word& a, const Word& b);

}  // namespace abshift
