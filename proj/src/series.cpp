#include "abshift/series.hpp"

#include "abshift/error.hpp"

namespace abshift {

Rational word_value(const Word& digits, const Rational& beta) {
    // Horner from the last digit: (((d_n/b + d_{n-1})/b + ...) + d_1)/b
    Rational acc;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) acc = (acc + Rational(*it)) / beta;
    return acc;
}

Rational eventually_periodic_value(const SymbolSeq& digits, const Rational& beta) {
    if (!digits.is_periodic()) throw InvalidInput("a finite prefix has no exact series value");
    if (beta <= Rational(1)) throw InvalidInput("series value needs beta > 1");
    const auto p0 = static_cast<long>(digits.preperiod().size());
    const auto p = static_cast<long>(digits.period().size());
    const Rational bp = pow(beta, p);
    // tail = beta^{-p0} * (sum over one period) * beta^p / (beta^p - 1)
    Rational tail = word_value(digits.period(), beta) * bp / (bp - Rational(1));
    return word_value(digits.preperiod(), beta) + tail / pow(beta, p0);
}

}  // namespace abshift
