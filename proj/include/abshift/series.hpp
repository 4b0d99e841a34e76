#pragma once

#include "abshift/rational.hpp"
#include "abshift/symbol_seq.hpp"

namespace abshift {

/// Exact value of sum_{n>=1} digits_n / beta^n for an eventually periodic
/// digit sequence, by closed-form geometric summation of the period.
/// Throws InvalidInput for finite prefixes or beta <= 1.
Rational eventually_periodic_value(const SymbolSeq& digits, const Rational& beta);

/// sum_{k=1}^{n} digits_k / beta^k over a finite word.
Rational word_value(const Word& digits, const Rational& beta);

}  // namespace abshift
