#pragma once

/*
 * Directed-rounding reals over MPFR, used only where a transcendental value
 * (a logarithm, a square root) must be turned into a rigorous one-sided
 * bound. Values carry no error interval; callers choose the rounding
 * direction of every step so the final result is a valid bound.
 */

#include "abshift/rational.hpp"

#include <mpfr.h>

#include <compare>
#include <string>

namespace abshift {

enum class Round { Down, Up };

class Real {
public:
    static constexpr mpfr_prec_t kPrecision = 256;

    Real();
    explicit Real(long v);
    Real(const Rational& q, Round r);
    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(Real o) noexcept;
    ~Real();

    static Real log(const Real& x, Round r);
    static Real sqrt(const Real& x, Round r);
    static Real add(const Real& a, const Real& b, Round r);
    static Real div(const Real& a, const Real& b, Round r);

    /// log(2) rounded in the given direction.
    static Real log2_const(Round r);

    double to_double(Round r) const;
    /// `digits` significant decimal digits, rounded in the given direction.
    std::string to_string(int digits, Round r) const;

    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend std::partial_ordering operator<=>(const Real& a, const Real& b);

    mpfr_srcptr get() const { return v_; }

private:
    mpfr_t v_;
};

}  // namespace abshift
