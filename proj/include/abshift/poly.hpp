#pragma once

#include "abshift/rational.hpp"

#include <cstddef>
#include <vector>

namespace abshift {

/// Dense univariate polynomial with exact rational coefficients, lowest degree first.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    static Poly constant(const Rational& c) { return Poly({c}); }
    static Poly x() { return Poly({Rational(0), Rational(1)}); }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rational& lead() const { return c_.back(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x) const;
    Poly derivative() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    /// Remainder of Euclidean division; b must be nonzero.
    friend Poly operator%(const Poly& a, const Poly& b);
    Poly operator-() const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Number of distinct real roots in (a, b] by Sturm's theorem. Requires a < b
/// and p(a) != 0.
std::size_t sturm_root_count(const Poly& p, const Rational& a, const Rational& b);

}  // namespace abshift
