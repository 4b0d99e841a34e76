#pragma once

/*
 * Exact rational scalars.
 *
 * Rational is a thin value type over GMP's mpq_class. Every operation leaves
 * the fraction in lowest terms with a positive denominator, so equality of
 * values is equality of representations and the "p/q" text form is unique.
 */

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace abshift {

class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}
    Rational(int v) : q_(static_cast<long>(v)) {}
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpz_class& v) : q_(v) {}
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Parses "p/q", "p" or a signed integer. Throws InvalidInput on anything else.
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// Always "p/q", including integers ("3/1"); the inverse of parse().
    std::string str() const;

    double to_double() const { return q_.get_d(); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    std::size_t hash() const;

private:
    mpq_class q_;
};

/// Largest integer not exceeding q.
mpz_class rat_floor(const Rational& q);
/// Smallest integer not below q.
mpz_class rat_ceil(const Rational& q);

/// floor() for values known to fit a machine integer (digits, strata).
long floor_long(const Rational& q);
long ceil_long(const Rational& q);

Rational abs(const Rational& q);
Rational pow(const Rational& base, long exponent);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

struct RationalHash {
    std::size_t operator()(const Rational& q) const { return q.hash(); }
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace abshift
