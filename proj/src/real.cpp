#include "abshift/real.hpp"

#include <utility>

namespace abshift {

namespace {

mpfr_rnd_t mode(Round r) { return r == Round::Down ? MPFR_RNDD : MPFR_RNDU; }

}  // namespace

Real::Real() {
    mpfr_init2(v_, kPrecision);
    mpfr_set_zero(v_, 1);
}

Real::Real(long v) {
    mpfr_init2(v_, kPrecision);
    mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(const Rational& q, Round r) {
    mpfr_init2(v_, kPrecision);
    mpfr_set_q(v_, q.raw().get_mpq_t(), mode(r));
}

Real::Real(const Real& o) {
    mpfr_init2(v_, kPrecision);
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept : Real() { mpfr_swap(v_, o.v_); }

Real& Real::operator=(Real o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::log(const Real& x, Round r) {
    Real out;
    mpfr_log(out.v_, x.v_, mode(r));
    return out;
}

Real Real::sqrt(const Real& x, Round r) {
    Real out;
    mpfr_sqrt(out.v_, x.v_, mode(r));
    return out;
}

Real Real::add(const Real& a, const Real& b, Round r) {
    Real out;
    mpfr_add(out.v_, a.v_, b.v_, mode(r));
    return out;
}

Real Real::div(const Real& a, const Real& b, Round r) {
    Real out;
    mpfr_div(out.v_, a.v_, b.v_, mode(r));
    return out;
}

Real Real::log2_const(Round r) {
    Real out;
    mpfr_const_log2(out.v_, mode(r));
    return out;
}

double Real::to_double(Round r) const { return mpfr_get_d(v_, mode(r)); }

std::string Real::to_string(int digits, Round r) const {
    if (mpfr_zero_p(v_)) return "0";
    mpfr_exp_t exp = 0;
    char* raw = mpfr_get_str(nullptr, &exp, 10, static_cast<size_t>(digits), v_, mode(r));
    std::string mant(raw);
    mpfr_free_str(raw);
    std::string sign;
    if (!mant.empty() && mant[0] == '-') {
        sign = "-";
        mant.erase(0, 1);
    }
    // value = 0.mant * 10^exp
    std::string out;
    if (exp <= 0) {
        out = "0." + std::string(static_cast<std::size_t>(-exp), '0') + mant;
    } else if (static_cast<std::size_t>(exp) >= mant.size()) {
        out = mant + std::string(static_cast<std::size_t>(exp) - mant.size(), '0');
    } else {
        out = mant.substr(0, static_cast<std::size_t>(exp)) + "." + mant.substr(static_cast<std::size_t>(exp));
    }
    return sign + out;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::partial_ordering::less
         : c > 0 ? std::partial_ordering::greater
                 : std::partial_ordering::equivalent;
}

}  // namespace abshift
