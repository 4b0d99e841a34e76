#include "abshift/dynamics.hpp"

#include "abshift/error.hpp"
#include "abshift/series.hpp"

#include <algorithm>
#include <unordered_map>

namespace abshift {

Params::Params(Rational alpha, Rational beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {
    if (alpha_ < Rational(0) || alpha_ >= Rational(1))
        throw InvalidInput("alpha must lie in [0,1), got " + alpha_.str());
    if (beta_ <= Rational(1)) throw InvalidInput("beta must exceed 1, got " + beta_.str());
    ell_ = static_cast<int>(floor_long(alpha_ + beta_));
}

Params Params::laboratory(Rational alpha, Rational beta) {
    Params p(std::move(alpha), std::move(beta));
    if (p.ell() < 3) throw InvalidInput("laboratory mode needs ell >= 3, got ell = " + std::to_string(p.ell()));
    return p;
}

Digit digit(const Params& p, const Rational& x) {
    if (x < Rational(0) || x >= Rational(1)) throw InvalidInput("orbit point outside [0,1): " + x.str());
    return static_cast<Digit>(floor_long(p.beta() * x + p.alpha()));
}

std::pair<Digit, Rational> step(const Params& p, const Rational& x) {
    Digit d = digit(p, x);
    return {d, p.beta() * x + p.alpha() - Rational(d)};
}

namespace {

// Iterates a state map until n digits are known. Once a state repeats, the
// remaining digits are read off the detected cycle. `next` returns (digit, state').
template <typename Next>
Coding run_orbit(Rational state, std::size_t n, std::size_t state_cap, Next next) {
    Coding out;
    out.digits.reserve(n);
    std::unordered_map<Rational, std::size_t, RationalHash> seen;
    std::size_t first_repeat = 0, repeat_at = 0;
    for (std::size_t i = 0; i <= n; ++i) {
        if (i < state_cap) {
            auto [it, fresh] = seen.emplace(state, i);
            if (!fresh) {
                out.periodic = true;
                first_repeat = it->second;
                repeat_at = i;
                break;
            }
        }
        if (i == n) break;
        auto [d, s] = next(state);
        out.digits.push_back(d);
        state = std::move(s);
    }
    if (out.periodic) {
        Word pre(out.digits.begin(), out.digits.begin() + static_cast<std::ptrdiff_t>(first_repeat));
        Word per(out.digits.begin() + static_cast<std::ptrdiff_t>(first_repeat),
                 out.digits.begin() + static_cast<std::ptrdiff_t>(repeat_at));
        out.exact = SymbolSeq::periodic(std::move(pre), std::move(per));
        out.digits = out.exact.take(n);
    }
    return out;
}

}  // namespace

Coding itinerary(const Params& p, const Rational& x, std::size_t n, std::size_t state_cap) {
    if (n == 0) throw InvalidInput("itinerary length must be positive");
    digit(p, x);
    return run_orbit(x, n, state_cap, [&p](const Rational& s) { return step(p, s); });
}

Coding left_limit_critical(const Params& p, std::size_t n, std::size_t state_cap) {
    if (n == 0) throw InvalidInput("itinerary length must be positive");
    return run_orbit(Rational(1), n, state_cap, [&p](const Rational& y) {
        Rational image = p.beta() * y + p.alpha();
        auto d = static_cast<Digit>(ceil_long(image) - 1);
        return std::pair<Digit, Rational>{d, image - Rational(d)};
    });
}

Rational left_limit_image(const Params& p) {
    Rational image = p.beta() + p.alpha();
    return image - Rational(ceil_long(image) - 1);
}

Coding zero_critical(const Params& p, std::size_t n, std::size_t state_cap) {
    return itinerary(p, Rational(0), n, state_cap);
}

Rational expansion_partial_sum(const Params& p, const Word& digits) {
    if (digits.empty()) throw InvalidInput("partial sum needs at least one digit");
    Rational acc;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) acc = (acc + Rational(*it) - p.alpha()) / p.beta();
    return acc;
}

Rational coded_point(const Rational& alpha, const Rational& beta, const SymbolSeq& omega) {
    return eventually_periodic_value(omega, beta) - alpha / (beta - Rational(1));
}

int lex_compare_words(const Word& a, const Word& b) {
    if (a.size() != b.size()) throw InvalidInput("lexicographic comparison of words of unequal length");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

}  // namespace abshift
