#include "abshift/poly.hpp"

#include "abshift/error.hpp"

#include <algorithm>

namespace abshift {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
    while (!c_.empty() && c_.back().sign() == 0) c_.pop_back();
}

Rational Poly::eval(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rational(static_cast<long>(i)));
    return Poly(std::move(d));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Poly(std::move(c));
}

Poly Poly::operator-() const {
    std::vector<Rational> c;
    for (const auto& v : c_) c.push_back(-v);
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
}

Poly operator%(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw InvalidInput("polynomial division by zero");
    std::vector<Rational> r = a.c_;
    const int db = b.degree();
    for (int k = static_cast<int>(r.size()) - 1; k >= db; --k) {
        if (r[static_cast<std::size_t>(k)].sign() == 0) continue;
        Rational f = r[static_cast<std::size_t>(k)] / b.lead();
        for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(k - db + i)] -= f * b.c_[static_cast<std::size_t>(i)];
    }
    r.resize(static_cast<std::size_t>(std::min<int>(db, static_cast<int>(r.size()))));
    return Poly(std::move(r));
}

namespace {

std::size_t sign_changes(const std::vector<Poly>& chain, const Rational& x) {
    std::size_t changes = 0;
    int prev = 0;
    for (const auto& p : chain) {
        int s = p.eval(x).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

}  // namespace

std::size_t sturm_root_count(const Poly& p, const Rational& a, const Rational& b) {
    if (!(a < b)) throw InvalidInput("sturm_root_count needs a < b");
    if (p.is_zero()) throw InvalidInput("sturm_root_count of the zero polynomial");
    if (p.eval(a).sign() == 0) throw InvalidInput("sturm_root_count needs p(a) != 0");
    std::vector<Poly> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        Poly r = chain[chain.size() - 2] % chain.back();
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    if (chain.back().is_zero()) chain.pop_back();
    return sign_changes(chain, a) - sign_changes(chain, b);
}

}  // namespace abshift
