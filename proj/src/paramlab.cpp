#include "abshift/paramlab.hpp"

#include "abshift/error.hpp"
#include "abshift/poly.hpp"
#include "abshift/series.hpp"

#include <algorithm>
#include <unordered_map>

namespace abshift {

namespace {

void require_fibre(const Rational& beta, int ell) {
    if (!(Rational(ell - 1) < beta && beta < Rational(ell + 1)))
        throw InvalidInput("beta " + beta.str() + " outside (ell-1, ell+1) for ell = " + std::to_string(ell));
}

void require_laboratory_digits(const SymbolSeq& omega, int ell) {
    if (!omega.is_periodic()) throw InvalidInput("omega must be eventually periodic: " + omega.str());
    if (omega.min_digit() < 1 || omega.max_digit() > ell - 1)
        throw InvalidInput("omega digits must lie in {1.." + std::to_string(ell - 1) + "}: " + omega.str());
}

Rational floor_rat(const Rational& q) { return Rational(rat_floor(q)); }

// 1 - beta + floor(beta)
Rational fractional_gap(const Rational& beta) { return Rational(1) - beta + floor_rat(beta); }

Rational contraction(const Rational& beta) { return (beta - Rational(1)) / beta; }

}  // namespace

AlphaWindow e_ell_window(const Rational& beta, int ell) {
    require_fibre(beta, ell);
    if (beta <= Rational(ell)) return {Rational(ell) - beta, Rational(1)};
    return {Rational(0), Rational(ell + 1) - beta};
}

AlphaWindow s_tilde_window(const Rational& beta, int ell) {
    require_fibre(beta, ell);
    return {fractional_gap(beta), min(Rational(ell + 1) - beta, Rational(1))};
}

AlphaCandidate r_alpha(const Rational& beta, int ell, const SymbolSeq& omega) {
    require_fibre(beta, ell);
    require_laboratory_digits(omega, ell);
    AlphaCandidate c;
    c.alpha = contraction(beta) * eventually_periodic_value(omega, beta);
    c.member = e_ell_window(beta, ell).contains(c.alpha);
    return c;
}

AlphaCandidate s_alpha(const Rational& beta, int ell, const SymbolSeq& omega) {
    require_fibre(beta, ell);
    require_laboratory_digits(omega, ell);
    AlphaCandidate c;
    c.alpha = contraction(beta) * (eventually_periodic_value(omega, beta) + fractional_gap(beta));
    c.member = s_tilde_window(beta, ell).contains(c.alpha);
    return c;
}

IfsSpec r_beta_spec(const Rational& beta, int ell) {
    require_fibre(beta, ell);
    return IfsSpec::laboratory(beta, ell, Affine{contraction(beta), Rational(0)});
}

IfsSpec s_tilde_spec(const Rational& beta, int ell) {
    require_fibre(beta, ell);
    const Rational s = contraction(beta);
    return IfsSpec::laboratory(beta, ell, Affine{s, s * fractional_gap(beta)});
}

EpsilonConditions epsilon_conditions(const Rational& beta, int ell) {
    if (!(Rational(ell - 1) < beta && beta <= Rational(ell)))
        throw InvalidInput("window conditions need ell-1 < beta <= ell, got beta = " + beta.str());
    const Rational fl = floor_rat(beta);
    const Rational gap = fractional_gap(beta);
    const Rational s = contraction(beta);
    EpsilonConditions c;
    c.cantor_eq1 = gap <= s * (Rational(1) / beta + gap);
    c.cantor_eq2 = s * (fl / beta + gap) < Rational(1);
    c.beta_1 = Rational(ell) - beta < s / beta;
    return c;
}

namespace {

// The three conditions times beta^2, as polynomials in beta with floor(beta) = ell - 1;
// each condition holds where its polynomial is positive.
std::vector<Poly> condition_polys(int ell) {
    const Poly b = Poly::x();
    const Poly one = Poly::constant(Rational(1));
    const Poly gap = Poly::constant(Rational(ell)) - b;  // 1 - beta + (ell - 1)
    const Poly bm1 = b - one;
    return {
        bm1 * (one + gap * b) - gap * b * b,                                     // cantor-eq1
        b * b - bm1 * (Poly::constant(Rational(ell - 1)) + gap * b),             // cantor-eq2
        bm1 - gap * b * b,                                                       // beta-1
    };
}

bool positive_on(const Poly& p, const Rational& a, const Rational& b) {
    if (p.eval(a).sign() <= 0 || p.eval(b).sign() <= 0) return false;
    return sturm_root_count(p, a, b) == 0;
}

}  // namespace

Rational max_epsilon(int ell) {
    if (ell < 3) throw InvalidInput("max_epsilon needs ell >= 3");
    const auto polys = condition_polys(ell);
    const Rational top(ell);
    auto ok = [&](const Rational& eps) {
        const Rational lo = top - eps;
        return std::all_of(polys.begin(), polys.end(), [&](const Poly& p) { return positive_on(p, lo, top); });
    };
    if (ok(Rational(1))) return Rational(1);
    Rational lo(0), hi(1);
    for (int i = 0; i < 32; ++i) {
        Rational mid = (lo + hi) / Rational(2);
        if (ok(mid)) lo = mid; else hi = mid;
    }
    if (lo.sign() == 0) throw SearchFailure("no certified epsilon window for ell = " + std::to_string(ell));
    return lo;
}

Stratum make_stratum(int ell) {
    Stratum s;
    s.ell = ell;
    s.epsilon = max_epsilon(ell);
    s.window_lo = Rational(ell) - s.epsilon;
    s.window_hi = Rational(ell);
    return s;
}

bool WitnessReport::identities_hold() const {
    return std::all_of(identities.begin(), identities.end(), [](const Identity& i) { return i.holds; });
}

std::string WitnessReport::status() const {
    if (certified) return "certified";
    if (k_u.certified_finite() || k_v.certified_finite() || !identities.empty()) return "partial";
    if (!enclosures.empty()) return "enclosure";
    return "unverified";
}

namespace {

Identity identity(std::string name, const Rational& lhs, const Rational& rhs) {
    Rational residual = lhs - rhs;
    bool holds = residual.sign() == 0;
    return {std::move(name), holds, std::move(residual)};
}

Word with_head(Digit head, const Word& tail) {
    Word w{head};
    w.insert(w.end(), tail.begin(), tail.end());
    return w;
}

}  // namespace

WitnessReport verify_witness(const Rational& alpha, const Rational& beta, const std::optional<SymbolSeq>& omega_r,
                             const std::optional<SymbolSeq>& omega_s, std::size_t n, std::size_t state_cap) {
    if (n == 0) throw InvalidInput("verification length must be positive");
    const Params p(alpha, beta);
    WitnessReport r;
    r.beta = beta;
    r.ell = p.ell();
    r.alpha = alpha;
    r.omega_r = omega_r;
    r.omega_s = omega_s;

    const std::size_t len = 5 * n;
    const Coding u = zero_critical(p, len, state_cap);
    const Coding v = left_limit_critical(p, len, state_cap);
    r.u = u.sequence();
    r.v = v.sequence();

    if (omega_r) {
        require_laboratory_digits(*omega_r, p.ell());
        const Rational x0 = eventually_periodic_value(*omega_r, beta);
        r.identities.push_back(identity("alpha = (beta-1)/beta * x0(omega_r)", alpha, contraction(beta) * x0));
        r.identities.push_back(
            identity("T(0) = x_{alpha,beta}(omega_r)", step(p, Rational(0)).second, coded_point(alpha, beta, *omega_r)));
        const Word expect = with_head(0, omega_r->take(n - 1));
        r.digits_match = r.digits_match && Word(u.digits.begin(), u.digits.begin() + static_cast<std::ptrdiff_t>(n)) == expect;
    }
    if (omega_s) {
        require_laboratory_digits(*omega_s, p.ell());
        const Rational xs = coded_point(alpha, beta, *omega_s);
        r.identities.push_back(identity("lim_{x->1-} T(x) = x_{alpha,beta}(omega_s)", left_limit_image(p), xs));
        r.identities.push_back(
            identity("x_{alpha,beta}(omega_s) = beta + alpha - 1 - floor(beta)", xs,
                     beta + alpha - Rational(1) - floor_rat(beta)));
        r.identities.push_back(identity("1 + floor(beta) = floor(beta + alpha)", Rational(1) + floor_rat(beta),
                                        floor_rat(beta + alpha)));
        const Word expect = with_head(p.ell(), omega_s->take(n - 1));
        r.digits_match = r.digits_match && Word(v.digits.begin(), v.digits.begin() + static_cast<std::ptrdiff_t>(n)) == expect;
    }

    auto ks = k_sets(r.u, r.v, n, 4 * n);
    r.k_u = std::move(ks.k_u);
    r.k_v = std::move(ks.k_v);
    // A certificate needs the dual witness; one side alone stays partial even if both K-sets come out finite.
    r.certified = omega_r && omega_s && r.k_u.certified_finite() && r.k_v.certified_finite() &&
                  r.identities_hold() && r.digits_match;
    return r;
}

namespace {

template <typename Visit>
void for_each_periodic(Digit lo, Digit hi, std::size_t max_length, Visit visit) {
    Word w;
    auto rec = [&](auto&& self, std::size_t len) -> void {
        if (!w.empty()) {
            for (std::size_t split = 0; split < w.size(); ++split)
                visit(SymbolSeq::periodic(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(split)),
                                          Word(w.begin() + static_cast<std::ptrdiff_t>(split), w.end())));
        }
        if (len == max_length) return;
        for (Digit d = lo; d <= hi; ++d) {
            w.push_back(d);
            self(self, len + 1);
            w.pop_back();
        }
    };
    rec(rec, 0);
}

}  // namespace

std::vector<CommonPoint> exact_common_points(const IfsSpec& a, const IfsSpec& b, std::size_t max_length) {
    std::unordered_map<Rational, SymbolSeq, RationalHash> from_b;
    for_each_periodic(b.digit_lo(), b.digit_hi(), max_length,
                      [&](SymbolSeq s) { from_b.try_emplace(b.point(s), std::move(s)); });
    std::unordered_map<Rational, CommonPoint, RationalHash> hits;
    for_each_periodic(a.digit_lo(), a.digit_hi(), max_length, [&](SymbolSeq s) {
        Rational x = a.point(s);
        auto it = from_b.find(x);
        if (it != from_b.end() && hits.find(x) == hits.end()) hits.emplace(x, CommonPoint{x, std::move(s), it->second});
    });
    std::vector<CommonPoint> out;
    for (auto& [_, c] : hits) out.push_back(std::move(c));
    std::sort(out.begin(), out.end(), [](const CommonPoint& x, const CommonPoint& y) { return x.value < y.value; });
    return out;
}

WitnessReport find_witness(const Rational& beta, std::size_t depth, const WitnessOptions& options) {
    if (depth == 0) throw InvalidInput("witness depth must be at least 1");
    const int ell = options.ell.value_or(static_cast<int>(floor_long(beta)) + 1);
    if (ell < 3) throw InvalidInput("witness search needs ell >= 3, got ell = " + std::to_string(ell));
    if (!(Rational(ell - 1) < beta && beta < Rational(ell)))
        throw InvalidInput("witness search needs ell-1 < beta < ell, got beta = " + beta.str() +
                           ", ell = " + std::to_string(ell));
    if (options.require_conditions) {
        const auto c = epsilon_conditions(beta, ell);
        if (!c.all())
            throw InvalidInput("window conditions fail at beta = " + beta.str() +
                               " (cantor-eq1 " + (c.cantor_eq1 ? "ok" : "fails") +
                               ", cantor-eq2 " + (c.cantor_eq2 ? "ok" : "fails") +
                               ", beta-1 " + (c.beta_1 ? "ok" : "fails") + ")");
    }

    const IfsSpec a = r_beta_spec(beta, ell);
    const IfsSpec b = s_tilde_spec(beta, ell);

    WitnessDiagnostics diag;
    diag.tau_r = thickness(lambda_approx(a, 1), 1).tau;
    diag.tau_s = thickness(lambda_approx(b, 1), 1).tau;
    diag.gap_lemma = gap_lemma_test(diag.tau_r, diag.tau_s);
    std::size_t probe_level = 1;
    for (std::size_t count = static_cast<std::size_t>(a.branches()); probe_level < 3 && count * a.branches() <= 4096;
         count *= static_cast<std::size_t>(a.branches()))
        ++probe_level;
    diag.interleaved = interleaved(lambda_approx(a, probe_level), lambda_approx(b, probe_level));

    Intersection inter = intersect_refine(a, b, depth);
    diag.surviving_pairs = inter.pairs.size();
    if (inter.pairs.empty())
        throw SearchFailure("no overlapping cylinder pair survives to depth " + std::to_string(depth) +
                            " at beta = " + beta.str() + " (tau_R = " + diag.tau_r.str() +
                            ", tau_S = " + diag.tau_s.str() + ", gap lemma " +
                            (diag.gap_lemma ? "holds" : "fails") + ", interleaved " +
                            (diag.interleaved ? "yes" : "no") + ")");

    if (options.exact_search) {
        std::size_t length = 1;
        for (std::size_t count = static_cast<std::size_t>(a.branches()); count * a.branches() <= 4096;
             count *= static_cast<std::size_t>(a.branches()))
            ++length;
        for (const auto& hit : exact_common_points(a, b, length)) {
            if (!e_ell_window(beta, ell).contains(hit.value) || !s_tilde_window(beta, ell).contains(hit.value))
                continue;
            WitnessReport r = verify_witness(hit.value, beta, hit.omega_a, hit.omega_b, options.verify_digits);
            if (!r.certified) continue;
            r.diagnostics = diag;
            return r;
        }
    }

    const CylinderPair& best = inter.pairs.front();
    WitnessReport r;
    r.beta = beta;
    r.ell = ell;
    for (std::size_t k = 0; k <= depth; ++k) {
        Word wa(best.a.begin(), best.a.begin() + static_cast<std::ptrdiff_t>(k));
        Word wb(best.b.begin(), best.b.begin() + static_cast<std::ptrdiff_t>(k));
        Interval ia = a.cylinder(wa), ib = b.cylinder(wb);
        r.enclosures.emplace_back(max(ia.lo, ib.lo), min(ia.hi, ib.hi));
    }
    r.omega_r = SymbolSeq::prefix(best.a);
    r.omega_s = SymbolSeq::prefix(best.b);
    r.u = SymbolSeq::prefix(with_head(0, best.a));
    r.v = SymbolSeq::prefix(with_head(ell, best.b));
    const std::size_t known = depth + 1;
    const std::size_t n_max = std::max<std::size_t>(1, known / 2);
    if (known >= n_max + 1) {
        auto ks = k_sets(r.u, r.v, n_max, known - n_max);
        r.k_u = std::move(ks.k_u);
        r.k_v = std::move(ks.k_v);
    }
    r.certified = false;
    r.diagnostics = diag;
    return r;
}

DimBound dim_lower_bound(long ell) {
    if (ell < 3) throw InvalidInput("dimension bound needs ell >= 3");
    // sqrt(8/(ell-2)) rounded up keeps the quotient a lower bound
    const Real root = Real::sqrt(Real(Rational(8, ell - 2), Round::Up), Round::Up);
    const Real denom = Real::log(Real::add(Real(2), root, Round::Up), Round::Up);
    DimBound d{Real::div(Real::log2_const(Round::Down), denom, Round::Down), Real()};
    d.product = Real::add(d.fiber, Real(1), Round::Down);
    return d;
}

DimBound dim_lower_bound_at(const Rational& tau) {
    if (tau.sign() <= 0) throw InvalidInput("dimension bound needs tau > 0");
    const Real root = Real::sqrt(Real(tau, Round::Down), Round::Down);
    const Real inv = Real::div(Real(2), root, Round::Up);
    const Real denom = Real::log(Real::add(Real(2), inv, Round::Up), Round::Up);
    DimBound d{Real::div(Real::log2_const(Round::Down), denom, Round::Down), Real()};
    d.product = Real::add(d.fiber, Real(1), Round::Down);
    return d;
}

}  // namespace abshift
