#include "abshift/error.hpp"
#include "abshift/paramlab.hpp"
#include "abshift/report.hpp"
#include "abshift/series.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace abshift;

namespace {

Rational R(const char* s) { return Rational::parse(s); }
SymbolSeq S(const char* s) { return SymbolSeq::parse(s); }

SymbolSeq random_omega(std::mt19937_64& rng, int ell) {
    std::uniform_int_distribution<int> len(0, 3), per(1, 3), dig(1, ell - 1);
    Word pre(len(rng)), period(per(rng));
    for (auto& d : pre) d = dig(rng);
    for (auto& d : period) d = dig(rng);
    return SymbolSeq::periodic(pre, period);
}

// Floating bisection on the three conditions sampled densely: a loose
// independent estimate of the largest window.
double sampled_epsilon(int ell) {
    auto ok_at = [ell](double b) {
        const double fl = ell - 1, gap = 1 - b + fl, s = (b - 1) / b;
        return gap <= s * (1 / b + gap) && s * (fl / b + gap) < 1 && ell - b < s / b;
    };
    auto ok = [&](double eps) {
        for (int i = 0; i <= 2000; ++i)
            if (!ok_at(ell - eps * i / 2000.0)) return i == 0;  // beta = ell itself is excluded
        return true;
    };
    double lo = 0, hi = 1;
    for (int i = 0; i < 40; ++i) {
        double mid = (lo + hi) / 2;
        (ok(mid) ? lo : hi) = mid;
    }
    return lo;
}

}  // namespace

TEST_CASE("alpha windows") {
    CHECK(e_ell_window(R("29/10"), 3) == AlphaWindow{R("1/10"), R("1")});
    CHECK(e_ell_window(R("3"), 3) == AlphaWindow{R("0"), R("1")});
    CHECK(e_ell_window(R("31/10"), 3) == AlphaWindow{R("0"), R("9/10")});
    CHECK_THROWS_AS(e_ell_window(R("2"), 3), InvalidInput);
    CHECK_THROWS_AS(e_ell_window(R("4"), 3), InvalidInput);
    CHECK(s_tilde_window(R("29/10"), 3) == AlphaWindow{R("1/10"), R("1")});
    CHECK(s_tilde_window(R("31/10"), 3) == AlphaWindow{R("9/10"), R("9/10")});
}

TEST_CASE("r_alpha and s_alpha examples") {
    auto r = r_alpha(R("29/10"), 3, S("(1)"));
    CHECK(r.alpha == R("10/29"));
    CHECK(r.member);
    CHECK(r_alpha(R("3"), 3, S("(1)")).alpha == R("1/3"));
    for (const char* b : {"29/10", "37/10", "49/5"}) {
        const Rational beta = R(b);
        const int ell = static_cast<int>(floor_long(beta)) + 1;
        CHECK(r_alpha(beta, ell, SymbolSeq::periodic({}, {ell - 1})).alpha == Rational(ell - 1) / beta);
    }
    auto s = s_alpha(R("29/10"), 3, S("(1)"));
    CHECK(s.alpha == R("119/290"));
    CHECK(s.member);
    auto s2 = s_alpha(R("29/10"), 3, S("(2)"));
    CHECK(s2.alpha == R("219/290"));
    CHECK(s2.member);
    auto s3 = s_alpha(R("3"), 3, S("(1)"));
    CHECK(s3.alpha == Rational(1));
    CHECK_FALSE(s3.member);
    CHECK_THROWS_AS(r_alpha(R("29/10"), 3, S("(3)")), InvalidInput);
    CHECK_THROWS_AS(r_alpha(R("29/10"), 3, S("0,(1)")), InvalidInput);
    CHECK_THROWS_AS(s_alpha(R("29/10"), 3, S("1,1")), InvalidInput);
}

TEST_CASE("R members put the orbit of 0 on omega") {
    std::mt19937_64 rng(67);
    int members = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const int ell = 3 + trial % 6;
        const Rational beta(oracle::random_rational(rng, (ell - 1) * 41 + 1, ell * 41 - 1, 41));
        const SymbolSeq omega = random_omega(rng, ell);
        const auto c = r_alpha(beta, ell, omega);
        if (!c.member) continue;
        ++members;
        const Params p(c.alpha, beta);
        CHECK(c.alpha == eventually_periodic_value(omega, beta) - c.alpha / (beta - Rational(1)));
        const Coding u = zero_critical(p, 1001);
        CHECK(u.digits[0] == 0);
        CHECK(Word(u.digits.begin() + 1, u.digits.end()) == omega.take(1000));
    }
    CHECK(members >= 20);
}

TEST_CASE("S~ members put the left-limit orbit on omega") {
    std::mt19937_64 rng(71);
    int members = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const int ell = 3 + trial % 6;
        const Rational beta(oracle::random_rational(rng, (ell - 1) * 41 + 1, ell * 41 - 1, 41));
        const SymbolSeq omega = random_omega(rng, ell);
        const auto c = s_alpha(beta, ell, omega);
        if (!c.member) continue;
        ++members;
        const Params p(c.alpha, beta);
        const Rational fl(rat_floor(beta));
        CHECK(coded_point(c.alpha, beta, omega) == beta + c.alpha - Rational(1) - fl);
        CHECK(Rational(1) + fl == Rational(rat_floor(beta + c.alpha)));
        CHECK(left_limit_image(p) == coded_point(c.alpha, beta, omega));
        const Coding v = left_limit_critical(p, 1001);
        CHECK(v.digits[0] == ell);
        CHECK(Word(v.digits.begin() + 1, v.digits.end()) == omega.take(1000));
    }
    CHECK(members >= 20);
}

TEST_CASE("R and S~ have the same thickness") {
    for (const char* b : {"29/10", "59/20", "39/10", "99/10"}) {
        const Rational beta = R(b);
        const int ell = static_cast<int>(floor_long(beta)) + 1;
        for (std::size_t n = 1; n <= 3; ++n) {
            const auto tr = thickness(lambda_approx(r_beta_spec(beta, ell), n), n);
            const auto ts = thickness(lambda_approx(s_tilde_spec(beta, ell), n), n);
            CHECK(tr.tau == ts.tau);
            CHECK(tr.minimizing_gap.length() == ts.minimizing_gap.length());
            CHECK(tr.minimizing_bridge.length() == ts.minimizing_bridge.length());
        }
    }
}

TEST_CASE("window conditions") {
    auto c = epsilon_conditions(R("29/10"), 3);
    CHECK(c.cantor_eq1);
    CHECK(c.cantor_eq2);
    CHECK(c.beta_1);
    CHECK(c.all());
    for (int ell : {3, 4, 10}) {
        auto at = epsilon_conditions(Rational(ell), ell);
        CHECK_FALSE(at.cantor_eq2);
    }
    CHECK_FALSE(epsilon_conditions(R("19/2"), 10).beta_1);
    CHECK_FALSE(epsilon_conditions(R("5/2"), 3).beta_1);
    CHECK_THROWS_AS(epsilon_conditions(R("31/10"), 3), InvalidInput);
    CHECK_THROWS_AS(epsilon_conditions(R("2"), 3), InvalidInput);
}

TEST_CASE("max_epsilon is certified") {
    for (int ell : {3, 4, 5, 10, 30}) {
        const Rational eps = max_epsilon(ell);
        CHECK(eps.sign() > 0);
        CHECK(eps < Rational(1));
        CHECK(std::abs(eps.to_double() - sampled_epsilon(ell)) < 1e-6);
        const Stratum st = make_stratum(ell);
        CHECK(st.window_lo == Rational(ell) - eps);
        CHECK_FALSE(st.contains(Rational(ell)));
        CHECK_FALSE(st.contains(st.window_lo));
        for (int i = 1; i < 200; ++i) {
            const Rational beta = st.window_lo + eps * Rational(i, 200);
            CHECK(st.contains(beta));
            CHECK(epsilon_conditions(beta, ell).all());
        }
        const Rational below = st.window_lo - Rational(1, 1L << 30);
        CHECK_FALSE(epsilon_conditions(below, ell).all());
    }
    CHECK(make_stratum(3).contains(R("29/10")));
    CHECK_THROWS_AS(max_epsilon(2), InvalidInput);
}

TEST_CASE("verify_witness examples") {
    const auto r = verify_witness(R("10/29"), R("29/10"), S("(1)"), std::nullopt, 100);
    CHECK(r.identities.size() == 2);
    CHECK(r.identities_hold());
    CHECK(r.digits_match);
    CHECK(r.u.str() == "0,(1)");
    CHECK(r.k_u.verdict == KVerdict::EmptyCertified);
    CHECK_FALSE(r.certified);
    CHECK(r.status() == "partial");

    const auto s = verify_witness(R("119/290"), R("29/10"), std::nullopt, S("(1)"), 100);
    CHECK(s.identities.size() == 3);
    CHECK(s.identities_hold());
    CHECK(s.digits_match);
    CHECK(s.v.str() == "3,(1)");
    CHECK(s.k_v.verdict == KVerdict::EmptyCertified);
    CHECK_FALSE(s.certified);

    const auto t = verify_witness(R("1/3"), R("3"), S("(1)"), std::nullopt, 100);
    CHECK(t.identities_hold());
    CHECK(t.status() == "partial");
    CHECK_FALSE(t.certified);

    const auto bad = verify_witness(R("1/3"), R("29/10"), S("(1)"), S("(1)"), 20);
    CHECK_FALSE(bad.identities_hold());
    CHECK_FALSE(bad.certified);
    CHECK(bad.identities[0].residual == R("1/3") - R("10/29"));
    CHECK_THROWS_AS(verify_witness(R("1/3"), R("29/10"), S("(3)"), std::nullopt, 20), InvalidInput);
}

TEST_CASE("certified K-sets imply certified specification") {
    std::mt19937_64 rng(73);
    int both = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const int ell = 3 + trial % 4;
        const Rational beta = trial % 5 == 0 ? Rational(ell)
                                             : Rational(oracle::random_rational(rng, (ell - 1) * 17 + 1, ell * 17 - 1, 17));
        const SymbolSeq omega = random_omega(rng, ell);
        const auto c = r_alpha(beta, ell, omega);
        if (!c.member) continue;
        const auto w = verify_witness(c.alpha, beta, omega, std::nullopt, 40);
        CHECK(w.identities_hold());
        if (w.k_u.certified_finite() && w.k_v.certified_finite()) {
            ++both;
            CHECK(spec_check(Params(c.alpha, beta), 40).verdict == SpecVerdict::SpecCertified);
        }
    }
    CHECK(both >= 1);
}

TEST_CASE("find_witness at beta = 29/10") {
    const Rational beta = R("29/10");
    const auto r = find_witness(beta, 8);
    CHECK_FALSE(r.certified);
    CHECK(r.status() == "enclosure");
    REQUIRE(r.enclosures.size() == 9);
    CHECK(r.enclosures[0] == Interval(R("119/290"), R("20/29")));
    const Rational scale = (beta - Rational(1)) / beta;
    const Rational width = scale * Rational(1) / (beta - Rational(1));  // hull length of R and S~
    for (std::size_t k = 0; k < r.enclosures.size(); ++k) {
        CHECK(Interval(R("119/290"), R("20/29")).contains(r.enclosures[k]));
        CHECK(r.enclosures[k].length() <= width * pow(beta, -static_cast<long>(k)));
        if (k > 0) CHECK(r.enclosures[k - 1].contains(r.enclosures[k]));
    }
    REQUIRE(r.omega_r);
    REQUIRE(r.omega_s);
    CHECK(r.omega_r->take(8).size() == 8);
    CHECK(r.u.at(0) == 0);
    CHECK(r.v.at(0) == 3);
    REQUIRE(r.diagnostics);
    CHECK(r.diagnostics->tau_r == R("10/9"));
    CHECK(r.diagnostics->tau_s == R("10/9"));
    CHECK(r.diagnostics->gap_lemma);
    CHECK(r.diagnostics->interleaved);
    CHECK(r.diagnostics->surviving_pairs > 0);

    const auto coarse = find_witness(beta, 1);
    CHECK(coarse.enclosures.size() == 2);
    CHECK_FALSE(coarse.certified);

    CHECK_THROWS_AS(find_witness(R("5/2"), 4), InvalidInput);
    CHECK_THROWS_AS(find_witness(R("3"), 4), InvalidInput);
    CHECK_THROWS_AS(find_witness(R("3/2"), 4), InvalidInput);
    CHECK_THROWS_AS(find_witness(beta, 0), InvalidInput);
    WitnessOptions loose;
    loose.require_conditions = false;
    CHECK(find_witness(R("5/2"), 4, loose).enclosures.size() == 5);
}

TEST_CASE("exact common points") {
    const IfsSpec lab = IfsSpec::laboratory(R("29/10"), 3);
    const auto self = exact_common_points(lab, lab, 2);
    // (1), (2), (1,2), (2,1), 1,(2), 2,(1)
    CHECK(self.size() == 6);
    for (const auto& c : self) {
        CHECK(lab.point(c.omega_a) == c.value);
        CHECK(lab.point(c.omega_b) == c.value);
    }
    for (std::size_t i = 0; i + 1 < self.size(); ++i) CHECK(self[i].value < self[i + 1].value);
    CHECK(exact_common_points(r_beta_spec(R("29/10"), 3), s_tilde_spec(R("29/10"), 3), 6).empty());
}

TEST_CASE("witness report json") {
    const auto r = find_witness(R("29/10"), 2);
    const Json j = to_json(r);
    CHECK(j["alpha"].is_array());
    CHECK(j["alpha"][0][0] == "119/290");
    CHECK(j["beta"] == "29/10");
    CHECK(j["ell"] == 3);
    CHECK(j["certified"] == false);
    CHECK(j["k_u"].contains("verdict"));
    const auto w = verify_witness(R("10/29"), R("29/10"), S("(1)"), std::nullopt, 10);
    const Json k = to_json(w);
    CHECK(k["alpha"] == "10/29");
    CHECK(k["omega_r"] == "(1)");
    CHECK(k["omega_s"].is_null());
    CHECK(k["u"] == "0,(1)");
    for (const auto& id : k["identities"]) CHECK(Rational::parse(id["residual"].get<std::string>()).sign() == 0);
}

TEST_CASE("dimension bounds") {
    const DimBound ten = dim_lower_bound(10);
    const double expect = 1 + std::log(2.0) / std::log(3.0);
    CHECK(std::abs(ten.product.to_double(Round::Down) - expect) < 1e-12);
    CHECK(ten.fiber.to_string(30, Round::Down) == "0.630929753571457437099527114342");
    CHECK(dim_lower_bound(3).product.to_string(7, Round::Down) == "1.440227");
    CHECK(dim_lower_bound(315).product >= Real(Rational(19, 10), Round::Up));
    CHECK(dim_lower_bound(314).product < Real(Rational(19, 10), Round::Down));
    Real prev = dim_lower_bound(3).product;
    for (long ell = 4; ell <= 400; ++ell) {
        Real cur = dim_lower_bound(ell).product;
        CHECK(prev < cur);
        CHECK(cur < Real(2));
        prev = cur;
    }
    for (long ell = 10; ell <= 1000000; ell *= 10) {
        // the bound through the thickness chain (1/2) sqrt(tau) with tau = (ell - 2)/2
        const DimBound at = dim_lower_bound_at(Rational(ell - 2, 2));
        CHECK(at.product.to_string(25, Round::Down) == dim_lower_bound(ell).product.to_string(25, Round::Down));
    }
    CHECK_THROWS_AS(dim_lower_bound(2), InvalidInput);
    CHECK_THROWS_AS(dim_lower_bound_at(R("0")), InvalidInput);
}
