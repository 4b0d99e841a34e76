#include "abshift/shiftspace.hpp"

#include "abshift/error.hpp"

#include <algorithm>
#include <numeric>

namespace abshift {

std::strong_ordering lex_cmp(const SymbolSeq& a, const SymbolSeq& b) {
    std::size_t n;
    if (a.is_periodic() && b.is_periodic()) {
        n = std::max(a.preperiod().size(), b.preperiod().size()) + std::lcm(a.period().size(), b.period().size());
    } else {
        n = std::min(a.available(), b.available());
    }
    for (std::size_t i = 0; i < n; ++i) {
        Digit x = a.at(i), y = b.at(i);
        if (x != y) return x < y ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (a.is_periodic() && b.is_periodic()) return std::strong_ordering::equal;
    if (a.is_prefix() && b.is_prefix() && a.available() == b.available()) return std::strong_ordering::equal;
    throw InvalidInput("incomparable sequences: " + a.str() + " vs " + b.str());
}

namespace {

// Compares s = w[from..] with the critical sequence over the symbols both provide.
// Returns the sign of the first difference; sets `undecided` when s outruns the
// known part of the critical sequence without a difference.
int compare_suffix(const Word& w, std::size_t from, const SymbolSeq& crit, std::size_t depth, bool& undecided) {
    const std::size_t len = w.size() - from;
    const std::size_t known = crit.is_periodic() ? len : std::min(depth, crit.available());
    const std::size_t k = std::min(len, known);
    for (std::size_t i = 0; i < k; ++i) {
        Digit x = w[from + i], y = crit.at(i);
        if (x != y) return x < y ? -1 : 1;
    }
    if (len > known) undecided = true;
    return 0;
}

std::vector<std::size_t> z_function(const std::vector<int>& s) {
    const std::size_t n = s.size();
    std::vector<std::size_t> z(n, 0);
    std::size_t l = 0, r = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (i < r) z[i] = std::min(r - i, z[i - l]);
        while (i + z[i] < n && s[z[i]] == s[i + z[i]]) ++z[i];
        if (i + z[i] > r) {
            l = i;
            r = i + z[i];
        }
    }
    return z;
}

// Longest common prefix of `pattern` and sigma^j(scanned), both periodic or
// pattern a finite prefix; capped at `cap`.
std::size_t common_prefix(const SymbolSeq& pattern, const SymbolSeq& scanned, std::size_t j, std::size_t cap) {
    std::size_t k = 0;
    while (k < cap && pattern.at(k) == scanned.at(j + k)) ++k;
    return k;
}

void certify(KReport& r, const SymbolSeq& pattern, const SymbolSeq& scanned) {
    // Offsets j >= 1 realise at most pre + per distinct tails of `scanned`.
    const std::size_t classes = scanned.preperiod().size() + scanned.period().size();
    std::size_t cap;
    if (pattern.is_periodic()) {
        cap = std::max(pattern.preperiod().size(), scanned.preperiod().size()) +
              std::lcm(pattern.period().size(), scanned.period().size());
    } else {
        cap = pattern.available();
    }
    std::size_t longest = 0;
    for (std::size_t j = 1; j <= classes; ++j) {
        std::size_t k = common_prefix(pattern, scanned, j, cap);
        if (k == cap) {
            // periodic pattern: equal through the decision bound means equal forever
            r.verdict = pattern.is_periodic() ? KVerdict::InfiniteCertified : KVerdict::Unknown;
            return;
        }
        longest = std::max(longest, k);
    }
    r.certified_max = longest;
    r.verdict = longest == 0 ? KVerdict::EmptyCertified : KVerdict::FiniteCertified;
}

}  // namespace

Admissibility admissible(const SymbolSeq& u, const SymbolSeq& v, const Word& w, std::size_t depth) {
    bool undecided = false;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (compare_suffix(w, i, u, depth, undecided) < 0) return Admissibility::No;
        if (compare_suffix(w, i, v, depth, undecided) > 0) return Admissibility::No;
    }
    return undecided ? Admissibility::Unknown : Admissibility::Yes;
}

Admissibility admissible(const Params& p, const Word& w, std::size_t depth) {
    for (Digit d : w)
        if (d < 0 || d > p.ell()) throw InvalidInput("digit outside 0..ell in word " + word_str(w));
    if (depth == 0) throw InvalidInput("admissibility depth must be positive");
    const SymbolSeq u = zero_critical(p, depth).sequence();
    const SymbolSeq v = left_limit_critical(p, depth).sequence();
    return admissible(u, v, w, depth);
}

KReport k_set(const SymbolSeq& pattern, const SymbolSeq& scanned, std::size_t n_max, std::size_t j_max) {
    if (n_max == 0 || j_max == 0) throw InvalidInput("k_set needs n_max, j_max >= 1");
    if (pattern.available() < n_max) throw InvalidInput("insufficient digits in pattern sequence");
    if (scanned.available() < n_max + j_max) throw InvalidInput("insufficient digits in scanned sequence");

    // Z-function over pattern[0..n_max) # scanned[1..j_max+n_max): z at offset j
    // is the common prefix length of the pattern and sigma^j(scanned).
    std::vector<int> s;
    s.reserve(2 * n_max + j_max);
    for (std::size_t i = 0; i < n_max; ++i) s.push_back(pattern.at(i));
    s.push_back(-1);
    for (std::size_t i = 1; i < j_max + n_max; ++i) s.push_back(scanned.at(i));
    const auto z = z_function(s);

    KReport r;
    r.depth = n_max;
    r.offsets = j_max;
    std::size_t reach = 0;
    for (std::size_t j = 1; j <= j_max; ++j) {
        std::size_t len = std::min(z[n_max + j], n_max);
        for (std::size_t n = reach + 1; n <= len; ++n) r.found.push_back({n, j});
        reach = std::max(reach, len);
    }
    if (scanned.is_periodic()) certify(r, pattern, scanned);
    return r;
}

KSets k_sets(const SymbolSeq& u, const SymbolSeq& v, std::size_t n_max, std::size_t j_max) {
    return {k_set(v, u, n_max, j_max), k_set(u, v, n_max, j_max)};
}

std::pair<bool, bool> alphabet_certificate(const SymbolSeq& u, const SymbolSeq& v) {
    if (!u.is_periodic() || !v.is_periodic())
        throw InvalidInput("alphabet certificate needs eventually periodic sequences");
    const auto tail_u = u.symbols_from(1);
    const auto tail_v = v.symbols_from(1);
    return {tail_u.count(v.at(0)) == 0, tail_v.count(u.at(0)) == 0};
}

SpecReport spec_check_sequences(const SymbolSeq& u, const SymbolSeq& v, std::size_t depth) {
    if (depth == 0) throw InvalidInput("spec_check depth must be positive");
    SpecReport r;
    r.depth = depth;
    r.u = u;
    r.v = v;
    auto ks = k_sets(u, v, depth, 4 * depth);
    r.k_u = std::move(ks.k_u);
    r.k_v = std::move(ks.k_v);
    if (r.k_u.certified_finite() && r.k_v.certified_finite()) {
        r.verdict = SpecVerdict::SpecCertified;
        r.certificate = "K(u) = {1.." + std::to_string(*r.k_u.certified_max) + "}, K(v) = {1.." +
                        std::to_string(*r.k_v.certified_max) + "} (exact)";
        return r;
    }
    for (const KReport* k : {&r.k_u, &r.k_v}) {
        if (k->certified_finite()) continue;
        const bool grows = k->verdict == KVerdict::InfiniteCertified || 2 * k->max_found() > depth;
        if (grows) {
            r.growing_k = true;
            r.growth_n = std::max(r.growth_n, k->max_found());
        }
    }
    r.verdict = r.growing_k ? SpecVerdict::Unknown : SpecVerdict::SpecLikely;
    return r;
}

SpecReport spec_check(const Params& p, std::size_t depth, std::size_t state_cap) {
    if (depth == 0) throw InvalidInput("spec_check depth must be positive");
    const std::size_t len = 5 * depth;
    SymbolSeq u = zero_critical(p, len, state_cap).sequence();
    SymbolSeq v = left_limit_critical(p, len, state_cap).sequence();
    if (p.beta() <= Rational(2)) {
        // u = 0^inf and v = d^inf: every sequence over {0..d} is admissible
        if (u == SymbolSeq::periodic({}, {0}) && v.is_periodic() && v.preperiod().empty() &&
            v.period().size() == 1) {
            SpecReport r;
            r.verdict = SpecVerdict::SpecCertified;
            r.depth = depth;
            auto ks = k_sets(u, v, depth, 4 * depth);
            r.k_u = std::move(ks.k_u);
            r.k_v = std::move(ks.k_v);
            r.u = std::move(u);
            r.v = std::move(v);
            r.certificate = "full shift on {0.." + std::to_string(r.v.at(0)) + "}";
            return r;
        }
        throw UnsupportedRegime("certified specification check needs beta > 2, got " + p.beta().str());
    }
    return spec_check_sequences(u, v, depth);
}

std::string to_string(KVerdict v) {
    switch (v) {
        case KVerdict::EmptyCertified: return "EMPTY_CERTIFIED";
        case KVerdict::FiniteCertified: return "FINITE_CERTIFIED";
        case KVerdict::Unknown: return "UNKNOWN";
        case KVerdict::InfiniteCertified: return "INFINITE_CERTIFIED";
    }
    return "UNKNOWN";
}

std::string to_string(SpecVerdict v) {
    switch (v) {
        case SpecVerdict::SpecCertified: return "SPEC_CERTIFIED";
        case SpecVerdict::SpecLikely: return "SPEC_LIKELY";
        case SpecVerdict::Unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
}

std::string to_string(Admissibility a) {
    switch (a) {
        case Admissibility::Yes: return "yes";
        case Admissibility::No: return "no";
        case Admissibility::Unknown: return "unknown";
    }
    return "unknown";
}

}  // namespace abshift
