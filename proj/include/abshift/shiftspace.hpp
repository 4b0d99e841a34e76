#pragma once

/*
 * Lexicographic machinery on digit sequences: the order, admissibility in the
 * (alpha, beta)-shift (every shift of a word lies between u and v), the
 * obstruction sets
 *
 *   K(u) = { n : v[1..n] = u[1+j..n+j] for some j >= 1 },
 *   K(v) = { n : u[1..n] = v[1+j..n+j] for some j >= 1 },
 *
 * and the specification verdict built from them (for beta > 2 the shift has
 * specification iff both sets are finite).
 *
 * Each K-set is downward closed (a match of length n contains matches of
 * every shorter length), so a finite K-set is always {1, ..., M}.
 */

#include "abshift/dynamics.hpp"
#include "abshift/symbol_seq.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace abshift {

/// Exact lexicographic order. Eventually periodic inputs are decided within
/// max(preperiods) + lcm(periods) symbols. Prefixes are compared over their
/// common length; a tie there is incomparable and throws InvalidInput.
std::strong_ordering lex_cmp(const SymbolSeq& a, const SymbolSeq& b);

enum class Admissibility { Yes, No, Unknown };

/// Checks u <= sigma^i w <= v (as prefixes) for every shift of w, against
/// critical sequences known to `depth` digits (or exactly, when periodic).
/// Unknown when a suffix longer than the known critical prefix ties with it.
Admissibility admissible(const SymbolSeq& u, const SymbolSeq& v, const Word& w, std::size_t depth);
Admissibility admissible(const Params& p, const Word& w, std::size_t depth);

enum class KVerdict { EmptyCertified, FiniteCertified, Unknown, InfiniteCertified };

struct KMatch {
    std::size_t n;
    std::size_t j;  // smallest witnessing offset within the searched range
    friend bool operator==(const KMatch&, const KMatch&) = default;
};

struct KReport {
    std::vector<KMatch> found;  // ascending in n
    std::size_t depth = 0;      // n_max searched
    std::size_t offsets = 0;    // j_max searched
    KVerdict verdict = KVerdict::Unknown;
    /// For FiniteCertified/EmptyCertified: the exact set is {1..certified_max}.
    std::optional<std::size_t> certified_max;

    bool certified_finite() const {
        return verdict == KVerdict::EmptyCertified || verdict == KVerdict::FiniteCertified;
    }
    std::size_t max_found() const { return found.empty() ? 0 : found.back().n; }
};

/// { n <= n_max : pattern[1..n] = scanned[1+j..n+j] for some 1 <= j <= j_max },
/// upgraded to an exact verdict when `scanned` is eventually periodic.
KReport k_set(const SymbolSeq& pattern, const SymbolSeq& scanned, std::size_t n_max, std::size_t j_max);

struct KSets {
    KReport k_u;
    KReport k_v;
};

KSets k_sets(const SymbolSeq& u, const SymbolSeq& v, std::size_t n_max, std::size_t j_max);

/// (K(u) empty, K(v) empty), decided from symbol occurrence alone:
/// K(u) is empty iff v's first symbol never occurs in sigma(u).
std::pair<bool, bool> alphabet_certificate(const SymbolSeq& u, const SymbolSeq& v);

enum class SpecVerdict { SpecCertified, SpecLikely, Unknown };

struct SpecReport {
    SpecVerdict verdict = SpecVerdict::Unknown;
    std::size_t depth = 0;
    SymbolSeq u;
    SymbolSeq v;
    KReport k_u;
    KReport k_v;
    /// Some uncertified K-set still gains elements in the upper half of the depth range.
    bool growing_k = false;
    std::size_t growth_n = 0;
    std::string certificate;
};

/// Specification verdict for Sigma_{alpha,beta}. Requires beta > 2, except for
/// the full shift (u = 0^inf, v = ell^inf), which is certified directly.
/// Throws UnsupportedRegime otherwise.
SpecReport spec_check(const Params& p, std::size_t depth, std::size_t state_cap = kDefaultStateCap);

/// Same verdict logic on explicitly given critical sequences (no beta hypothesis check).
SpecReport spec_check_sequences(const SymbolSeq& u, const SymbolSeq& v, std::size_t depth);

std::string to_string(KVerdict v);
std::string to_string(SpecVerdict v);
std::string to_string(Admissibility a);

}  // namespace abshift
