#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace abshift {

using Digit = int;
using Word = std::vector<Digit>;

/*
 * A digit sequence over {0,...,ell}: either a finite prefix (empty period) or
 * an eventually periodic sequence preperiod·(period)^inf.
 *
 * Eventually periodic sequences are canonical: the period is primitive and
 * the preperiod is as short as possible, so two canonical sequences denote
 * the same infinite word iff they compare equal memberwise.
 *
 * Text form: comma-separated digits with the period in parentheses, e.g.
 * "0,(1)" for 0·1^inf, "(1,0)" for (10)^inf, "1,1,0" for a finite prefix.
 */
class SymbolSeq {
public:
    SymbolSeq() = default;

    static SymbolSeq prefix(Word digits);
    static SymbolSeq periodic(Word preperiod, Word period);
    static SymbolSeq parse(std::string_view text);

    bool is_periodic() const { return !period_.empty(); }
    bool is_prefix() const { return period_.empty(); }

    const Word& preperiod() const { return pre_; }
    const Word& period() const { return period_; }

    /// Number of available digits: the prefix length, or npos for infinite sequences.
    std::size_t available() const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    /// Zero-based digit access; throws InvalidInput past the end of a prefix.
    Digit at(std::size_t i) const;
    Word take(std::size_t n) const;

    /// sigma^k applied to the sequence.
    SymbolSeq shifted(std::size_t k) const;

    /// The symbols occurring in sigma^k of the sequence (exact for periodic input).
    std::set<Digit> symbols_from(std::size_t k) const;

    Digit max_digit() const;
    Digit min_digit() const;

    std::string str() const;

    friend bool operator==(const SymbolSeq&, const SymbolSeq&) = default;

private:
    SymbolSeq(Word pre, Word period) : pre_(std::move(pre)), period_(std::move(period)) {}

    Word pre_;
    Word period_;
};

std::string word_str(const Word& w);

}  // namespace abshift
