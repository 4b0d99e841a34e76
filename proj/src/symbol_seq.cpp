#include "abshift/symbol_seq.hpp"

#include "abshift/error.hpp"

#include <algorithm>
#include <cctype>

namespace abshift {

namespace {

std::size_t primitive_length(const Word& w) {
    const std::size_t n = w.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool ok = true;
        for (std::size_t i = d; i < n && ok; ++i) ok = w[i] == w[i - d];
        if (ok) return d;
    }
    return n;
}

Word parse_digits(std::string_view text) {
    Word out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ',' || std::isspace(static_cast<unsigned char>(text[i])))) ++i;
        if (i == text.size()) break;
        std::size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == i) throw InvalidInput("bad digit in sequence: '" + std::string(text) + "'");
        out.push_back(std::stoi(std::string(text.substr(i, j - i))));
        i = j;
    }
    return out;
}

}  // namespace

SymbolSeq SymbolSeq::prefix(Word digits) {
    for (Digit d : digits)
        if (d < 0) throw InvalidInput("negative digit");
    return SymbolSeq(std::move(digits), {});
}

SymbolSeq SymbolSeq::periodic(Word preperiod, Word period) {
    if (period.empty()) throw InvalidInput("periodic sequence needs a nonempty period");
    for (Digit d : preperiod)
        if (d < 0) throw InvalidInput("negative digit");
    for (Digit d : period)
        if (d < 0) throw InvalidInput("negative digit");
    period.resize(primitive_length(period));
    while (!preperiod.empty() && preperiod.back() == period.back()) {
        preperiod.pop_back();
        std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
    }
    return SymbolSeq(std::move(preperiod), std::move(period));
}

SymbolSeq SymbolSeq::parse(std::string_view text) {
    auto open = text.find('(');
    if (open == std::string_view::npos) {
        if (text.find(')') != std::string_view::npos) throw InvalidInput("unbalanced ')' in sequence");
        return prefix(parse_digits(text));
    }
    auto close = text.find(')', open);
    if (close == std::string_view::npos) throw InvalidInput("unbalanced '(' in sequence");
    auto rest = text.substr(close + 1);
    if (rest.find_first_not_of(" \t") != std::string_view::npos)
        throw InvalidInput("trailing text after period: '" + std::string(text) + "'");
    return periodic(parse_digits(text.substr(0, open)), parse_digits(text.substr(open + 1, close - open - 1)));
}

std::size_t SymbolSeq::available() const { return is_periodic() ? npos : pre_.size(); }

Digit SymbolSeq::at(std::size_t i) const {
    if (i < pre_.size()) return pre_[i];
    if (period_.empty()) throw InvalidInput("index past the end of a finite prefix");
    return period_[(i - pre_.size()) % period_.size()];
}

Word SymbolSeq::take(std::size_t n) const {
    if (is_prefix() && n > pre_.size()) throw InvalidInput("prefix too short");
    Word out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(at(i));
    return out;
}

SymbolSeq SymbolSeq::shifted(std::size_t k) const {
    if (is_prefix()) {
        if (k > pre_.size()) throw InvalidInput("shift past the end of a finite prefix");
        return SymbolSeq(Word(pre_.begin() + static_cast<std::ptrdiff_t>(k), pre_.end()), {});
    }
    if (k <= pre_.size()) return periodic(Word(pre_.begin() + static_cast<std::ptrdiff_t>(k), pre_.end()), period_);
    Word rot = period_;
    std::rotate(rot.begin(), rot.begin() + static_cast<std::ptrdiff_t>((k - pre_.size()) % rot.size()), rot.end());
    return periodic({}, std::move(rot));
}

std::set<Digit> SymbolSeq::symbols_from(std::size_t k) const {
    std::set<Digit> out;
    for (std::size_t i = k; i < pre_.size(); ++i) out.insert(pre_[i]);
    out.insert(period_.begin(), period_.end());
    return out;
}

Digit SymbolSeq::max_digit() const {
    Digit m = 0;
    for (Digit d : pre_) m = std::max(m, d);
    for (Digit d : period_) m = std::max(m, d);
    return m;
}

Digit SymbolSeq::min_digit() const {
    if (pre_.empty() && period_.empty()) throw InvalidInput("empty sequence");
    Digit m = pre_.empty() ? period_.front() : pre_.front();
    for (Digit d : pre_) m = std::min(m, d);
    for (Digit d : period_) m = std::min(m, d);
    return m;
}

std::string word_str(const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(w[i]);
    }
    return out;
}

std::string SymbolSeq::str() const {
    std::string out = word_str(pre_);
    if (is_periodic()) {
        if (!out.empty()) out += ',';
        out += "(" + word_str(period_) + ")";
    }
    return out;
}

}  // namespace abshift
