#pragma once

#include <stdexcept>
#include <string>

namespace abshift {

/// Malformed or out-of-range input (bad parameters, digits, text formats).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parameters outside the regime where a certified answer is defined,
/// e.g. the specification criterion requires beta > 2.
class UnsupportedRegime : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A bounded search ended without a result (refinement died out).
class SearchFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configured resource cap (interval count, orbit states) was exceeded.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace abshift
