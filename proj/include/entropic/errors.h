#pragma once

#include <stdexcept>
#include <string>

namespace entropic {

// Input violates a type invariant (normalization, positivity, hermiticity, ...).
class ValidationError : public std::invalid_argument {
   public:
    explicit ValidationError(const std::string &what) : std::invalid_argument(what) {}
};

// Caller misuse: bad index sets, mismatched dimensions, wrong measurement kind.
class UsageError : public std::invalid_argument {
   public:
    explicit UsageError(const std::string &what) : std::invalid_argument(what) {}
};

// A numeric routine failed to converge or produced an inconsistent result.
class NumericError : public std::runtime_error {
   public:
    explicit NumericError(const std::string &what) : std::runtime_error(what) {}
};

}  // namespace entropic
