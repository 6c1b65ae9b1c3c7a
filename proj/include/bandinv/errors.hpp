#pragma once

#include <stdexcept>
#include <string>

namespace bandinv {

/// Violation of an operation's input contract: bad shapes, out-of-range
/// parameters, malformed files. Maps to CLI exit code 1.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Mathematical refusal: the data fails a construction's hypotheses
/// (not SPD, singular, truncation too coarse, ...). Maps to CLI exit code 2.
class MathError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Band truncation too coarse for an admissible certificate. Carries the
/// minimal half-bandwidth found admissible by scanning upward.
class TruncationError : public MathError {
public:
    TruncationError(const std::string& msg, int min_admissible_k)
        : MathError(msg), min_admissible_k_(min_admissible_k) {}

    int min_admissible_k() const noexcept { return min_admissible_k_; }

private:
    int min_admissible_k_;
};

/// Cross-block eigenvalue at or above 1: the joint covariance is singular
/// (deterministic dependence between the blocks).
class DegeneracyError : public MathError {
public:
    using MathError::MathError;
};

}  // namespace bandinv
