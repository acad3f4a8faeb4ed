#pragma once

#include <stdexcept>
#include <string>

namespace hilbk {

/// A rational function has a pole at q = 1 where a finite value was required.
struct PoleAtOne : std::domain_error {
    explicit PoleAtOne(const std::string& what) : std::domain_error(what) {}
};

/// A rational function has a pole at t = 1 where a finite value was required.
struct PoleAtTOne : std::domain_error {
    explicit PoleAtTOne(const std::string& what) : std::domain_error(what) {}
};

/// A truncated Laurent series was asked for a coefficient beyond its
/// truncation order.
struct TruncationExceeded : std::domain_error {
    explicit TruncationExceeded(const std::string& what) : std::domain_error(what) {}
};

/// A basis expansion hit a singular system.  Valid bases never trigger this;
/// it indicates an internal failure.
struct SingularSystem : std::logic_error {
    explicit SingularSystem(const std::string& what) : std::logic_error(what) {}
};

/// Expression text failed to parse.  `position` is a 0-based offset into the
/// input string.
struct SyntaxError : std::runtime_error {
    std::size_t position;
    SyntaxError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

/// A partition literal was rejected (non-positive part, or unsorted parts in
/// strict mode).
struct InvalidPartition : std::runtime_error {
    explicit InvalidPartition(const std::string& what) : std::runtime_error(what) {}
};

/// A structurally valid expression cannot be evaluated as requested
/// (division by a non-scalar, an operand outside the operator's scalar
/// field, a non-homogeneous input where a graded one is required).
struct EvalError : std::runtime_error {
    explicit EvalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hilbk
