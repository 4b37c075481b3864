#pragma once

#include <stdexcept>
#include <string>

namespace isetlab {

/// Invalid (n, k, t, ...) combination or malformed input.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called on an input that breaks its documented precondition
/// (wrong uniformity, not t-intersecting, lemma hypotheses not met, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Enumeration refused because the instance exceeds the configured vertex budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace isetlab
