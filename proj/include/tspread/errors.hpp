#pragma once

#include <stdexcept>
#include <string>

namespace tspread {

/// Raised when an argument violates a documented precondition. The name of
/// the violated invariant is kept separately so front ends can report it.
class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(std::string invariant, const std::string& detail)
      : std::invalid_argument(invariant + ": " + detail),
        invariant_(std::move(invariant)) {}

  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

/// Raised when two independent computations that must agree do not.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tspread
