#pragma once

#include <stdexcept>
#include <string>

namespace evencycles {

// Malformed input or a violated operation precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive routine refused to run because the input exceeds its size guard.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A theorem hypothesis does not hold for the given graph.
class HypothesisFailure : public std::runtime_error {
 public:
  HypothesisFailure(std::string hypothesis, const std::string& detail)
      : std::runtime_error(hypothesis + ": " + detail), hypothesis_(std::move(hypothesis)) {}

  const std::string& hypothesis() const noexcept { return hypothesis_; }

 private:
  std::string hypothesis_;
};

// An object that the construction guarantees to exist was not found. Always a bug.
class InternalInvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace evencycles
