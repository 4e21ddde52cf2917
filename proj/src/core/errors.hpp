#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace readk {

/// Input text does not conform to the formula grammar.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg), position_(position) {}

  /// 1-based character position of the offending token.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A configured limit (term count, candidate count, wall clock) was exceeded.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation's stated precondition does not hold for the given inputs.
/// Carries a witness (typically the offending term) when one exists.
class PreconditionFailed : public std::runtime_error {
 public:
  explicit PreconditionFailed(const std::string& msg, std::string witness = {})
      : std::runtime_error(msg), witness_(std::move(witness)) {}

  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace readk
