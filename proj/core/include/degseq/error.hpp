#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace degseq {

/// Malformed sequence text. `position` is the 0-based byte offset of the
/// offending character in the input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An operation was handed an input outside its domain.
class PreconditionError : public std::invalid_argument {
 public:
  enum class Kind {
    not_graphic,
    zero_terms,
    too_short,
    too_large,
    out_of_range,
    unsupported_pattern,
  };

  PreconditionError(Kind kind, const std::string& message)
      : std::invalid_argument(message), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// A realization search ran out of its node or time budget before it could
/// reach a verdict. Never a "no".
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace degseq
