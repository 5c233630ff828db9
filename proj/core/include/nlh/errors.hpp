#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nlh {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A symbol that is not part of the alphabet in use.
class SymbolError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. `position()` is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Reduction did not terminate within the allowed number of steps.
class ReductionBudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A construction produced a leading word different from the one the
/// ordering convention predicts.
class OrderingConflict : public Error {
 public:
  using Error::Error;
};

/// Structurally invalid algebra description (file or in-memory).
class SpecError : public Error {
 public:
  using Error::Error;
};

}  // namespace nlh
