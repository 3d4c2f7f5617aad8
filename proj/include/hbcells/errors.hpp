#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hbcells {

// Caller violated an operation's precondition (bad arguments, mismatched
// variable counts, malformed input). The CLI maps these to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Text that failed to parse; `position` is a 0-based byte offset.
class ParseError : public UsageError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : UsageError(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Well-formed input that violates a mathematical requirement: infinite
// colength, inadmissible Hilbert function, division by zero. Exit code 1.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DivisionByZero : public DomainError {
 public:
  DivisionByZero() : DomainError("division by zero") {}
};

// A cell matrix whose entries break the T0 shape (nonzero above the
// diagonal, or an entry of degree >= d_j).
class StructuralError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace hbcells
