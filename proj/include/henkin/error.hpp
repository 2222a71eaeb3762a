#pragma once

#include <stdexcept>
#include <string>

namespace henkin {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A permutation or atom that would leave the sort-preserving group.
class SortError : public Error {
 public:
  using Error::Error;
};

class ArityError : public Error {
 public:
  using Error::Error;
};

/// Raised when a fresh atom is requested from an exhausted finite domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class UnboundVariable : public Error {
 public:
  using Error::Error;
};

/// The antecedent of a choice axiom does not hold under the given assignment.
class AntecedentError : public Error {
 public:
  using Error::Error;
};

/// A second-order witness search ran out of budget.
class WitnessExhausted : public Error {
 public:
  using Error::Error;
};

/// An invariant the construction guarantees was observed broken.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace henkin
