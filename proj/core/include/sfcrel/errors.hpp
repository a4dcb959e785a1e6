#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sfcrel {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation
/// (probability outside (0,1], negative backup count, zero subchains...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Arrival rate is not strictly below a stage's service rate.
class InstabilityError : public Error {
 public:
  using Error::Error;
};

/// Some request is larger than every node that could host it.
class UnplaceableError : public Error {
 public:
  using Error::Error;
};

/// The substrate cannot host the whole request set.
class CapacityExhaustedError : public Error {
 public:
  using Error::Error;
};

/// Exhaustive enumeration was asked for a structure that is too large.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Malformed scenario text. `line()` and `column()` are 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0,
             std::size_t column = 0)
      : Error(what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed input that violates one or more invariants; every violation
/// is listed, not only the first one found.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> problems);

  const std::vector<std::string>& problems() const noexcept {
    return problems_;
  }

 private:
  std::vector<std::string> problems_;
};

}  // namespace sfcrel
