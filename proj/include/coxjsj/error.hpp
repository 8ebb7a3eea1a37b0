#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coxjsj {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed ".cox" or JSON input. line() is 1-based, 0 when not applicable.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// An exploration (orbit search) hit its configured node budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A brute-force or enumeration bound was exceeded. The result is
/// inconclusive; in particular it is not a proof that a group is infinite.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace coxjsj
