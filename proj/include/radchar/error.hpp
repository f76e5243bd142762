#pragma once

#include <stdexcept>
#include <string>

namespace radchar {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad parameters or inputs supplied by a caller (CLI exit code 2).
class ParamError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration would exceed its configured size budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// Arithmetic failure: zero divisor, non-exact polynomial division.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

}  // namespace radchar
