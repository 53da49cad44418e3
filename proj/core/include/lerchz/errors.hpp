#pragma once

#include <stdexcept>
#include <string>

namespace lerchz {

// Base of all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed user input (rationals, complex numbers, character descriptors).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Evaluation at a pole, e.g. zeta(0, c, 1).
class PoleError : public Error {
 public:
  using Error::Error;
};

// Argument outside the domain of the requested route or operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Truncation or quadrature could not reach the requested accuracy within caps.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// Arithmetic failure such as division by a value whose bound contains zero.
class NumericError : public Error {
 public:
  using Error::Error;
};

// Enumeration larger than the configured cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Two independent routes disagree beyond their combined error bounds.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace lerchz
