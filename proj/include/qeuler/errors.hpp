#pragma once

#include <stdexcept>
#include <string>

namespace qeuler {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
  using Error::Error;
};

// Evaluation of a rational function at a root of its denominator.
class PoleError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// Two routes that must agree did not. Always an implementation bug.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

// A p-adic quantity has no known digits left.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

class CostCapExceeded : public Error {
 public:
  using Error::Error;
};

class ConvergenceNotReached : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace qeuler
