#pragma once

#include <stdexcept>
#include <string>

namespace cyclicpic {

// Base class for all domain errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A half-integer exponent surfaced where the class calculus guarantees an integer.
class IntegralityViolation : public Error {
 public:
  using Error::Error;
};

// (n, k) lies outside the range where the regime's exponent formula is known.
class OutOfFormulaRange : public Error {
 public:
  using Error::Error;
};

class UnsupportedRegime : public Error {
 public:
  using Error::Error;
};

class RegimeMismatch : public Error {
 public:
  using Error::Error;
};

// d is non-integral or negative: there are no covers of type (h, g, n).
class EmptyModuli : public Error {
 public:
  using Error::Error;
};

// d = 0 outside (1,1,2), or nd <= 2g-2: the quotient description is unavailable.
class UnsupportedCase : public Error {
 public:
  using Error::Error;
};

class NotPurePower : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace cyclicpic
