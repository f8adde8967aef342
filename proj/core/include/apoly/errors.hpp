#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace apoly {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical precondition of an operation was violated by its input.
class MathError : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomial : public MathError {
 public:
  explicit ZeroPolynomial(const std::string& where)
      : MathError(where + ": polynomial is zero") {}
};

class InvalidVarName : public MathError {
 public:
  explicit InvalidVarName(const std::string& name)
      : MathError("invalid variable name '" + name + "'") {}
};

class UnassignedVariable : public MathError {
 public:
  explicit UnassignedVariable(const std::string& var)
      : MathError("no substitution given for variable '" + var + "'") {}
};

class NegativeExponentAtZero : public MathError {
 public:
  explicit NegativeExponentAtZero(const std::string& var)
      : MathError("cannot set '" + var + "' to 0: it occurs with a negative exponent") {}
};

class NonIntegralSpecialization : public MathError {
 public:
  explicit NonIntegralSpecialization(const std::string& var)
      : MathError("specializing '" + var +
                  "' would produce non-integer coefficients (negative exponent)") {}
};

class ZeroDivisor : public MathError {
 public:
  ZeroDivisor() : MathError("division by the zero polynomial") {}
};

class TermLimitExceeded : public MathError {
 public:
  TermLimitExceeded(std::size_t terms, std::size_t limit)
      : MathError("polynomial with " + std::to_string(terms) + " terms exceeds the limit of " +
                  std::to_string(limit)) {}
};

class WrongArity : public MathError {
 public:
  using MathError::MathError;
};

class DegeneratePolygon : public MathError {
 public:
  DegeneratePolygon() : MathError("Newton polygon is a single point and has no edges") {}
};

class NotCoprime : public MathError {
 public:
  NotCoprime(long long p, long long q)
      : MathError("slope " + std::to_string(p) + "/" + std::to_string(q) +
                  " is not in lowest terms") {}
};

class SlopeMismatch : public MathError {
 public:
  using MathError::MathError;
};

class NotAnEdge : public MathError {
 public:
  using MathError::MathError;
};

class LaurentInEliminationVar : public MathError {
 public:
  explicit LaurentInEliminationVar(const std::string& var)
      : MathError("'" + var + "' occurs with a negative exponent; clear it before eliminating") {}
};

class BothConstant : public MathError {
 public:
  explicit BothConstant(const std::string& var)
      : MathError("neither polynomial involves '" + var + "'") {}
};

class TooLarge : public MathError {
 public:
  using MathError::MathError;
};

class InvalidGluing : public MathError {
 public:
  using MathError::MathError;
};

class InvalidArgument : public MathError {
 public:
  using MathError::MathError;
};

class NonConvergence : public MathError {
 public:
  using MathError::MathError;
};

/// An exact division inside fraction-free elimination left a remainder.
/// This is an internal invariant failure, never a property of the input.
class InexactDivision : public Error {
 public:
  InexactDivision() : Error("inexact division during fraction-free elimination") {}
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace apoly
