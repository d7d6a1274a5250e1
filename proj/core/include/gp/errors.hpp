#pragma once

#include <stdexcept>
#include <string>

namespace gp {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class NotPrime : public Error {
 public:
  explicit NotPrime(long p) : Error("not a prime: " + std::to_string(p)) {}
};

class ReducibleModulus : public Error {
 public:
  explicit ReducibleModulus(const std::string& poly)
      : Error("modulus is reducible: " + poly) {}
};

class DegreeMismatch : public Error {
 public:
  DegreeMismatch(int expected, int got)
      : Error("modulus degree mismatch: expected " + std::to_string(expected) +
              ", got " + std::to_string(got)) {}
};

class LogOfZero : public Error {
 public:
  LogOfZero() : Error("discrete log of zero") {}
};

class NotADivisor : public Error {
 public:
  NotADivisor(long a, long b)
      : Error(std::to_string(a) + " does not divide " + std::to_string(b)) {}
};

class IncompatibleFields : public Error {
 public:
  explicit IncompatibleFields(const std::string& why)
      : Error("incompatible fields: " + why) {}
};

class FieldMismatch : public Error {
 public:
  FieldMismatch() : Error("graphs are defined over different fields") {}
};

class PreconditionViolated : public Error {
 public:
  explicit PreconditionViolated(const std::string& what)
      : Error("precondition violated: " + what) {}
};

class DirectedGraph : public Error {
 public:
  explicit DirectedGraph(const std::string& op)
      : Error(op + ": graph is directed") {}
};

class DirectedSpectrum : public Error {
 public:
  explicit DirectedSpectrum(const std::string& op)
      : Error(op + ": spectrum has non-real entries") {}
};

class DirectedInput : public Error {
 public:
  explicit DirectedInput(const std::string& op)
      : Error(op + ": directed input not supported") {}
};

class ParameterMismatch : public Error {
 public:
  explicit ParameterMismatch(const std::string& what)
      : Error("parameter mismatch: " + what) {}
};

class NonIntegralParameter : public Error {
 public:
  explicit NonIntegralParameter(const std::string& what)
      : Error("non-integral parameter: " + what) {}
};

class SizeCap : public Error {
 public:
  SizeCap(const std::string& op, long cap)
      : Error(op + ": size exceeds cap " + std::to_string(cap)) {}
};

class OrderCap : public SizeCap {
 public:
  explicit OrderCap(long cap) : SizeCap("numeric_eigenvalues", cap) {}
};

class ConvergenceFailure : public Error {
 public:
  explicit ConvergenceFailure(const std::string& what)
      : Error("eigensolver failed to converge: " + what) {}
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(long requested, long budget)
      : Error("sweep budget exceeded: requested " + std::to_string(requested) +
              " > budget " + std::to_string(budget)) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error("i/o error: " + what) {}
};

/// Raised when a structural fact that the library is supposed to guarantee
/// fails to verify against an independent check. This always indicates a bug
/// in the implementation, never an input error.
class InternalTheoremViolation : public Error {
 public:
  explicit InternalTheoremViolation(const std::string& what)
      : Error("internal theorem violation: " + what) {}
};

}  // namespace gp
