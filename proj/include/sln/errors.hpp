#ifndef SLN_ERRORS_HPP
#define SLN_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace sln {

/// Base class for all library errors. Anything deriving from Error (and not
/// from one of the more specific classes below) is a precondition violation.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input text (scalar, matrix JSON, field spec).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class FieldMismatch : public Error {
 public:
  explicit FieldMismatch(const std::string& msg = "operands belong to different fields")
      : Error(msg) {}
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& msg = "matrix dimensions do not match")
      : Error(msg) {}
};

class SingularMatrix : public Error {
 public:
  SingularMatrix() : Error("matrix is not invertible") {}
};

class EmptyGenerators : public Error {
 public:
  EmptyGenerators() : Error("generator list is empty") {}
};

class NotTraceless : public Error {
 public:
  NotTraceless() : Error("generators must be traceless") {}
};

class NotDiagonal : public Error {
 public:
  NotDiagonal() : Error("matrix is not diagonal") {}
};

class RepeatedOrZeroDiagonal : public Error {
 public:
  RepeatedOrZeroDiagonal()
      : Error("diagonal entries must be pairwise distinct and nonzero") {}
};

/// The diagonal splitting produces a rank-one summand whose trace equals the
/// trace of the input, so a zero trace is required for it to be nilpotent.
class NonzeroTrace : public Error {
 public:
  NonzeroTrace() : Error("diagonal matrix must have zero trace") {}
};

class NotRankOneNilpotent : public Error {
 public:
  NotRankOneNilpotent() : Error("matrix is not a rank-one nilpotent") {}
};

class NotNilpotent : public Error {
 public:
  NotNilpotent() : Error("matrix is not nilpotent") {}
};

class ZeroMatrix : public Error {
 public:
  ZeroMatrix() : Error("nonzero nilpotent required") {}
};

class CharacteristicTwo : public Error {
 public:
  CharacteristicTwo() : Error("field of characteristic 2 is not supported here") {}
};

class NoConsistentSet : public Error {
 public:
  explicit NoConsistentSet(const std::string& msg) : Error(msg) {}
};

class ZeroScalingFactor : public Error {
 public:
  ZeroScalingFactor() : Error("scaling factors must be nonzero") {}
};

/// Randomized search ran out of attempts.
class BudgetExhausted : public Error {
 public:
  explicit BudgetExhausted(const std::string& msg) : Error(msg) {}
};

/// A named condition of one of the example constructions failed.
/// `failed` holds the 1-based indices of every violated condition.
class ConditionsViolated : public Error {
 public:
  ConditionsViolated(const std::string& msg, std::vector<int> failed_indices)
      : Error(msg), failed(std::move(failed_indices)) {}
  std::vector<int> failed;
};

/// An assertion inside a gallery reproduction did not hold.
class GalleryCheckFailed : public Error {
 public:
  explicit GalleryCheckFailed(const std::string& msg) : Error(msg) {}
};

}  // namespace sln

#endif  // SLN_ERRORS_HPP
