#pragma once

#include <stdexcept>
#include <string>

namespace liesplit {

enum class ErrorKind {
  NonPrime,
  DegreeOutOfRange,
  OrderUnavailable,
  FieldMismatch,
  GeneratorCountMismatch,
  DegreeMismatch,
  CapMismatch,
  DegreeOutOfCap,
  IndexOutOfRange,
  NotStable,
  IndexMismatch,
  NoAmbient,
  DimensionTooLarge,
  NotEquivariant,
  TrialBudgetExhausted,
  CapExceeded,
  NotCoalgebraMap,
  HypothesisViolated,
  NegativeGeneratorDim,
  DimensionMismatch,
  ParseError,
  Overflow,
};

const char* error_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace liesplit
