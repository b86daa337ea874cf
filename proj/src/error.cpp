#include "liesplit/error.hpp"

namespace liesplit {

const char* error_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::NonPrime: return "NonPrime";
    case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorKind::OrderUnavailable: return "OrderUnavailable";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::GeneratorCountMismatch: return "GeneratorCountMismatch";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::CapMismatch: return "CapMismatch";
    case ErrorKind::DegreeOutOfCap: return "DegreeOutOfCap";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotStable: return "NotStable";
    case ErrorKind::IndexMismatch: return "IndexMismatch";
    case ErrorKind::NoAmbient: return "NoAmbient";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::NotEquivariant: return "NotEquivariant";
    case ErrorKind::TrialBudgetExhausted: return "TrialBudgetExhausted";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotCoalgebraMap: return "NotCoalgebraMap";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::NegativeGeneratorDim: return "NegativeGeneratorDim";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Overflow: return "Overflow";
  }
  return "Unknown";
}

}  // namespace liesplit
