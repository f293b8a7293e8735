#include "steenrod/errors.hpp"

namespace steenrod {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::VarietyMismatch: return "VarietyMismatch";
    case ErrorKind::InvalidVariety: return "InvalidVariety";
    case ErrorKind::EvenDimensionUnsupported: return "EvenDimensionUnsupported";
    case ErrorKind::UnknownKind: return "UnknownKind";
    case ErrorKind::IncompatibleDimensions: return "IncompatibleDimensions";
    case ErrorKind::InvalidMorphism: return "InvalidMorphism";
    case ErrorKind::FlagViolation: return "FlagViolation";
    case ErrorKind::NonInvertibleSeries: return "NonInvertibleSeries";
    case ErrorKind::IntegralityViolation: return "IntegralityViolation";
    case ErrorKind::NonIntegralInput: return "NonIntegralInput";
    case ErrorKind::ZeroClass: return "ZeroClass";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::LevelViolation: return "LevelViolation";
    case ErrorKind::DecompositionFailure: return "DecompositionFailure";
    case ErrorKind::ExtractionFailure: return "ExtractionFailure";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

bool Error::is_internal() const noexcept {
  return kind_ == ErrorKind::DecompositionFailure || kind_ == ErrorKind::ExtractionFailure;
}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace steenrod
