#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace steenrod {

enum class ErrorKind {
  InvalidInput,
  NotPrime,
  UnknownLabel,
  VarietyMismatch,
  InvalidVariety,
  EvenDimensionUnsupported,
  UnknownKind,
  IncompatibleDimensions,
  InvalidMorphism,
  FlagViolation,
  NonInvertibleSeries,
  IntegralityViolation,
  NonIntegralInput,
  ZeroClass,
  DimensionMismatch,
  LevelViolation,
  DecompositionFailure,
  ExtractionFailure,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

  /// True for errors that signal a broken invariant of the construction
  /// rather than bad user input.
  bool is_internal() const noexcept;

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace steenrod
