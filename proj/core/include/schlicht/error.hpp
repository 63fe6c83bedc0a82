#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace schlicht {

enum class ErrorKind {
  DivisionBySingularSeries,
  CompositionRequiresVanishingConstant,
  BranchPointAtOrigin,
  NotNormalized,
  NotCaratheodoryNormalized,
  ConstantDenominatorZero,
  InvalidParameter,
  InvalidMeasure,
  OmittedValueAttained,
  OrderTooLow,
  EvaluationSingularity,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type for every domain failure; `kind()` lets callers
/// (and the CLI exit-code mapping) branch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace schlicht
