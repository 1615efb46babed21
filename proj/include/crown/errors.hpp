#pragma once

#include <stdexcept>
#include <string>

namespace crown {

enum class ErrorKind {
  UnsupportedType,
  NotExtremal,
  MalformedGraph,
  UnsupportedPair,
  AmbiguousComponent,
  UnsupportedLabel,
  TooLarge,
  MissingExceptionalData,
  OutsideCone,
  NonReducedSystem,
  InvalidPeriod,
  ChartBoundary,
  QuadratureFailure,
  ConnectionFormulaFailure,
  SeriesDivergence,
  TruncationFailure,
  PoleProximity,
  UnsupportedModel,
};

const char* error_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace crown
