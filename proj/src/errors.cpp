#include "crown/errors.hpp"

namespace crown {

const char* error_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::UnsupportedType: return "UnsupportedType";
    case ErrorKind::NotExtremal: return "NotExtremal";
    case ErrorKind::MalformedGraph: return "MalformedGraph";
    case ErrorKind::UnsupportedPair: return "UnsupportedPair";
    case ErrorKind::AmbiguousComponent: return "AmbiguousComponent";
    case ErrorKind::UnsupportedLabel: return "UnsupportedLabel";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::MissingExceptionalData: return "MissingExceptionalData";
    case ErrorKind::OutsideCone: return "OutsideCone";
    case ErrorKind::NonReducedSystem: return "NonReducedSystem";
    case ErrorKind::InvalidPeriod: return "InvalidPeriod";
    case ErrorKind::ChartBoundary: return "ChartBoundary";
    case ErrorKind::QuadratureFailure: return "QuadratureFailure";
    case ErrorKind::ConnectionFormulaFailure: return "ConnectionFormulaFailure";
    case ErrorKind::SeriesDivergence: return "SeriesDivergence";
    case ErrorKind::TruncationFailure: return "TruncationFailure";
    case ErrorKind::PoleProximity: return "PoleProximity";
    case ErrorKind::UnsupportedModel: return "UnsupportedModel";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}

}  // namespace crown
