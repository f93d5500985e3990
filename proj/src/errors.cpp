#include "saga/errors.hpp"

namespace saga {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotRegularSequence: return "NotRegularSequence";
    case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorKind::NotAnnihilated: return "NotAnnihilated";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorKind::NotOnLocus: return "NotOnLocus";
    case ErrorKind::NotALineInN3: return "NotALineInN3";
    case ErrorKind::PlaneNotInLocus: return "PlaneNotInLocus";
    case ErrorKind::BasePointInNk: return "BasePointInNk";
    case ErrorKind::SizeGateExceeded: return "SizeGateExceeded";
    case ErrorKind::InsufficientPoints: return "InsufficientPoints";
    case ErrorKind::InsufficientFieldSize: return "InsufficientFieldSize";
    case ErrorKind::NotFermatCandidate: return "NotFermatCandidate";
    case ErrorKind::WrongDegree: return "WrongDegree";
    case ErrorKind::RetriesExhausted: return "RetriesExhausted";
    case ErrorKind::CodimensionTooSmall: return "CodimensionTooSmall";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, std::optional<int> degree)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      degree_(degree) {}

void fail(ErrorKind kind, const std::string& message, std::optional<int> degree) {
  throw Error(kind, message, degree);
}

}  // namespace saga
