#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace saga {

enum class ErrorKind {
  ParseError,
  NotHomogeneous,
  FieldMismatch,
  InvalidArgument,
  NotRegularSequence,
  DegreeOutOfRange,
  NotAnnihilated,
  BudgetExceeded,
  NotZeroDimensional,
  NotOnLocus,
  NotALineInN3,
  PlaneNotInLocus,
  BasePointInNk,
  SizeGateExceeded,
  InsufficientPoints,
  InsufficientFieldSize,
  NotFermatCandidate,
  WrongDegree,
  RetriesExhausted,
  CodimensionTooSmall,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the engine carries a machine-readable kind so the
/// command line front end can map it onto an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::optional<int> degree = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  /// Degree at which a degree-indexed check failed (NotRegularSequence).
  std::optional<int> degree() const noexcept { return degree_; }

 private:
  ErrorKind kind_;
  std::optional<int> degree_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message,
                       std::optional<int> degree = std::nullopt);

}  // namespace saga
