#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sofic2 {

enum class ErrorKind {
  EmptyWord,
  InvalidCombRep,
  EmptyRepresentation,
  NotRightResolving,
  NotCountableCertified,
  RankTooHigh,
  BudgetExceeded,
  MalformedStructureGraph,
  NotRankOne,
  WitnessInvalid,
  ImproperColoring,
  IsolatedVertex,
  TooLarge,
  ParseError,
  Cancelled,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// that front ends can map it to an exit status without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sofic2
