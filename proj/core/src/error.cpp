#include "sofic2/error.hpp"

namespace sofic2 {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyWord: return "EmptyWord";
    case ErrorKind::InvalidCombRep: return "InvalidCombRep";
    case ErrorKind::EmptyRepresentation: return "EmptyRepresentation";
    case ErrorKind::NotRightResolving: return "NotRightResolving";
    case ErrorKind::NotCountableCertified: return "NotCountableCertified";
    case ErrorKind::RankTooHigh: return "RankTooHigh";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::MalformedStructureGraph: return "MalformedStructureGraph";
    case ErrorKind::NotRankOne: return "NotRankOne";
    case ErrorKind::WitnessInvalid: return "WitnessInvalid";
    case ErrorKind::ImproperColoring: return "ImproperColoring";
    case ErrorKind::IsolatedVertex: return "IsolatedVertex";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Cancelled: return "Cancelled";
  }
  return "Unknown";
}

}  // namespace sofic2
