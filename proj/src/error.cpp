#include "bgg/error.hpp"

namespace bgg {

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotFiniteType: return "NotFiniteType";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::UnknownRoot: return "UnknownRoot";
    case ErrorKind::NonDominant: return "NonDominant";
    case ErrorKind::DimensionOverBudget: return "DimensionOverBudget";
    case ErrorKind::NotCompletelyReducibleInput: return "NotCompletelyReducibleInput";
    case ErrorKind::DegreeOverflow: return "DegreeOverflow";
    case ErrorKind::UncertifiedInput: return "UncertifiedInput";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::SingularLaplacianBlock: return "SingularLaplacianBlock";
    case ErrorKind::CertificationFailure: return "CertificationFailure";
    case ErrorKind::NonAdjacentLevels: return "NonAdjacentLevels";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
  }
  return "Unknown";
}

}  // namespace bgg
