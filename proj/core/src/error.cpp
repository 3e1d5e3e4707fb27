#include "gspin/error.hpp"

namespace gspin {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateForm: return "DegenerateForm";
    case ErrorKind::ZeroArgument: return "ZeroArgument";
    case ErrorKind::ZeroEntry: return "ZeroEntry";
    case ErrorKind::UnsupportedField: return "UnsupportedField";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::BasisMismatch: return "BasisMismatch";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::BasisNotExtension: return "BasisNotExtension";
    case ErrorKind::DimensionCap: return "DimensionCap";
    case ErrorKind::HypothesisViolation: return "HypothesisViolation";
    case ErrorKind::NotSplit: return "NotSplit";
    case ErrorKind::FormNotFound: return "FormNotFound";
    case ErrorKind::InvalidDecomposition: return "InvalidDecomposition";
    case ErrorKind::TargetMismatch: return "TargetMismatch";
    case ErrorKind::InvalidClass: return "InvalidClass";
    case ErrorKind::PoleAtS: return "PoleAtS";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::SingularSatake: return "SingularSatake";
    case ErrorKind::CentralCharacterMismatch: return "CentralCharacterMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace gspin
