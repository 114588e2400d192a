#include "sdres/error.hpp"

namespace sdres {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::MissingSymbol: return "MissingSymbol";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotEssential: return "NotEssential";
    case ErrorKind::RankDrop: return "RankDrop";
    case ErrorKind::JacobiUndefined: return "JacobiUndefined";
    case ErrorKind::CorankLost: return "CorankLost";
    case ErrorKind::NoEssentialSubset: return "NoEssentialSubset";
    case ErrorKind::DegenerateLattice: return "DegenerateLattice";
    case ErrorKind::DegenerateLifting: return "DegenerateLifting";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::DuplicateVariable: return "DuplicateVariable";
    case ErrorKind::NonGenericTerm: return "NonGenericTerm";
    case ErrorKind::RetriesExhausted: return "RetriesExhausted";
  }
  return "Unknown";
}

bool is_input_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError:
    case ErrorKind::DuplicateVariable:
    case ErrorKind::NonGenericTerm:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::ZeroPolynomial:
    case ErrorKind::InvalidArgument:
      return true;
    default:
      return false;
  }
}

}  // namespace sdres
