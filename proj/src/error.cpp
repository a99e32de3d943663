#include "gkc/error.hpp"

namespace gkc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::Reducible: return "Reducible";
    case ErrorKind::IrreducibilityUndecided: return "IrreducibilityUndecided";
    case ErrorKind::UnsafePrime: return "UnsafePrime";
    case ErrorKind::InvalidTable: return "InvalidTable";
    case ErrorKind::ScaleExceeded: return "ScaleExceeded";
    case ErrorKind::TauNotCentralInvolution: return "TauNotCentralInvolution";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::NonIntegralDimension: return "NonIntegralDimension";
    case ErrorKind::RamifiedPrime: return "RamifiedPrime";
    case ErrorKind::NotLinearlyDisjoint: return "NotLinearlyDisjoint";
    case ErrorKind::UndeterminedDecomposition: return "UndeterminedDecomposition";
    case ErrorKind::SchemaViolation: return "SchemaViolation";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::EvenCharacter: return "EvenCharacter";
    case ErrorKind::NonDivisibleOrder: return "NonDivisibleOrder";
    case ErrorKind::NotAbelian: return "NotAbelian";
    case ErrorKind::PrimesNotSplitInSubfield: return "PrimesNotSplitInSubfield";
    case ErrorKind::InconsistentLift: return "InconsistentLift";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::MissingLayer: return "MissingLayer";
    case ErrorKind::NonPPower: return "NonPPower";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::PIsTwo: return "PIsTwo";
    case ErrorKind::PoolExhausted: return "PoolExhausted";
    case ErrorKind::MalformedRow: return "MalformedRow";
    case ErrorKind::Io: return "Io";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace gkc
