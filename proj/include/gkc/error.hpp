#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gkc {

/// Failure categories surfaced by the library. Every throw site uses one of
/// these so callers (and the CLI exit code) can dispatch on the kind.
enum class ErrorKind {
  NotPrime,
  ZeroPolynomial,
  NotSquarefree,
  NotMonic,
  Reducible,
  IrreducibilityUndecided,
  UnsafePrime,
  InvalidTable,
  ScaleExceeded,
  TauNotCentralInvolution,
  NotASubgroup,
  NonIntegralDimension,
  RamifiedPrime,
  NotLinearlyDisjoint,
  UndeterminedDecomposition,
  SchemaViolation,
  InvariantViolation,
  EvenCharacter,
  NonDivisibleOrder,
  NotAbelian,
  PrimesNotSplitInSubfield,
  InconsistentLift,
  InvalidArgument,
  MissingLayer,
  NonPPower,
  HypothesisFailed,
  PIsTwo,
  PoolExhausted,
  MalformedRow,
  Io,
  Internal,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        kind_(kind), detail_(detail) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& detail) {
  throw Error(kind, detail);
}

}  // namespace gkc
