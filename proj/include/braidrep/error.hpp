#ifndef BRAIDREP_ERROR_HPP_
#define BRAIDREP_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace braidrep {

enum class ErrorKind {
  DimensionMismatch,
  NotHermitian,
  NotCommuting,
  NotClosed,
  SingularGenerator,
  MissingGenerator,
  InvalidTuple,
  ZeroDenominator,
  ShapeMismatch,
  NotSelfInverse,
  EmptySupport,
  ValidationFailed,
  ScalarOperator,
  ClosureFailed,
  NoMatch,
  NotPermutation,
  NonSquareBlock,
  NotSelfAdjoint,
  NotInvariant,
  InvalidParameter,
  InvalidGamma,
  NotNormalized,
  NotErgodic,
  Schema,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotCommuting: return "NotCommuting";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::SingularGenerator: return "SingularGenerator";
    case ErrorKind::MissingGenerator: return "MissingGenerator";
    case ErrorKind::InvalidTuple: return "InvalidTuple";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotSelfInverse: return "NotSelfInverse";
    case ErrorKind::EmptySupport: return "EmptySupport";
    case ErrorKind::ValidationFailed: return "ValidationFailed";
    case ErrorKind::ScalarOperator: return "ScalarOperator";
    case ErrorKind::ClosureFailed: return "ClosureFailed";
    case ErrorKind::NoMatch: return "NoMatch";
    case ErrorKind::NotPermutation: return "NotPermutation";
    case ErrorKind::NonSquareBlock: return "NonSquareBlock";
    case ErrorKind::NotSelfAdjoint: return "NotSelfAdjoint";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::InvalidGamma: return "InvalidGamma";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::NotErgodic: return "NotErgodic";
    case ErrorKind::Schema: return "Schema";
  }
  return "Unknown";
}

/// Library-wide exception. `witness` holds the offending indices (generator
/// pair, point, ...) when the failure has one; `residual` the measured norm.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::vector<long> witness = {},
        double residual = 0.0)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        witness_(std::move(witness)),
        residual_(residual) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<long>& witness() const noexcept { return witness_; }
  double residual() const noexcept { return residual_; }

 private:
  ErrorKind kind_;
  std::vector<long> witness_;
  double residual_;
};

}  // namespace braidrep

#endif  // BRAIDREP_ERROR_HPP_
