#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace vngeom {

enum class ErrorKind {
  // malformed input (exit code 2 in the CLI)
  MalformedInput,
  // group-core
  NotLatinSquare,
  NoIdentity,
  NotAssociative,
  SizeLimitExceeded,
  IndexOutOfRange,
  // numerics
  NotHermitian,
  ConvergenceFailure,
  SingularInput,
  // characters
  DegenerateSpectrum,
  // posdef-states
  NotHermitianSymmetric,
  NotPositiveDefinite,
  NotNormalized,
  BadWeights,
  GroupMismatch,
  // channels
  InternalDisagreement,
  // convexity
  NotAProjection,
  NotCentral,
  StateOutOfBounds,
  // vn-structure
  DecompositionFailure,
  NotIsomorphic,
  DimensionMismatch,
  NotAffine,
  FitFailure,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Domain error. `witness` carries enough data to reproduce the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, nlohmann::json witness = nullptr);

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return to_string(kind_); }
  const nlohmann::json& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  nlohmann::json witness_;
};

}  // namespace vngeom
