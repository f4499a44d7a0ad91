#include "vngeom/error.hpp"

namespace vngeom {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::NotLatinSquare: return "NotLatinSquare";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::SingularInput: return "SingularInput";
    case ErrorKind::DegenerateSpectrum: return "DegenerateSpectrum";
    case ErrorKind::NotHermitianSymmetric: return "NotHermitianSymmetric";
    case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::BadWeights: return "BadWeights";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::InternalDisagreement: return "InternalDisagreement";
    case ErrorKind::NotAProjection: return "NotAProjection";
    case ErrorKind::NotCentral: return "NotCentral";
    case ErrorKind::StateOutOfBounds: return "StateOutOfBounds";
    case ErrorKind::DecompositionFailure: return "DecompositionFailure";
    case ErrorKind::NotIsomorphic: return "NotIsomorphic";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotAffine: return "NotAffine";
    case ErrorKind::FitFailure: return "FitFailure";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, nlohmann::json witness)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      witness_(std::move(witness)) {}

}  // namespace vngeom
