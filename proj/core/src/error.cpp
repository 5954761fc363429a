#include "multlab/error.hpp"

namespace multlab {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::SolverFailure: return "SolverFailure";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::NotAbelian: return "NotAbelian";
    case ErrorCode::UnsupportedStructure: return "UnsupportedStructure";
    case ErrorCode::NotAnAction: return "NotAnAction";
    case ErrorCode::NotTranslationAction: return "NotTranslationAction";
    case ErrorCode::Mismatch: return "Mismatch";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::NotAFactorization: return "NotAFactorization";
    case ErrorCode::Not3of4: return "Not3of4";
    case ErrorCode::NotComposable: return "NotComposable";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::UnknownProperty: return "UnknownProperty";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::vector<std::int64_t> witness)
    : std::runtime_error(std::string(error_name(code)) + ": " + message),
      code_(code),
      witness_(std::move(witness)) {}

}  // namespace multlab
