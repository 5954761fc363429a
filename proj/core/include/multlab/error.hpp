#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace multlab {

enum class ErrorCode {
  InvalidInput,
  DimensionMismatch,
  NotHermitian,
  NotPSD,
  NoConvergence,
  SolverFailure,
  NotAGroup,
  NotAbelian,
  UnsupportedStructure,
  NotAnAction,
  NotTranslationAction,
  Mismatch,
  GroupMismatch,
  NotAFactorization,
  Not3of4,
  NotComposable,
  EmptySet,
  NotIdempotent,
  UnknownProperty,
};

std::string_view error_name(ErrorCode code);

// Domain error. `witness` carries the offending indices when one exists
// (e.g. the triple (a,b,c) breaking associativity).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::vector<std::int64_t> witness = {});

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::int64_t>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<std::int64_t> witness_;
};

}  // namespace multlab
