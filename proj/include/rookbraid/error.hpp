#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rookbraid {

enum class ErrorCode {
  NotDivisible,
  NotBalanced,
  SizeMismatch,
  NotPlanar,
  CapExceeded,
  IndexOutOfRange,
  BadToken,
  GeneratorOutOfRange,
  BadFamily,
  BadPartition,
  BadSpecialization,
  TooManyCrossings,
  RelationFailed,
  CheckFailed,
  CorpusFormat,
};

/// Stable name of an error code, as printed by the CLI.
std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rookbraid
