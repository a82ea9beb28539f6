#include "rookbraid/error.hpp"

namespace rookbraid {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::NotBalanced: return "NotBalanced";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NotPlanar: return "NotPlanar";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::BadToken: return "BadToken";
    case ErrorCode::GeneratorOutOfRange: return "GeneratorOutOfRange";
    case ErrorCode::BadFamily: return "BadFamily";
    case ErrorCode::BadPartition: return "BadPartition";
    case ErrorCode::BadSpecialization: return "BadSpecialization";
    case ErrorCode::TooManyCrossings: return "TooManyCrossings";
    case ErrorCode::RelationFailed: return "RelationFailed";
    case ErrorCode::CheckFailed: return "CheckFailed";
    case ErrorCode::CorpusFormat: return "CorpusFormat";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + detail),
      code_(code) {}

}  // namespace rookbraid
