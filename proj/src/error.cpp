#include "stonework/error.hpp"

namespace stonework {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Format: return "Format";
    case ErrorCode::MissingMinimum: return "MissingMinimum";
    case ErrorCode::NotTransitive: return "NotTransitive";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorCode::NotGBA: return "NotGBA";
    case ErrorCode::NotLattice: return "NotLattice";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::NotAFilter: return "NotAFilter";
    case ErrorCode::NotOpen: return "NotOpen";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotInterpolator: return "NotInterpolator";
    case ErrorCode::NotUltrafilter: return "NotUltrafilter";
    case ErrorCode::NotContinuous: return "NotContinuous";
    case ErrorCode::ZeroNotPreserved: return "ZeroNotPreserved";
    case ErrorCode::NotTightish: return "NotTightish";
    case ErrorCode::ConstructionIncomplete: return "ConstructionIncomplete";
    case ErrorCode::NotPseudobasis: return "NotPseudobasis";
    case ErrorCode::NotClopen: return "NotClopen";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what, std::vector<int> witness)
    : std::runtime_error(std::string(to_string(code)) + ": " + what),
      code_(code),
      witness_(std::move(witness)) {}

void fail(ErrorCode code, const std::string& what, std::vector<int> witness) {
  throw Error(code, what, std::move(witness));
}

}  // namespace stonework
