#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stonework {

enum class ErrorCode {
  Format,
  MissingMinimum,
  NotTransitive,
  IndexOutOfRange,
  CapExceeded,
  NotAntisymmetric,
  NotGBA,
  NotLattice,
  PreconditionFailed,
  NotAFilter,
  NotOpen,
  DimensionMismatch,
  NotInterpolator,
  NotUltrafilter,
  NotContinuous,
  ZeroNotPreserved,
  NotTightish,
  ConstructionIncomplete,
  NotPseudobasis,
  NotClopen,
  UnknownFamily,
  UnknownSuite,
};

std::string_view to_string(ErrorCode code);

/// The single exception type of the library. `witness` holds the element
/// indices (or point indices) demonstrating the failure, when there is one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::vector<int> witness = {});

  ErrorCode code() const noexcept { return code_; }
  const std::vector<int>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<int> witness_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what, std::vector<int> witness = {});

inline void require_cap(int size, int cap, const char* op) {
  if (size > cap)
    fail(ErrorCode::CapExceeded,
         std::string(op) + ": carrier size " + std::to_string(size) + " exceeds cap " +
             std::to_string(cap));
}

}  // namespace stonework
