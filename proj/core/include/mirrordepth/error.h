#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mirrordepth {

// Failure kinds surfaced by the library. CLI front ends map these to exit
// codes and per-instance error records.
enum class Err {
  kIo,
  kBadFormat,
  kOutOfBounds,
  kNonPositiveDepth,
  kZeroNormal,
  kNonUnitInput,
  kDimensionMismatch,
  kEmptyMask,
  kTooFewPoints,
  kDegenerate,
  kNoConsensus,
  kNoBorderPoints,
  kTooFewNormals,
  kEmptyCluster,
  kBadAnchorId,
  kZeroSum,
  kEmptyValidSet,
  kEmptyRegion,
  kAllZeroPred,
  kNoGroundTruth,
  kCameraOutsideRoom,
  kInvalidConfig,
};

std::string_view err_name(Err code);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& message)
      : std::runtime_error(std::string(err_name(code)) + ": " + message),
        code_(code) {}

  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void throw_error(Err code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace mirrordepth
