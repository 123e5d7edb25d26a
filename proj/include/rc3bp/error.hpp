#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rc3bp {

enum class ErrorCode {
  InvalidArgument,
  ZeroThirdCharge,
  NonpositiveMass,
  NotRepulsive,
  ZeroAngularMomentum,
  NonpositiveRadius,
  CollisionSingularity,
  StepSizeUnderflow,
  NoTriangularSolution,
  AtPrimary,
  InadmissibleParams,
  NotOnLimitLocus,
  RootNotBracketed,
  NotOnTriangularLocus,
  BelowCriticalMass,
  DegenerateGamma,
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rc3bp
