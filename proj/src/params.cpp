#include "rc3bp/params.hpp"

#include <cmath>
#include <utility>

namespace rc3bp {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ZeroThirdCharge: return "ZeroThirdCharge";
    case ErrorCode::NonpositiveMass: return "NonpositiveMass";
    case ErrorCode::NotRepulsive: return "NotRepulsive";
    case ErrorCode::ZeroAngularMomentum: return "ZeroAngularMomentum";
    case ErrorCode::NonpositiveRadius: return "NonpositiveRadius";
    case ErrorCode::CollisionSingularity: return "CollisionSingularity";
    case ErrorCode::StepSizeUnderflow: return "StepSizeUnderflow";
    case ErrorCode::NoTriangularSolution: return "NoTriangularSolution";
    case ErrorCode::AtPrimary: return "AtPrimary";
    case ErrorCode::InadmissibleParams: return "InadmissibleParams";
    case ErrorCode::NotOnLimitLocus: return "NotOnLimitLocus";
    case ErrorCode::RootNotBracketed: return "RootNotBracketed";
    case ErrorCode::NotOnTriangularLocus: return "NotOnTriangularLocus";
    case ErrorCode::BelowCriticalMass: return "BelowCriticalMass";
    case ErrorCode::DegenerateGamma: return "DegenerateGamma";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

std::string_view to_string(ForceRegime regime) noexcept {
  switch (regime) {
    case ForceRegime::CoulombDominatesRepulsive: return "CoulombDominatesRepulsive";
    case ForceRegime::BalancedRepulsive: return "BalancedRepulsive";
    case ForceRegime::GravityDominates: return "GravityDominates";
    case ForceRegime::NoCoulomb: return "NoCoulomb";
    case ForceRegime::CoulombAttractive: return "CoulombAttractive";
  }
  return "Unknown";
}

double primary_coupling(const PhysicalSystem& sys) {
  return sys.G - sys.k * (sys.q1 / sys.m1) * (sys.q2 / sys.m2);
}

SystemParams reduce(const PhysicalSystem& input) {
  if (!(input.m1 > 0.0) || !(input.m2 > 0.0)) {
    throw Error(ErrorCode::NonpositiveMass, "primary masses must be positive");
  }
  if (!(input.m3 >= 0.0) || !(input.G > 0.0) || !(input.k > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "m3 must be non-negative and G, k positive");
  }
  if (input.q3 == 0.0) {
    throw Error(ErrorCode::ZeroThirdCharge, "the test particle must carry charge");
  }

  PhysicalSystem sys = input;
  const bool swapped = sys.m2 > sys.m1;
  if (swapped) {
    std::swap(sys.m1, sys.m2);
    std::swap(sys.q1, sys.q2);
  }

  const double scale = std::sqrt(sys.k / sys.G);
  const double sign3 = sys.q3 > 0.0 ? 1.0 : -1.0;
  const double a1 = sys.q1 / sys.m1 * scale;
  const double a2 = sys.q2 / sys.m2 * scale;

  SystemParams p;
  p.mu = sys.m2 / (sys.m1 + sys.m2);
  p.beta1 = 1.0 - a1 * sign3;
  p.beta2 = 1.0 - a2 * sign3;
  p.admissible = is_admissible(p.beta1, p.beta2);
  p.swapped = swapped;
  return p;
}

}  // namespace rc3bp
