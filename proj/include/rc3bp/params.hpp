#pragma once

#include <cmath>
#include <string_view>

#include "rc3bp/error.hpp"

namespace rc3bp {

/// Raw masses and charges of the three bodies plus the two coupling constants.
/// Only the sign of the third charge enters the reduction; m3 may be zero.
struct PhysicalSystem {
  double m1 = 1.0;
  double m2 = 1.0;
  double m3 = 0.0;
  double q1 = 0.0;
  double q2 = 0.0;
  double q3 = 1.0;
  double G = 1.0;
  double k = 1.0;
};

template <typename Scalar>
constexpr bool is_admissible(Scalar beta1, Scalar beta2) {
  return (beta1 - Scalar(1)) * (beta2 - Scalar(1)) < Scalar(1);
}

/// Reduced parameter triple of the restricted problem.
///
/// `mu` is normally folded to (0, 1/2]; values in (0, 1) are representable so
/// that the mirrored configuration (1 - mu, beta2, beta1) is a valid object.
template <typename Scalar = double>
struct SystemParamsT {
  Scalar mu{};
  Scalar beta1{};
  Scalar beta2{};
  bool admissible = false;
  bool swapped = false;

  /// Throws InvalidArgument unless 0 < mu < 1 and the betas are finite.
  static SystemParamsT make(Scalar mu, Scalar beta1, Scalar beta2) {
    using std::isfinite;
    if (!(mu > Scalar(0) && mu < Scalar(1)) || !isfinite(beta1) || !isfinite(beta2)) {
      throw Error(ErrorCode::InvalidArgument, "mass ratio must lie in (0, 1) and betas must be finite");
    }
    return SystemParamsT{mu, beta1, beta2, is_admissible(beta1, beta2), false};
  }

  Scalar delta1() const {
    using std::cbrt;
    return cbrt(beta1);
  }
  Scalar delta2() const {
    using std::cbrt;
    return cbrt(beta2);
  }
  bool folded() const { return mu <= Scalar(0.5); }

  template <typename Other>
  SystemParamsT<Other> cast() const {
    return {Other(mu), Other(beta1), Other(beta2), admissible, swapped};
  }
};

using SystemParams = SystemParamsT<double>;

enum class ForceRegime {
  CoulombDominatesRepulsive,
  BalancedRepulsive,
  GravityDominates,
  NoCoulomb,
  CoulombAttractive,
};

/// Exact comparisons at 0 and 1; no tolerance band.
constexpr ForceRegime force_regime(double beta) {
  if (beta < 0.0) return ForceRegime::CoulombDominatesRepulsive;
  if (beta == 0.0) return ForceRegime::BalancedRepulsive;
  if (beta < 1.0) return ForceRegime::GravityDominates;
  if (beta == 1.0) return ForceRegime::NoCoulomb;
  return ForceRegime::CoulombAttractive;
}

std::string_view to_string(ForceRegime regime) noexcept;

/// Folds bodies so that m2 <= m1 (reporting the swap), then forms
/// beta_j = 1 - alpha~_j sgn(q3) with alpha~_j = (q_j / m_j) sqrt(k / G).
SystemParams reduce(const PhysicalSystem& sys);

/// Coupling of the primaries, G - k alpha1 alpha2. Positive iff circular motion exists.
double primary_coupling(const PhysicalSystem& sys);

}  // namespace rc3bp
