#pragma once

#include <cmath>
#include <string_view>

#include "rc3bp/error.hpp"
#include "rc3bp/params.hpp"

namespace rc3bp {

enum class TriangularLocation { LeftOfBody1, AboveBelowBody1, Between, AboveBelowBody2, RightOfBody2 };

std::string_view to_string(TriangularLocation loc) noexcept;

/// L4 = (xL, yL), L5 = (xL, -yL). The distances to the primaries equal the
/// cube roots of the betas.
template <typename Scalar = double>
struct TriangularPairT {
  Scalar xL{};
  Scalar yL{};
  Scalar rho1{};
  Scalar rho2{};
  TriangularLocation location = TriangularLocation::Between;
};

using TriangularPair = TriangularPairT<double>;

/// Squared ordinate times four: 2(d1^2 + d2^2) - (d1^2 - d2^2)^2 - 1. Positive
/// exactly when d1, d2 satisfy the strict triangle inequalities with side 1.
template <typename Scalar>
Scalar triangle_radicand(Scalar d1, Scalar d2) {
  const Scalar s1 = d1 * d1;
  const Scalar s2 = d2 * d2;
  const Scalar diff = s1 - s2;
  return Scalar(2) * (s1 + s2) - diff * diff - Scalar(1);
}

template <typename Scalar>
bool triangular_exists(const SystemParamsT<Scalar>& p) {
  if (!(p.beta1 > Scalar(0)) || !(p.beta2 > Scalar(0))) return false;
  if (!is_admissible(p.beta1, p.beta2)) return false;
  const Scalar d1 = p.delta1();
  const Scalar d2 = p.delta2();
  return d1 + Scalar(1) > d2 && d2 + Scalar(1) > d1 && d1 + d2 > Scalar(1);
}

/// Side tests of the location partition. Equalities are accepted within this
/// absolute band on the squared-delta combinations.
inline constexpr double kLocationTolerance = 1e-12;

template <typename Scalar>
TriangularLocation classify_location(const SystemParamsT<Scalar>& p) {
  if (!triangular_exists(p)) {
    throw Error(ErrorCode::NoTriangularSolution, "parameters admit no triangular equilibrium");
  }
  const Scalar s1 = p.delta1() * p.delta1();
  const Scalar s2 = p.delta2() * p.delta2();
  // 2 (xL + mu) and 2 (1 - mu - xL)
  const Scalar left = s1 - s2 + Scalar(1);
  const Scalar right = s2 - s1 + Scalar(1);
  const Scalar tol(kLocationTolerance);
  using std::abs;
  if (abs(left) <= tol) return TriangularLocation::AboveBelowBody1;
  if (left < Scalar(0)) return TriangularLocation::LeftOfBody1;
  if (abs(right) <= tol) return TriangularLocation::AboveBelowBody2;
  if (right < Scalar(0)) return TriangularLocation::RightOfBody2;
  return TriangularLocation::Between;
}

template <typename Scalar>
TriangularPairT<Scalar> triangular_points(const SystemParamsT<Scalar>& p) {
  if (!triangular_exists(p)) {
    throw Error(ErrorCode::NoTriangularSolution, "parameters admit no triangular equilibrium");
  }
  using std::sqrt;
  const Scalar d1 = p.delta1();
  const Scalar d2 = p.delta2();
  TriangularPairT<Scalar> t;
  t.rho1 = d1;
  t.rho2 = d2;
  t.xL = -p.mu + (d1 * d1 - d2 * d2 + Scalar(1)) / Scalar(2);
  const Scalar rad = triangle_radicand(d1, d2);
  if (!(rad > Scalar(0))) {
    throw Error(ErrorCode::NoTriangularSolution, "degenerate triangle; see limit_collinear");
  }
  t.yL = sqrt(rad) / Scalar(2);
  t.location = classify_location(p);
  return t;
}

}  // namespace rc3bp
