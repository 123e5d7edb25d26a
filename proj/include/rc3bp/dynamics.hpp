#pragma once

#include <cmath>

#include <Eigen/Core>

#include "rc3bp/error.hpp"
#include "rc3bp/params.hpp"

namespace rc3bp {

/// Rotating-frame canonical state (x, y, p_x, p_y), with p_x = xdot - y, p_y = ydot + x.
template <typename Scalar = double>
struct PhaseStateT {
  using Vector = Eigen::Matrix<Scalar, 4, 1>;
  Vector v = Vector::Zero();

  PhaseStateT() = default;
  explicit PhaseStateT(const Vector& vec) : v(vec) {}
  PhaseStateT(Scalar x, Scalar y, Scalar px, Scalar py) { v << x, y, px, py; }

  Scalar x() const { return v(0); }
  Scalar y() const { return v(1); }
  Scalar px() const { return v(2); }
  Scalar py() const { return v(3); }
};

using PhaseState = PhaseStateT<double>;

/// V and its derivatives up to second order at one configuration point.
template <typename Scalar = double>
struct PotentialSampleT {
  Scalar V{};
  Scalar Vx{};
  Scalar Vy{};
  Scalar Vxx{};
  Scalar Vxy{};
  Scalar Vyy{};
  Scalar rho1{};
  Scalar rho2{};
};

using PotentialSample = PotentialSampleT<double>;

template <typename Scalar>
PotentialSampleT<Scalar> potential(const SystemParamsT<Scalar>& p, Scalar x, Scalar y) {
  using std::sqrt;
  const Scalar one(1);
  const Scalar dx1 = x + p.mu;
  const Scalar dx2 = x - one + p.mu;
  const Scalar r1sq = dx1 * dx1 + y * y;
  const Scalar r2sq = dx2 * dx2 + y * y;
  if (r1sq == Scalar(0) || r2sq == Scalar(0)) {
    throw Error(ErrorCode::CollisionSingularity, "potential evaluated at a primary");
  }
  const Scalar a = p.beta1 * (one - p.mu);
  const Scalar b = p.beta2 * p.mu;

  PotentialSampleT<Scalar> s;
  s.rho1 = sqrt(r1sq);
  s.rho2 = sqrt(r2sq);
  const Scalar i1 = one / s.rho1;
  const Scalar i2 = one / s.rho2;
  const Scalar i13 = i1 * i1 * i1;
  const Scalar i23 = i2 * i2 * i2;
  const Scalar i15 = i13 * i1 * i1;
  const Scalar i25 = i23 * i2 * i2;

  s.V = a * i1 + b * i2;
  s.Vx = -a * dx1 * i13 - b * dx2 * i23;
  s.Vy = -(a * i13 + b * i23) * y;
  const Scalar diag = -a * i13 - b * i23;
  s.Vxx = diag + Scalar(3) * (a * dx1 * dx1 * i15 + b * dx2 * dx2 * i25);
  s.Vxy = Scalar(3) * (a * dx1 * i15 + b * dx2 * i25) * y;
  s.Vyy = diag + Scalar(3) * (a * i15 + b * i25) * y * y;
  return s;
}

/// Amended potential (x^2 + y^2)/2 + V, with unit angular velocity.
template <typename Scalar>
Scalar omega(const SystemParamsT<Scalar>& p, Scalar x, Scalar y) {
  return (x * x + y * y) / Scalar(2) + potential(p, x, y).V;
}

/// Gradient of the amended potential; vanishes exactly at equilibria.
template <typename Scalar>
Eigen::Matrix<Scalar, 2, 1> omega_gradient(const SystemParamsT<Scalar>& p, Scalar x, Scalar y) {
  const auto s = potential(p, x, y);
  return {s.Vx + x, s.Vy + y};
}

template <typename Scalar>
Scalar hamiltonian(const SystemParamsT<Scalar>& p, const PhaseStateT<Scalar>& s) {
  const Scalar V = potential(p, s.x(), s.y()).V;
  return (s.px() * s.px() + s.py() * s.py()) / Scalar(2) + (s.y() * s.px() - s.x() * s.py()) - V;
}

template <typename Scalar>
PhaseStateT<Scalar> eom(const SystemParamsT<Scalar>& p, const PhaseStateT<Scalar>& s) {
  const auto pot = potential(p, s.x(), s.y());
  return PhaseStateT<Scalar>(s.y() + s.px(), -s.x() + s.py(), pot.Vx + s.py(), pot.Vy - s.px());
}

/// Phase point of a configuration at rest in the rotating frame.
template <typename Scalar>
PhaseStateT<Scalar> rest_state(Scalar x, Scalar y) {
  return PhaseStateT<Scalar>(x, y, -y, x);
}

}  // namespace rc3bp
