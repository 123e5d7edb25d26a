#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string_view>

#include <Eigen/Core>

#include "rc3bp/dynamics.hpp"
#include "rc3bp/error.hpp"
#include "rc3bp/params.hpp"

namespace rc3bp {

template <typename Scalar>
using Matrix4 = Eigen::Matrix<Scalar, 4, 4>;

/// Linearisation J Hess(H) of the Hamiltonian flow at a phase point at rest.
template <typename Scalar>
Matrix4<Scalar> linearization(const SystemParamsT<Scalar>& p, Scalar x, Scalar y) {
  const auto s = potential(p, x, y);
  Matrix4<Scalar> A;
  // clang-format off
  A << Scalar(0),  Scalar(1), Scalar(1),  Scalar(0),
       Scalar(-1), Scalar(0), Scalar(0),  Scalar(1),
       s.Vxx,      s.Vxy,     Scalar(0),  Scalar(1),
       s.Vxy,      s.Vyy,     Scalar(-1), Scalar(0);
  // clang-format on
  return A;
}

/// Coefficients (c2, c0) of lambda^4 + c2 lambda^2 + c0 read off the
/// potential block of a linearisation matrix.
template <typename Scalar>
std::array<Scalar, 2> characteristic_coefficients(const Matrix4<Scalar>& A) {
  const Scalar oxx = Scalar(1) + A(2, 0);
  const Scalar oxy = A(2, 1);
  const Scalar oyy = Scalar(1) + A(3, 1);
  return {Scalar(4) - oxx - oyy, oxx * oyy - oxy * oxy};
}

using Spectrum = std::array<std::complex<double>, 4>;

/// Roots of the biquadratic in u = lambda^2, returned as (+r1, -r1, +r2, -r2)
/// sorted by imaginary then real part.
Spectrum quartic_eigenvalues(const Matrix4<double>& A);

/// Eigenvalues of A from a general dense solver, same ordering.
Spectrum dense_eigenvalues(const Matrix4<double>& A);

/// Sorts a spectrum by (imag, real) for pairwise comparison.
Spectrum sorted_spectrum(Spectrum s);

/// Largest distance between correspondingly sorted eigenvalues.
double spectrum_distance(const Spectrum& a, const Spectrum& b);

/// Angle at the primaries' side of the triangle: rho1^2 + rho2^2 + 2 rho1 rho2 cos(gamma) = 1.
/// Throws NotOnTriangularLocus unless the parameters give a (possibly degenerate) triangle.
double gamma_of(const SystemParams& p);

template <typename Scalar>
Scalar F_stability(Scalar mu, Scalar gamma) {
  using std::sin;
  const Scalar s = sin(gamma);
  return Scalar(1) - Scalar(36) * mu * (Scalar(1) - mu) * s * s;
}

inline double critical_mu() { return 0.5 - std::numbers::sqrt2 / 3.0; }

/// arcsin(1 / (6 sqrt(mu (1 - mu)))); companion angle pi - gamma_mu. Throws BelowCriticalMass for mu <= mu*.
double gamma_mu(double mu);

/// Closed-form triangular spectrum +-sqrt((-1 +- sqrt(F)) / 2).
Spectrum triangular_eigenvalues(double F);

enum class StabilityClass { LyapunovUnstable, LinearlyUnstableFZero, LinearlyStable, LinearlyUnstableFOne, Unclassified };

std::string_view to_string(StabilityClass c) noexcept;

/// Band for detecting F = 0 and F = 1.
inline constexpr double kBoundaryTolerance = 1e-12;

StabilityClass classify_F(double F) noexcept;

struct StabilityReport {
  Spectrum eigenvalues{};
  double F = 0.0;
  std::optional<double> gamma;
  StabilityClass classification = StabilityClass::Unclassified;
  double x = 0.0;
  double y = 0.0;
};

/// Report for L4 (or the limit-collinear point). Throws NotOnTriangularLocus.
StabilityReport classify_triangular(const SystemParams& p);

/// Eigenvalues at an arbitrary axis or off-axis point. Classified only when the
/// point coincides with L4/L5 or a limit solution.
StabilityReport stability_at(const SystemParams& p, double x, double y);

}  // namespace rc3bp
