#include "rc3bp/two_body.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rc3bp/error.hpp"

namespace rc3bp::two_body {

TwoBodyConfig TwoBodyConfig::make(double m1, double m2, double q1, double q2, double G, double k) {
  if (!(m1 > 0.0) || !(m2 > 0.0)) {
    throw Error(ErrorCode::NonpositiveMass, "two-body masses must be positive");
  }
  TwoBodyConfig cfg{m1, m2, q1, q2, G, k};
  cfg.C = G * m1 * m2 - k * q1 * q2;
  cfg.mu_red = m1 * m2 / (m1 + m2);
  return cfg;
}

std::string_view to_string(OrbitClass c) noexcept {
  switch (c) {
    case OrbitClass::Keplerian: return "Keplerian";
    case OrbitClass::Free: return "Free";
    case OrbitClass::Repulsive: return "Repulsive";
  }
  return "Unknown";
}

OrbitClass classify(const TwoBodyConfig& cfg) noexcept {
  if (cfg.C > 0.0) return OrbitClass::Keplerian;
  if (cfg.C == 0.0) return OrbitClass::Free;
  return OrbitClass::Repulsive;
}

std::optional<double> HyperbolicOrbit::radius_at(double theta) const {
  const double inv = c * (-1.0 + e * std::cos(theta - theta_prime));
  if (!(inv > 0.0)) return std::nullopt;
  return 1.0 / inv;
}

HyperbolicOrbit hyperbolic_orbit(double mu_red, double C, double k_star, double l) {
  if (!(C < 0.0)) throw Error(ErrorCode::NotRepulsive, "hyperbolic orbit requires C < 0");
  if (l == 0.0) throw Error(ErrorCode::ZeroAngularMomentum, "radial scattering has no polar orbit equation");
  if (!(k_star > 0.0) || !(mu_red > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "energy and reduced mass must be positive");
  }
  const double absC = std::abs(C);
  const double root = std::sqrt(1.0 + 2.0 * l * l * k_star / (mu_red * C * C));

  HyperbolicOrbit orbit;
  orbit.c = mu_red * absC / (l * l);
  orbit.e = root;
  orbit.theta_prime = 0.0;
  orbit.theta_e = std::acos(1.0 / root);
  orbit.r0 = absC / k_star;
  orbit.rho_star = absC / (2.0 * k_star) * (1.0 + root);
  return orbit;
}

HyperbolicOrbit hyperbolic_orbit(const TwoBodyConfig& cfg, double k_star, double l) {
  return hyperbolic_orbit(cfg.mu_red, cfg.C, k_star, l);
}

double effective_potential(double rho, double l, double mu_red, double C) {
  if (!(rho > 0.0)) throw Error(ErrorCode::NonpositiveRadius, "effective potential needs rho > 0");
  return l * l / (2.0 * mu_red * rho * rho) + std::abs(C) / rho;
}

std::optional<std::pair<double, double>> radial_momentum(double rho, double k_star, double l,
                                                         double mu_red, double C) {
  const double veff = effective_potential(rho, l, mu_red, C);
  double gap = k_star - veff;
  // Turning point: a few ulps of round-off should not flip it into the forbidden region.
  if (gap < 0.0 && -gap <= 8.0 * std::numeric_limits<double>::epsilon() * std::max(k_star, veff)) {
    gap = 0.0;
  }
  if (gap < 0.0) return std::nullopt;
  const double p = std::sqrt(2.0 * mu_red * gap);
  return std::pair{p, -p};
}

}  // namespace rc3bp::two_body
