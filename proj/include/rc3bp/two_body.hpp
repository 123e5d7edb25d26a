#pragma once

#include <optional>
#include <string_view>
#include <utility>

namespace rc3bp::two_body {

/// Two charged point bodies. `C` is the coupling G m1 m2 - k q1 q2 and
/// `mu_red` the reduced mass; both are derived at construction.
struct TwoBodyConfig {
  double m1 = 1.0;
  double m2 = 1.0;
  double q1 = 0.0;
  double q2 = 0.0;
  double G = 1.0;
  double k = 1.0;
  double C = 1.0;
  double mu_red = 0.5;

  static TwoBodyConfig make(double m1, double m2, double q1, double q2, double G, double k);
};

enum class OrbitClass { Keplerian, Free, Repulsive };

std::string_view to_string(OrbitClass c) noexcept;

OrbitClass classify(const TwoBodyConfig& cfg) noexcept;

/// Closed-form relative orbit 1/rho = c (-1 + e cos(theta - theta_prime)).
struct HyperbolicOrbit {
  double c = 0.0;
  double e = 0.0;
  double theta_prime = 0.0;
  double theta_e = 0.0;
  double r0 = 0.0;
  double rho_star = 0.0;

  /// Radius on the orbit at polar angle theta; empty outside the asymptote cone.
  std::optional<double> radius_at(double theta) const;
};

HyperbolicOrbit hyperbolic_orbit(double mu_red, double C, double k_star, double l);
HyperbolicOrbit hyperbolic_orbit(const TwoBodyConfig& cfg, double k_star, double l);

double effective_potential(double rho, double l, double mu_red, double C);

/// The pair (+p_r, -p_r), or nothing inside the forbidden region k* < V_eff.
std::optional<std::pair<double, double>> radial_momentum(double rho, double k_star, double l,
                                                         double mu_red, double C);

}  // namespace rc3bp::two_body
