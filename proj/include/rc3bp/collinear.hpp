#pragma once

#include <cmath>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "rc3bp/error.hpp"
#include "rc3bp/params.hpp"

namespace rc3bp {

/// I1 = (-inf, -mu), I2 = (-mu, 1 - mu), I3 = (1 - mu, inf).
enum class Interval { I1, I2, I3 };

inline constexpr Interval kIntervals[] = {Interval::I1, Interval::I2, Interval::I3};

std::string_view to_string(Interval i) noexcept;

/// Interval containing x, or nothing when x sits on a primary.
template <typename Scalar>
std::optional<Interval> interval_of(Scalar mu, Scalar x) {
  if (x < -mu) return Interval::I1;
  if (x > Scalar(1) - mu) return Interval::I3;
  if (x > -mu && x < Scalar(1) - mu) return Interval::I2;
  return std::nullopt;
}

/// Axis force balance F(x) = x - b1 (1-mu)(x+mu)/rho1^3 - b2 mu (x+mu-1)/rho2^3,
/// evaluated in its per-interval reduced form (signed inverse squares).
/// A vanished beta drops its term exactly.
template <typename Scalar>
Scalar collinear_F(const SystemParamsT<Scalar>& p, Scalar x) {
  const Scalar one(1);
  const Scalar d1 = x + p.mu;
  const Scalar d2 = x + p.mu - one;
  if (d1 == Scalar(0) || d2 == Scalar(0)) {
    throw Error(ErrorCode::AtPrimary, "F is singular at a primary");
  }
  // I1: both distances are -(x - s_i); I2: only the second; I3: neither.
  const Scalar s1 = d1 < Scalar(0) ? one : -one;
  const Scalar s2 = d2 < Scalar(0) ? one : -one;
  Scalar f = x;
  if (p.beta1 != Scalar(0)) f += s1 * p.beta1 * (one - p.mu) / (d1 * d1);
  if (p.beta2 != Scalar(0)) f += s2 * p.beta2 * p.mu / (d2 * d2);
  return f;
}

template <typename Scalar>
Scalar collinear_F_prime(const SystemParamsT<Scalar>& p, Scalar x) {
  using std::abs;
  const Scalar one(1);
  const Scalar r1 = abs(x + p.mu);
  const Scalar r2 = abs(x + p.mu - one);
  if (r1 == Scalar(0) || r2 == Scalar(0)) {
    throw Error(ErrorCode::AtPrimary, "F' is singular at a primary");
  }
  Scalar g = one;
  if (p.beta1 != Scalar(0)) g += Scalar(2) * p.beta1 * (one - p.mu) / (r1 * r1 * r1);
  if (p.beta2 != Scalar(0)) g += Scalar(2) * p.beta2 * p.mu / (r2 * r2 * r2);
  return g;
}

/// S-regions partitioning the admissible (beta1, beta2) plane.
enum class BetaRegion { S11, S12, S2, S41, S42, S5, S6, Inadmissible, AxisOrigin };

std::string_view to_string(BetaRegion r) noexcept;

/// AxisOrigin for (0, 0) (itself inadmissible), Inadmissible for every other
/// point violating (b1 - 1)(b2 - 1) < 1.
BetaRegion classify_region(double beta1, double beta2) noexcept;
inline BetaRegion classify_region(const SystemParams& p) noexcept { return classify_region(p.beta1, p.beta2); }

/// Which clause of the root-count theorems governs a (region, interval) pair.
enum class CountRule {
  ExactlyOne,      // simple-root theorem, unconditional
  OneConditional,  // simple-root theorem on an axis, gated by beta > 1 or 0 < beta < 1
  UpToTwo,         // double-root theorem, gated by the beta* band
  Unspecified,     // axis value beta = 1, not covered
};

std::string_view to_string(CountRule r) noexcept;

struct RootCountPrediction {
  CountRule rule = CountRule::Unspecified;
  /// Expected number of distinct roots; -1 when unspecified.
  int roots = -1;
  /// On the band boundary: one root of multiplicity two.
  bool double_root = false;
};

/// Throws InadmissibleParams.
RootCountPrediction predicted_root_count(const SystemParams& p, Interval interval);

struct CollinearRoot {
  double x = 0.0;
  Interval interval = Interval::I2;
  int multiplicity = 1;
  double residual = 0.0;
};

/// Sign-scan settings. Samples are log-spaced in distance from the poles.
struct ScanOptions {
  int samples_per_interval = 10000;
  double min_pole_distance = 1e-10;
  double max_pole_distance = 1e8;
  double double_root_f_tol = 1e-9;
  double double_root_fprime_tol = 1e-6;
};

std::vector<CollinearRoot> find_collinear_in(const SystemParams& p, Interval interval,
                                             const ScanOptions& options = {});
/// All axis equilibria, sorted by x. An empty result is valid.
std::vector<CollinearRoot> find_collinear(const SystemParams& p, const ScanOptions& options = {});

/// Degenerate triangular points on the axis when d2 - d1 = 1, d1 + d2 = 1 or
/// d1 - d2 = 1 (within 1e-12) for positive admissible betas. Throws NotOnLimitLocus.
std::vector<CollinearRoot> limit_collinear(const SystemParams& p);

/// (mu, b1, b2, x) -> (1 - mu, b2, b1, -x); F changes sign under the map.
std::pair<SystemParams, double> mirror(const SystemParams& p, double x);

// Boundary curves of the double-root bands, parameterised by the critical point x*.

template <typename Scalar>
Scalar beta1_star(Scalar xs, Scalar mu) {
  const Scalar a = xs + mu;
  return (Scalar(3) * xs + mu - Scalar(1)) * a * a * a / (Scalar(2) * (Scalar(1) - mu));
}

template <typename Scalar>
Scalar beta2_star(Scalar xs, Scalar mu) {
  const Scalar b = xs + mu - Scalar(1);
  return (Scalar(3) * xs + mu) * b * b * b / (Scalar(2) * mu);
}

template <typename Scalar>
Scalar critical_G(Scalar xs, Scalar mu) {
  const Scalar b1 = beta1_star(xs, mu);
  const Scalar b2 = beta2_star(xs, mu);
  return b1 * b2 - b1 - b2;
}

/// 4 mu (1 - mu) G, a polynomial in both arguments (no poles at mu = 0, 1).
template <typename Scalar>
Scalar critical_G_tilde(Scalar xs, Scalar mu) {
  const Scalar one(1);
  const Scalar a = xs + mu;
  const Scalar b = xs + mu - one;
  const Scalar p1 = (Scalar(3) * xs + mu - one) * a * a * a;
  const Scalar p2 = (Scalar(3) * xs + mu) * b * b * b;
  return p1 * p2 - Scalar(2) * mu * p1 - Scalar(2) * (one - mu) * p2;
}

struct CriticalRoots {
  double x_r1 = 0.0;
  double x_r2 = 0.0;
};

/// Root of G(., mu) in (-mu, -mu/3) for any mu in (0, 1); throws RootNotBracketed.
double critical_root_r1(double mu);

/// x_r1 by bisection and x_r2 = -x_r1(1 - mu). Requires 0 < mu <= 1/2.
CriticalRoots critical_roots(double mu);

/// Small-mu perturbation series of the same two roots.
CriticalRoots critical_roots_series(double mu);

/// Where a point sits relative to a double-root band.
enum class BandStatus { Outside, Boundary, Inside };

/// Band tests for beta1 < 0 < beta2; the beta1 > 0 > beta2 case follows by mirroring.
BandStatus band_status_outer(double beta1, double beta2, double mu);
BandStatus band_status_inner(double beta1, double beta2, double mu);

}  // namespace rc3bp
