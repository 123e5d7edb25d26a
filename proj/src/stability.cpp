#include "rc3bp/stability.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "rc3bp/collinear.hpp"
#include "rc3bp/triangular.hpp"

namespace rc3bp {

std::string_view to_string(StabilityClass c) noexcept {
  switch (c) {
    case StabilityClass::LyapunovUnstable: return "LyapunovUnstable";
    case StabilityClass::LinearlyUnstableFZero: return "LinearlyUnstable_Fzero";
    case StabilityClass::LinearlyStable: return "LinearlyStable";
    case StabilityClass::LinearlyUnstableFOne: return "LinearlyUnstable_Fone";
    case StabilityClass::Unclassified: return "Unclassified";
  }
  return "Unknown";
}

Spectrum sorted_spectrum(Spectrum s) {
  std::sort(s.begin(), s.end(), [](const auto& a, const auto& b) {
    if (a.imag() != b.imag()) return a.imag() < b.imag();
    return a.real() < b.real();
  });
  return s;
}

double spectrum_distance(const Spectrum& a, const Spectrum& b) {
  // Pairwise match by greedy nearest neighbour; sorting alone is fragile when
  // imaginary parts tie to round-off.
  std::array<bool, 4> used{};
  double worst = 0.0;
  for (const auto& z : a) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t pick = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      if (used[j]) continue;
      const double d = std::abs(z - b[j]);
      if (d < best) {
        best = d;
        pick = j;
      }
    }
    used[pick] = true;
    worst = std::max(worst, best);
  }
  return worst;
}

Spectrum quartic_eigenvalues(const Matrix4<double>& A) {
  using cd = std::complex<double>;
  const auto [c2, c0] = characteristic_coefficients(A);
  const cd disc = std::sqrt(cd(c2 * c2 - 4.0 * c0));
  // Stable quadratic roots: pick the sign that avoids cancellation.
  const cd q = -0.5 * (cd(c2) + (c2 >= 0.0 ? disc : -disc));
  cd u1 = q;
  cd u2 = (q != cd(0.0)) ? cd(c0) / q : cd(0.0);
  if (q == cd(0.0)) u1 = -cd(c2) - u2;
  const cd r1 = std::sqrt(u1);
  const cd r2 = std::sqrt(u2);
  return sorted_spectrum({r1, -r1, r2, -r2});
}

Spectrum dense_eigenvalues(const Matrix4<double>& A) {
  Eigen::EigenSolver<Matrix4<double>> solver(A, false);
  const auto ev = solver.eigenvalues();
  return sorted_spectrum({ev(0), ev(1), ev(2), ev(3)});
}

double gamma_of(const SystemParams& p) {
  if (!(p.beta1 > 0.0 && p.beta2 > 0.0)) {
    throw Error(ErrorCode::NotOnTriangularLocus, "gamma needs positive betas");
  }
  if (!p.admissible) throw Error(ErrorCode::NotOnTriangularLocus, "parameters are inadmissible");
  const double r1 = p.delta1();
  const double r2 = p.delta2();
  const double c = (1.0 - r1 * r1 - r2 * r2) / (2.0 * r1 * r2);
  constexpr double slack = 1e-12;
  if (c < -1.0 - slack || c > 1.0 + slack) {
    throw Error(ErrorCode::NotOnTriangularLocus, "distances violate the triangle inequalities");
  }
  return std::acos(std::clamp(c, -1.0, 1.0));
}

double gamma_mu(double mu) {
  if (!(mu > critical_mu() && mu <= 0.5)) {
    throw Error(ErrorCode::BelowCriticalMass, "gamma_mu needs mu in (mu*, 1/2]");
  }
  return std::asin(std::min(1.0, 1.0 / (6.0 * std::sqrt(mu * (1.0 - mu)))));
}

Spectrum triangular_eigenvalues(double F) {
  using cd = std::complex<double>;
  const cd s = std::sqrt(cd(F));
  const cd a = std::sqrt((-1.0 + s) / 2.0);
  const cd b = std::sqrt((-1.0 - s) / 2.0);
  return sorted_spectrum({a, -a, b, -b});
}

StabilityClass classify_F(double F) noexcept {
  if (std::abs(F) <= kBoundaryTolerance) return StabilityClass::LinearlyUnstableFZero;
  if (std::abs(F - 1.0) <= kBoundaryTolerance) return StabilityClass::LinearlyUnstableFOne;
  if (F < 0.0) return StabilityClass::LyapunovUnstable;
  return StabilityClass::LinearlyStable;
}

StabilityReport classify_triangular(const SystemParams& p) {
  StabilityReport r;
  if (triangular_exists(p)) {
    const auto t = triangular_points(p);
    r.x = t.xL;
    r.y = t.yL;
  } else {
    std::vector<CollinearRoot> lim;
    try {
      lim = limit_collinear(p);
    } catch (const Error&) {
      throw Error(ErrorCode::NotOnTriangularLocus, "neither a triangular nor a limit-collinear configuration");
    }
    r.x = lim.front().x;
    r.y = 0.0;
  }
  const double g = gamma_of(p);
  r.gamma = g;
  r.F = F_stability(p.mu, g);
  r.classification = classify_F(r.F);
  r.eigenvalues = triangular_eigenvalues(r.F);
  return r;
}

StabilityReport stability_at(const SystemParams& p, double x, double y) {
  StabilityReport r;
  r.x = x;
  r.y = y;
  r.eigenvalues = quartic_eigenvalues(linearization(p, x, y));
  const auto [c2, c0] = characteristic_coefficients(linearization(p, x, y));
  r.F = c2 * c2 - 4.0 * c0;  // discriminant in lambda^2; equals F at triangular points
  try {
    const StabilityReport tri = classify_triangular(p);
    const double scale = std::max(1.0, std::hypot(x, y));
    if (std::abs(tri.x - x) <= 1e-9 * scale && std::abs(std::abs(y) - tri.y) <= 1e-9 * scale) {
      r.gamma = tri.gamma;
      r.F = tri.F;
      r.classification = tri.classification;
    }
  } catch (const Error&) {
  }
  return r;
}

}  // namespace rc3bp
