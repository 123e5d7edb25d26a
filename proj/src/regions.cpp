#include "rc3bp/regions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rc3bp/error.hpp"
#include "rc3bp/parallel.hpp"
#include "rc3bp/stability.hpp"
#include "rc3bp/triangular.hpp"

namespace rc3bp {

std::string_view to_string(CellLabel l) noexcept {
  switch (l) {
    case CellLabel::Admissible: return "admissible";
    case CellLabel::Inadmissible: return "inadmissible";
    case CellLabel::TriangularExists: return "triangular";
    case CellLabel::NoTriangular: return "no_triangular";
    case CellLabel::ZeroRoots: return "zero_roots";
    case CellLabel::OneRoot: return "one_root";
    case CellLabel::TwoRoots: return "two_roots";
    case CellLabel::DoubleRoot: return "double_root";
    case CellLabel::Unspecified: return "unspecified";
    case CellLabel::LinearlyStable: return "linearly_stable";
    case CellLabel::LyapunovUnstable: return "lyapunov_unstable";
    case CellLabel::UnstableFZero: return "unstable_f_zero";
    case CellLabel::UnstableFOne: return "unstable_f_one";
    case CellLabel::OutsideRestricted: return "outside";
  }
  return "unknown";
}

std::string_view to_string(Predicate p) noexcept {
  switch (p) {
    case Predicate::AdmissibilityProduct: return "admissibility_product";
    case Predicate::BoundaryCurves: return "boundary_curves";
    case Predicate::RestrictedConfiguration: return "restricted_configuration";
    case Predicate::RootCountTheorems: return "root_count_theorems";
    case Predicate::StabilityDiscriminant: return "stability_discriminant";
  }
  return "unknown";
}

std::string_view to_string(StableRegime r) noexcept {
  switch (r) {
    case StableRegime::BelowCritical: return "below_critical";
    case StableRegime::AtCritical: return "at_critical";
    case StableRegime::AboveCritical: return "above_critical";
  }
  return "unknown";
}

namespace {

constexpr double kPi = std::numbers::pi;

template <typename Fn>
RegionRaster rasterize(const GridSpec& grid, Predicate source, Fn&& label) {
  if (grid.nx < 2 || grid.ny < 2) throw Error(ErrorCode::InvalidArgument, "raster resolution must be at least 2");
  RegionRaster r;
  r.grid = grid;
  const auto nx = static_cast<std::size_t>(grid.nx);
  r.labels.resize(nx * static_cast<std::size_t>(grid.ny));
  r.provenance.assign(r.labels.size(), source);
  parallel_for(static_cast<std::size_t>(grid.ny), [&](std::size_t j) {
    const double y = grid.y_at(static_cast<int>(j));
    for (std::size_t i = 0; i < nx; ++i) {
      r.labels[j * nx + i] = label(grid.x_at(static_cast<int>(i)), y);
    }
  });
  return r;
}

bool in_window(const GridSpec& g, double x, double y) {
  return x >= g.x_min && x <= g.x_max && y >= g.y_min && y <= g.y_max;
}

// Splits a sampled curve into window-contained runs.
void append_clipped(std::vector<Polyline>& out, const std::string& name, const std::vector<Point2>& pts,
                    const GridSpec& g) {
  Polyline cur{name, {}};
  for (const auto& p : pts) {
    if (std::isfinite(p.x) && std::isfinite(p.y) && in_window(g, p.x, p.y)) {
      cur.points.push_back(p);
    } else if (!cur.points.empty()) {
      if (cur.points.size() > 1) out.push_back(cur);
      cur.points.clear();
    }
  }
  if (cur.points.size() > 1) out.push_back(cur);
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = a + (b - a) * i / (n - 1);
  return v;
}

CellLabel stability_label(double F) {
  switch (classify_F(F)) {
    case StabilityClass::LinearlyStable: return CellLabel::LinearlyStable;
    case StabilityClass::LyapunovUnstable: return CellLabel::LyapunovUnstable;
    case StabilityClass::LinearlyUnstableFZero: return CellLabel::UnstableFZero;
    case StabilityClass::LinearlyUnstableFOne:
    case StabilityClass::Unclassified: break;
  }
  return CellLabel::UnstableFOne;
}

// Stability label of a triangle with sides (r1, r2, 1), or nothing outside the
// restricted space (non-strict triangle inequalities plus admissibility).
std::optional<CellLabel> restricted_stability(double mu, double r1, double r2) {
  if (r1 == 0.0 || r2 == 0.0) return std::nullopt;
  if (!(r1 + 1.0 >= r2 && r2 + 1.0 >= r1 && r1 + r2 >= 1.0)) return std::nullopt;
  if (!is_admissible(r1 * r1 * r1, r2 * r2 * r2)) return std::nullopt;
  const double c = std::clamp((1.0 - r1 * r1 - r2 * r2) / (2.0 * r1 * r2), -1.0, 1.0);
  return stability_label(F_stability(mu, std::acos(c)));
}

}  // namespace

std::vector<Point2> StableArc::sample(int n) const {
  const double cy = -std::cos(gamma) / (2.0 * std::sin(gamma));
  const double to_body2 = std::atan2(-cy, 0.5);
  const double to_body1 = kPi - to_body2;
  std::vector<Point2> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (double phi : linspace(to_body1, to_body2, n)) {
    const double x = center.x + radius * std::cos(phi);
    const double y = cy + radius * std::sin(phi);
    pts.push_back({x, branch == ArcBranch::Upper ? y : -y});
  }
  pts.front() = {-mu, 0.0};
  pts.back() = {1.0 - mu, 0.0};
  return pts;
}

std::vector<Point2> StableEllipse::sample(int n) const {
  const double c = std::cos(rotation);
  const double s = std::sin(rotation);
  std::vector<Point2> pts;
  for (int k = 0; k < n; ++k) {
    const double t = 2.0 * kPi * k / n;
    const double u = semi_axes[0] * std::cos(t);
    const double v = semi_axes[1] * std::sin(t);
    pts.push_back({c * u - s * v, s * u + c * v});
  }
  return pts;
}

std::vector<Point2> StableEllipse::sample_first_quadrant(int n) const {
  const double cg = std::cos(gamma);
  std::vector<Point2> pts;
  for (double th : linspace(0.0, kPi / 2.0, n)) {
    const double r = 1.0 / std::sqrt(1.0 + cg * std::sin(2.0 * th));
    pts.push_back({r * std::cos(th), r * std::sin(th)});
  }
  pts.front() = {1.0, 0.0};
  pts.back() = {0.0, 1.0};
  return pts;
}

std::array<StableArc, 2> stable_arcs(double mu, double gamma) {
  if (!(gamma > 0.0 && gamma < kPi)) throw Error(ErrorCode::DegenerateGamma, "arcs need gamma in (0, pi)");
  const double s = std::sin(gamma);
  const double offset = std::cos(gamma) / (2.0 * s);
  const double radius = 1.0 / (2.0 * s);
  return {StableArc{{0.5 - mu, -offset}, radius, ArcBranch::Upper, gamma, mu},
          StableArc{{0.5 - mu, offset}, radius, ArcBranch::Lower, gamma, mu}};
}

StableEllipse stable_ellipse(double gamma) {
  const double c = std::cos(gamma);
  StableEllipse e;
  e.semi_axes = {1.0 / std::sqrt(1.0 - c), 1.0 / std::sqrt(1.0 + c)};
  e.rotation = -kPi / 4.0;
  e.gamma = gamma;
  return e;
}

StableRegionReport stable_region_report(double mu) {
  if (!(mu > 0.0 && mu <= 0.5)) throw Error(ErrorCode::InvalidArgument, "mu must lie in (0, 1/2]");
  StableRegionReport r;
  r.mu = mu;
  const double ms = critical_mu();
  if (std::abs(mu - ms) <= 1e-12) {
    r.regime = StableRegime::AtCritical;
    r.stable_gamma = {{0.0, kPi / 2.0}, {kPi / 2.0, kPi}};
    r.boundary_gamma = {kPi / 2.0};
  } else if (mu < ms) {
    r.regime = StableRegime::BelowCritical;
    r.stable_gamma = {{0.0, kPi}};
  } else {
    r.regime = StableRegime::AboveCritical;
    const double g = gamma_mu(mu);
    r.stable_gamma = {{0.0, g}, {kPi - g, kPi}};
    r.boundary_gamma = {g, kPi - g};
  }
  for (double g : r.boundary_gamma) {
    const auto arcs = stable_arcs(mu, g);
    r.arcs.insert(r.arcs.end(), arcs.begin(), arcs.end());
    r.ellipses.push_back(stable_ellipse(g));
  }
  return r;
}

RegionRaster admissible_region_raster(const GridSpec& grid) {
  return rasterize(grid, Predicate::AdmissibilityProduct, [](double b1, double b2) {
    return is_admissible(b1, b2) ? CellLabel::Admissible : CellLabel::Inadmissible;
  });
}

std::vector<Polyline> admissible_boundary(const GridSpec& grid, int n) {
  std::vector<Polyline> out;
  std::vector<Point2> left;
  std::vector<Point2> right;
  for (double b1 : linspace(grid.x_min, grid.x_max, n)) {
    if (b1 == 1.0) continue;
    (b1 < 1.0 ? left : right).push_back({b1, 1.0 / (b1 - 1.0) + 1.0});
  }
  append_clipped(out, "admissibility", left, grid);
  append_clipped(out, "admissibility", right, grid);
  return out;
}

RegionRaster triangular_region_raster(TriangularSpace space, const GridSpec& grid, double mu) {
  if (space == TriangularSpace::Parameter) {
    return rasterize(grid, Predicate::BoundaryCurves, [](double d1, double d2) {
      const bool lines = d1 > 0.0 && d2 > 0.0 && d2 < d1 + 1.0 && d2 > d1 - 1.0 && d2 > 1.0 - d1;
      // Below delta2^3 = 1/(delta1^3 - 1) + 1 on the delta1 > 1 side; no constraint otherwise.
      const bool curve = d1 <= 1.0 || d2 * d2 * d2 < 1.0 / (d1 * d1 * d1 - 1.0) + 1.0;
      return lines && curve ? CellLabel::TriangularExists : CellLabel::NoTriangular;
    });
  }
  return rasterize(grid, Predicate::RestrictedConfiguration, [mu](double x, double y) {
    if (y == 0.0) return CellLabel::NoTriangular;
    const double r1 = std::hypot(x + mu, y);
    const double r2 = std::hypot(x - 1.0 + mu, y);
    return is_admissible(r1 * r1 * r1, r2 * r2 * r2) ? CellLabel::TriangularExists : CellLabel::NoTriangular;
  });
}

std::vector<Polyline> triangular_boundaries(const GridSpec& grid, int n) {
  std::vector<Polyline> out;
  std::vector<Point2> a, b, c, d;
  for (double d1 : linspace(grid.x_min, grid.x_max, n)) {
    a.push_back({d1, d1 + 1.0});
    b.push_back({d1, d1 - 1.0});
    c.push_back({d1, 1.0 - d1});
    if (d1 > 1.0) d.push_back({d1, std::cbrt(1.0 / (d1 * d1 * d1 - 1.0) + 1.0)});
  }
  append_clipped(out, "delta2=delta1+1", a, grid);
  append_clipped(out, "delta2=delta1-1", b, grid);
  append_clipped(out, "delta2=1-delta1", c, grid);
  append_clipped(out, "admissibility", d, grid);
  return out;
}

RegionRaster collinear_region_raster(Interval interval, double mu, const GridSpec& grid) {
  if (!(mu > 0.0 && mu <= 0.5)) throw Error(ErrorCode::InvalidArgument, "mu must lie in (0, 1/2]");
  return rasterize(grid, Predicate::RootCountTheorems, [&](double b1, double b2) {
    const SystemParams p = SystemParams::make(mu, b1, b2);
    if (!p.admissible) return CellLabel::Inadmissible;
    const RootCountPrediction pred = predicted_root_count(p, interval);
    if (pred.rule == CountRule::Unspecified) return CellLabel::Unspecified;
    if (pred.double_root) return CellLabel::DoubleRoot;
    switch (pred.roots) {
      case 0: return CellLabel::ZeroRoots;
      case 1: return CellLabel::OneRoot;
      default: return CellLabel::TwoRoots;
    }
  });
}

std::vector<Polyline> collinear_boundaries(Interval interval, double mu, const GridSpec& grid, int n) {
  std::vector<Polyline> out;
  const auto swap_xy = [](std::vector<Point2> pts) {
    for (auto& p : pts) std::swap(p.x, p.y);
    return pts;
  };
  // Curves for beta1 < 0 < beta2 at mass ratio m; the other sign pattern is the mirror image.
  const auto outer = [&](double m) {
    std::vector<Point2> pts;
    for (double t : linspace(-6.0, 3.0, n)) {
      const double xs = -m - std::pow(10.0, t);
      pts.push_back({-beta1_star(xs, m), beta2_star(xs, m)});
    }
    return pts;
  };
  const auto inner = [&](double m, bool lower) {
    const double xr1 = critical_root_r1(m);
    std::vector<Point2> pts;
    for (double xs : linspace(-m, xr1, n)) {
      const double b1 = beta1_star(xs, m);
      pts.push_back({b1, lower ? b1 / (b1 - 1.0) : beta2_star(xs, m)});
    }
    return pts;
  };
  switch (interval) {
    case Interval::I1:
      append_clipped(out, "double_root", outer(mu), grid);
      break;
    case Interval::I3:
      append_clipped(out, "double_root", swap_xy(outer(1.0 - mu)), grid);
      break;
    case Interval::I2:
      append_clipped(out, "double_root", inner(mu, false), grid);
      append_clipped(out, "band_lower", inner(mu, true), grid);
      append_clipped(out, "double_root", swap_xy(inner(1.0 - mu, false)), grid);
      append_clipped(out, "band_lower", swap_xy(inner(1.0 - mu, true)), grid);
      break;
  }
  const auto adm = admissible_boundary(grid, n);
  out.insert(out.end(), adm.begin(), adm.end());
  return out;
}

RegionRaster stability_discriminant_raster(const GridSpec& grid) {
  return rasterize(grid, Predicate::StabilityDiscriminant,
                   [](double mu, double gamma) { return stability_label(F_stability(mu, gamma)); });
}

RegionRaster stable_configuration_raster(double mu, const GridSpec& grid) {
  return rasterize(grid, Predicate::StabilityDiscriminant, [mu](double x, double y) {
    const auto l = restricted_stability(mu, std::hypot(x + mu, y), std::hypot(x - 1.0 + mu, y));
    return l.value_or(CellLabel::OutsideRestricted);
  });
}

RegionRaster stable_parameter_raster(double mu, const GridSpec& grid) {
  return rasterize(grid, Predicate::StabilityDiscriminant, [mu](double d1, double d2) {
    return restricted_stability(mu, d1, d2).value_or(CellLabel::OutsideRestricted);
  });
}

double default_mu(int figure) {
  switch (figure) {
    case 16:
    case 19: return 0.01;
    case 17:
    case 20: return critical_mu();
    case 18:
    case 21: return 0.2;
    default: return 0.3;
  }
}

GridSpec default_grid(int figure, int res) {
  switch (figure) {
    case 5: return {-4.0, 4.0, -4.0, 4.0, res, res, "beta1", "beta2"};
    case 6: return {0.0, 3.0, 0.0, 3.0, res, res, "delta1", "delta2"};
    case 7: return {-2.5, 2.5, -2.5, 2.5, res, res, "x", "y"};
    case 11:
    case 12:
    case 13: return {-3.0, 3.0, -3.0, 3.0, res, res, "beta1", "beta2"};
    case 15: return {0.0, 0.5, 0.0, kPi, res, res, "mu", "gamma"};
    case 16:
    case 17:
    case 18: return {-2.0, 2.0, -2.0, 2.0, res, res, "x", "y"};
    case 19:
    case 20:
    case 21: return {0.0, 2.5, 0.0, 2.5, res, res, "delta1", "delta2"};
    default: break;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown figure " + std::to_string(figure));
}

FigureDataset make_figure(int figure, double mu, const GridSpec& grid) {
  FigureDataset d;
  d.figure = figure;
  d.mu = mu;
  switch (figure) {
    case 5:
      d.title = "admissible beta region";
      d.raster = admissible_region_raster(grid);
      d.polylines = admissible_boundary(grid);
      break;
    case 6:
      d.title = "triangular existence, parameter space";
      d.raster = triangular_region_raster(TriangularSpace::Parameter, grid, mu);
      d.polylines = triangular_boundaries(grid);
      break;
    case 7:
      d.title = "triangular existence, configuration space";
      d.raster = triangular_region_raster(TriangularSpace::Configuration, grid, mu);
      break;
    case 11:
    case 12:
    case 13: {
      const Interval iv = figure == 11 ? Interval::I1 : figure == 12 ? Interval::I2 : Interval::I3;
      d.title = std::string("collinear root counts on ") + std::string(to_string(iv));
      d.raster = collinear_region_raster(iv, mu, grid);
      d.polylines = collinear_boundaries(iv, mu, grid);
      break;
    }
    case 15: {
      d.title = "stability discriminant over (mu, gamma)";
      d.raster = stability_discriminant_raster(grid);
      Polyline lo{"F=0", {}};
      Polyline hi{"F=0", {}};
      for (double m : linspace(critical_mu(), 0.5, 256)) {
        const double g = m <= critical_mu() ? kPi / 2.0 : gamma_mu(m);
        lo.points.push_back({m, g});
        hi.points.push_back({m, kPi - g});
      }
      d.polylines = {lo, hi};
      break;
    }
    case 16:
    case 17:
    case 18:
    case 19:
    case 20:
    case 21: {
      const bool config = figure <= 18;
      d.title = config ? "stable region, configuration space" : "stable region, parameter space";
      d.raster = config ? stable_configuration_raster(mu, grid) : stable_parameter_raster(mu, grid);
      d.report = stable_region_report(mu);
      if (config) {
        d.arcs = d.report->arcs;
      } else {
        d.ellipses = d.report->ellipses;
      }
      break;
    }
    default:
      throw Error(ErrorCode::InvalidArgument, "unknown figure " + std::to_string(figure));
  }
  return d;
}

}  // namespace rc3bp
