#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rc3bp/collinear.hpp"
#include "rc3bp/params.hpp"

namespace rc3bp {

/// Uniform cell-centred grid over [x_min, x_max] x [y_min, y_max].
struct GridSpec {
  double x_min = -1.0;
  double x_max = 1.0;
  double y_min = -1.0;
  double y_max = 1.0;
  int nx = 512;
  int ny = 512;
  std::string x_name = "x";
  std::string y_name = "y";

  double x_at(int i) const { return x_min + (x_max - x_min) * (i + 0.5) / nx; }
  double y_at(int j) const { return y_min + (y_max - y_min) * (j + 0.5) / ny; }
};

enum class CellLabel {
  Admissible,
  Inadmissible,
  TriangularExists,
  NoTriangular,
  ZeroRoots,
  OneRoot,
  TwoRoots,
  DoubleRoot,
  Unspecified,
  LinearlyStable,
  LyapunovUnstable,
  UnstableFZero,
  UnstableFOne,
  OutsideRestricted,
};

std::string_view to_string(CellLabel l) noexcept;

/// Predicate that produced a cell label.
enum class Predicate {
  AdmissibilityProduct,
  BoundaryCurves,
  RestrictedConfiguration,
  RootCountTheorems,
  StabilityDiscriminant,
};

std::string_view to_string(Predicate p) noexcept;

/// Row-major (j * nx + i) labels over a grid.
struct RegionRaster {
  GridSpec grid;
  std::vector<CellLabel> labels;
  std::vector<Predicate> provenance;

  CellLabel at(int i, int j) const { return labels[static_cast<std::size_t>(j * grid.nx + i)]; }
};

struct Point2 {
  double x;
  double y;
};

struct Polyline {
  std::string name;
  std::vector<Point2> points;
};

enum class ArcBranch { Upper, Lower };

/// Circle of constant gamma in configuration space; only its part on the
/// branch's side of the axis is an equilibrium locus.
struct StableArc {
  Point2 center{};
  double radius = 0.0;
  ArcBranch branch = ArcBranch::Upper;
  double gamma = 0.0;
  double mu = 0.0;

  /// n points from body 1 to body 2 along the branch side (endpoints included).
  std::vector<Point2> sample(int n) const;
};

/// Ellipse d1^2 + d2^2 + 2 cos(gamma) d1 d2 = 1 centred at the origin.
/// semi_axes[0] lies along direction `rotation`, semi_axes[1] normal to it.
struct StableEllipse {
  std::array<double, 2> semi_axes{};
  double rotation = 0.0;
  double gamma = 0.0;

  std::vector<Point2> sample(int n) const;
  /// The part in the first quadrant, from (1, 0) to (0, 1).
  std::vector<Point2> sample_first_quadrant(int n) const;
};

/// Throws DegenerateGamma for gamma outside (0, pi).
std::array<StableArc, 2> stable_arcs(double mu, double gamma);
StableEllipse stable_ellipse(double gamma);

enum class StableRegime { BelowCritical, AtCritical, AboveCritical };

std::string_view to_string(StableRegime r) noexcept;

struct StableRegionReport {
  double mu = 0.0;
  StableRegime regime = StableRegime::BelowCritical;
  /// Open gamma intervals of linear stability.
  std::vector<std::array<double, 2>> stable_gamma;
  /// Gammas on which F = 0.
  std::vector<double> boundary_gamma;
  std::vector<StableArc> arcs;
  std::vector<StableEllipse> ellipses;
};

/// mu == mu* is detected within 1e-12.
StableRegionReport stable_region_report(double mu);

RegionRaster admissible_region_raster(const GridSpec& grid);
/// Both branches of beta2 = 1/(beta1 - 1) + 1 clipped to the grid window.
std::vector<Polyline> admissible_boundary(const GridSpec& grid, int n = 1024);

enum class TriangularSpace { Parameter, Configuration };

/// Parameter space labels (d1, d2) from the bounding lines and the
/// admissibility curve. Configuration space labels (x, y) through the induced
/// distances rho_i = d_i and depends on mu.
RegionRaster triangular_region_raster(TriangularSpace space, const GridSpec& grid, double mu = 0.5);
std::vector<Polyline> triangular_boundaries(const GridSpec& grid, int n = 1024);

/// Grid axes are (beta1, beta2). Labels come from the root-count theorems.
RegionRaster collinear_region_raster(Interval interval, double mu, const GridSpec& grid);
/// Double-root curves bounding the bands for this interval, plus the admissibility curve.
std::vector<Polyline> collinear_boundaries(Interval interval, double mu, const GridSpec& grid, int n = 1024);

/// (mu, gamma) plane coloured by the stability discriminant.
RegionRaster stability_discriminant_raster(const GridSpec& grid);
/// Restricted configuration space (x, y) at fixed mu.
RegionRaster stable_configuration_raster(double mu, const GridSpec& grid);
/// Restricted parameter space (d1, d2) at fixed mu.
RegionRaster stable_parameter_raster(double mu, const GridSpec& grid);

/// A figure's cell grid together with its exact overlays.
struct FigureDataset {
  int figure = 0;
  std::string title;
  double mu = 0.0;
  RegionRaster raster;
  std::vector<Polyline> polylines;
  std::vector<StableArc> arcs;
  std::vector<StableEllipse> ellipses;
  std::optional<StableRegionReport> report;
};

inline constexpr std::array<int, 13> kFigures{5, 6, 7, 11, 12, 13, 15, 16, 17, 18, 19, 20, 21};

/// Default mass ratio used for a figure (figure 17/20 use mu*).
double default_mu(int figure);
/// Default window for a figure at the given resolution.
GridSpec default_grid(int figure, int resolution = 512);

/// Throws InvalidArgument for unknown figure numbers.
FigureDataset make_figure(int figure, double mu, const GridSpec& grid);

}  // namespace rc3bp
