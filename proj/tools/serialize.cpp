#include "serialize.hpp"

#include <fmt/format.h>

namespace rc3bp {

namespace {

json point(const Point2& p) { return json::array({p.x, p.y}); }

json points(const std::vector<Point2>& pts) {
  json a = json::array();
  for (const auto& p : pts) a.push_back(point(p));
  return a;
}

json grid_json(const GridSpec& g) {
  return {{"x_min", g.x_min}, {"x_max", g.x_max}, {"y_min", g.y_min}, {"y_max", g.y_max},
          {"nx", g.nx},       {"ny", g.ny},       {"x_name", g.x_name}, {"y_name", g.y_name}};
}

}  // namespace

std::string fmt_double(double v) { return fmt::format("{:.17g}", v); }

json to_json(const SystemParams& p) {
  return {{"mu", p.mu}, {"beta1", p.beta1}, {"beta2", p.beta2}, {"admissible", p.admissible}, {"swapped", p.swapped}};
}

json to_json(const two_body::HyperbolicOrbit& o) {
  return {{"c", o.c},         {"e", o.e},   {"theta_prime", o.theta_prime}, {"theta_e", o.theta_e},
          {"r0", o.r0},       {"rho_star", o.rho_star}};
}

json to_json(const TriangularPair& t) {
  return {{"L4", {{"x", t.xL}, {"y", t.yL}}},
          {"L5", {{"x", t.xL}, {"y", -t.yL}}},
          {"rho1", t.rho1},
          {"rho2", t.rho2},
          {"location", std::string(to_string(t.location))}};
}

json to_json(const std::vector<CollinearRoot>& roots) {
  json a = json::array();
  for (const auto& r : roots) {
    a.push_back({{"x", r.x},
                 {"interval", std::string(to_string(r.interval))},
                 {"multiplicity", r.multiplicity},
                 {"F_residual", r.residual}});
  }
  return a;
}

json to_json(const StabilityReport& r) {
  json ev = json::array();
  for (const auto& z : r.eigenvalues) ev.push_back(json::array({z.real(), z.imag()}));
  return {{"eigenvalues", ev},
          {"F", r.F},
          {"gamma", r.gamma ? json(*r.gamma) : json(nullptr)},
          {"classification", std::string(to_string(r.classification))},
          {"x", r.x},
          {"y", r.y}};
}

json to_json(const StableRegionReport& r) {
  json iv = json::array();
  for (const auto& g : r.stable_gamma) iv.push_back(json::array({g[0], g[1]}));
  return {{"mu", r.mu},
          {"regime", std::string(to_string(r.regime))},
          {"stable_gamma", iv},
          {"boundary_gamma", r.boundary_gamma}};
}

json overlay_json(const FigureDataset& d, int samples) {
  json polylines = json::array();
  for (const auto& p : d.polylines) polylines.push_back({{"name", p.name}, {"points", points(p.points)}});
  json arcs = json::array();
  for (const auto& a : d.arcs) {
    arcs.push_back({{"center", point(a.center)},
                    {"radius", a.radius},
                    {"branch", a.branch == ArcBranch::Upper ? "upper" : "lower"},
                    {"gamma", a.gamma},
                    {"points", points(a.sample(samples))}});
  }
  json ellipses = json::array();
  for (const auto& e : d.ellipses) {
    ellipses.push_back({{"semi_axes", e.semi_axes},
                        {"rotation", e.rotation},
                        {"gamma", e.gamma},
                        {"points", points(e.sample_first_quadrant(samples))}});
  }
  json j = {{"figure", d.figure},
            {"title", d.title},
            {"mu", d.mu},
            {"grid", grid_json(d.raster.grid)},
            {"provenance", d.raster.provenance.empty() ? "" : std::string(to_string(d.raster.provenance.front()))},
            {"polylines", polylines},
            {"arcs", arcs},
            {"ellipses", ellipses}};
  if (d.report) j["report"] = to_json(*d.report);
  return j;
}

void write_raster_csv(std::ostream& os, const RegionRaster& r) {
  fmt::memory_buffer buf;
  fmt::format_to(std::back_inserter(buf), "x,y,label\n");
  for (int j = 0; j < r.grid.ny; ++j) {
    const double y = r.grid.y_at(j);
    for (int i = 0; i < r.grid.nx; ++i) {
      fmt::format_to(std::back_inserter(buf), "{:.17g},{:.17g},{}\n", r.grid.x_at(i), y, to_string(r.at(i, j)));
    }
    os.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    buf.clear();
  }
}

}  // namespace rc3bp
