#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "reproduce.hpp"
#include "rc3bp/integrate.hpp"
#include "serialize.hpp"

namespace rc3bp::cli {

namespace {

namespace fs = std::filesystem;

struct UsageError : std::runtime_error {
  UsageError(const std::string& flag, const std::string& msg) : std::runtime_error(flag + ": " + msg) {}
};

void require(bool ok, const std::string& flag, const std::string& msg) {
  if (!ok) throw UsageError(flag, msg);
}

bool is_usage_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::CollisionSingularity:
    case ErrorCode::StepSizeUnderflow:
    case ErrorCode::AtPrimary:
    case ErrorCode::RootNotBracketed:
    case ErrorCode::Io: return false;
    default: return true;
  }
}

std::vector<double> parse_list(const std::string& text, std::size_t n, const std::string& flag) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      require(used == item.size(), flag, "cannot parse '" + item + "'");
    } catch (const std::logic_error&) {
      throw UsageError(flag, "cannot parse '" + item + "'");
    }
  }
  require(v.size() == n, flag, fmt::format("expected {} comma-separated numbers", n));
  for (double x : v) require(std::isfinite(x), flag, "values must be finite");
  return v;
}

struct ReducedFlags {
  double mu = 0.0;
  double beta1 = 0.0;
  double beta2 = 0.0;

  void add(CLI::App* app, bool required = true) {
    auto* a = app->add_option("--mu", mu, "mass ratio in (0, 1/2]");
    auto* b = app->add_option("--beta1", beta1, "reduced coupling of body 1");
    auto* c = app->add_option("--beta2", beta2, "reduced coupling of body 2");
    if (required) {
      a->required();
      b->required();
      c->required();
    }
  }

  SystemParams make() const {
    require(std::isfinite(mu) && mu > 0.0 && mu <= 0.5, "--mu", "must lie in (0, 1/2]");
    require(std::isfinite(beta1), "--beta1", "must be finite");
    require(std::isfinite(beta2), "--beta2", "must be finite");
    return SystemParams::make(mu, beta1, beta2);
  }
};

void print(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Planar circular restricted charged three-body problem"};
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all", "Print help for every subcommand");
  app.footer(
      "Exit codes: 0 success, 2 usage or validation error, 3 numeric or IO failure.\n"
      "RC3BP_THREADS caps the worker threads used for region rasters.\n"
      "JSON goes to stdout with sorted keys; grids and trajectories are CSV.");

  // validate
  auto* validate = app.add_subcommand("validate", "Reduce and check admissibility of a parameter set");
  ReducedFlags vr;
  vr.add(validate, false);
  std::optional<double> m1, m2, m3, q1, q2, q3;
  double G = 1.0;
  double k = 1.0;
  validate->add_option("--m1", m1, "mass of body 1 (physical input)");
  validate->add_option("--m2", m2, "mass of body 2");
  validate->add_option("--m3", m3, "mass of body 3 (default 0)");
  validate->add_option("--q1", q1, "charge of body 1");
  validate->add_option("--q2", q2, "charge of body 2");
  validate->add_option("--q3", q3, "charge of body 3, nonzero");
  validate->add_option("--G", G, "gravitational constant")->capture_default_str();
  validate->add_option("--k", k, "Coulomb constant")->capture_default_str();
  validate->footer("Give either --mu --beta1 --beta2, or --m1 --m2 --q1 --q2 --q3 [--m3 --G --k].");

  // two-body
  auto* two = app.add_subcommand("two-body", "Classify the two charged body problem");
  double t_m1 = 1.0, t_m2 = 1.0, t_q1 = 0.0, t_q2 = 0.0, t_G = 1.0, t_k = 1.0;
  std::optional<double> kstar, ang;
  two->add_option("--m1", t_m1, "mass of body 1")->required();
  two->add_option("--m2", t_m2, "mass of body 2")->required();
  two->add_option("--q1", t_q1, "charge of body 1")->required();
  two->add_option("--q2", t_q2, "charge of body 2")->required();
  two->add_option("--G", t_G, "gravitational constant")->capture_default_str();
  two->add_option("--k", t_k, "Coulomb constant")->capture_default_str();
  two->add_option("--kstar", kstar, "energy k* > 0; with --l emits the hyperbola");
  two->add_option("--l", ang, "angular momentum, nonzero");

  // equilibria
  auto* eq = app.add_subcommand("equilibria", "Triangular or collinear equilibria");
  ReducedFlags er;
  er.add(eq);
  std::string kind;
  eq->add_option("--kind", kind, "triangular | collinear")->required()->check(CLI::IsMember({"triangular", "collinear"}));

  // stability
  auto* stab = app.add_subcommand("stability", "Linear stability at L4 or at a given point");
  ReducedFlags sr;
  sr.add(stab);
  std::string point;
  stab->add_option("--point", point, "x,y of the equilibrium (default L4)");

  // critical-roots
  auto* crit = app.add_subcommand("critical-roots", "Roots x_r1, x_r2 of the band function G");
  double c_mu = 0.0;
  bool series = false;
  crit->add_option("--mu", c_mu, "mass ratio in (0, 1/2]")->required();
  crit->add_flag("--series", series, "also emit the small-mu series and its difference");

  // regions
  auto* reg = app.add_subcommand("regions", "Region raster and overlays for one figure");
  int figure = 0;
  std::optional<double> r_mu;
  std::string r_out;
  int resolution = 512;
  reg->add_option("--figure", figure, "5|6|7|11|12|13|15|16|17|18|19|20|21")->required();
  reg->add_option("--mu", r_mu, "mass ratio (default depends on the figure)");
  reg->add_option("--out", r_out, "CSV path; overlays go to the same path with .json")->required();
  reg->add_option("--resolution", resolution, "cells per axis")->capture_default_str();
  reg->footer("CSV columns: x,y,label (i fastest, rows from y_min). JSON: grid, provenance, polylines, arcs, ellipses.");

  // integrate
  auto* integ = app.add_subcommand("integrate", "Integrate the rotating-frame flow");
  ReducedFlags ir;
  ir.add(integ);
  std::string state;
  double t_end = 0.0;
  double tol = 1e-12;
  double every = 0.0;
  double guard = 1e-6;
  std::string i_out;
  integ->add_option("--state", state, "x,y,px,py")->required();
  integ->add_option("--t-end", t_end, "final time > 0")->required();
  integ->add_option("--tol", tol, "absolute and relative tolerance in [1e-14, 1e-3]")->capture_default_str();
  integ->add_option("--every", every, "sample spacing; 0 emits only the endpoints")->capture_default_str();
  integ->add_option("--collision-radius", guard, "stop when closer to a primary")->capture_default_str();
  integ->add_option("--out", i_out, "CSV path (default stdout)");
  integ->footer("CSV columns: t,x,y,px,py,H.");

  // reproduce-all
  auto* repro = app.add_subcommand("reproduce-all", "Emit every figure dataset and a manifest");
  std::string dir;
  int rp_res = 512;
  repro->add_option("--out", dir, "output directory")->required();
  repro->add_option("--resolution", rp_res, "cells per axis")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (validate->parsed()) {
      const bool physical = m1 || m2 || m3 || q1 || q2 || q3 || validate->count("--G") || validate->count("--k");
      const bool reduced = validate->count("--mu") || validate->count("--beta1") || validate->count("--beta2");
      require(!(physical && reduced), "--mu", "cannot be combined with physical inputs");
      json j;
      if (physical) {
        for (auto [flag, v] : {std::pair{"--m1", m1}, {"--m2", m2}, {"--q1", q1}, {"--q2", q2}, {"--q3", q3}}) {
          require(v.has_value(), flag, "required with physical inputs");
        }
        PhysicalSystem sys{*m1, *m2, m3.value_or(0.0), *q1, *q2, *q3, G, k};
        require(*m1 > 0.0, "--m1", "must be positive");
        require(*m2 > 0.0, "--m2", "must be positive");
        require(sys.m3 >= 0.0, "--m3", "must be nonnegative");
        require(*q3 != 0.0, "--q3", "must be nonzero");
        require(G > 0.0, "--G", "must be positive");
        require(k > 0.0, "--k", "must be positive");
        const SystemParams p = reduce(sys);
        j = to_json(p);
        j["primary_coupling"] = primary_coupling(sys);
      } else {
        require(validate->count("--mu") > 0, "--mu", "required");
        require(validate->count("--beta1") > 0, "--beta1", "required");
        require(validate->count("--beta2") > 0, "--beta2", "required");
        j = to_json(vr.make());
      }
      const double b1 = j["beta1"];
      const double b2 = j["beta2"];
      j["region"] = std::string(to_string(classify_region(b1, b2)));
      j["regime1"] = std::string(to_string(force_regime(b1)));
      j["regime2"] = std::string(to_string(force_regime(b2)));
      print(out, j);
    } else if (two->parsed()) {
      require(t_m1 > 0.0, "--m1", "must be positive");
      require(t_m2 > 0.0, "--m2", "must be positive");
      const auto cfg = two_body::TwoBodyConfig::make(t_m1, t_m2, t_q1, t_q2, t_G, t_k);
      const auto cls = two_body::classify(cfg);
      json j = {{"classification", std::string(to_string(cls))}, {"C", cfg.C}, {"mu_red", cfg.mu_red}};
      require(kstar.has_value() == ang.has_value(), kstar ? "--l" : "--kstar", "--kstar and --l go together");
      if (kstar) {
        require(cls == two_body::OrbitClass::Repulsive, "--kstar", "orbit elements exist only for repulsive coupling");
        require(*kstar > 0.0, "--kstar", "must be positive");
        require(*ang != 0.0, "--l", "must be nonzero");
        j["orbit"] = to_json(two_body::hyperbolic_orbit(cfg, *kstar, *ang));
      }
      print(out, j);
    } else if (eq->parsed()) {
      const SystemParams p = er.make();
      if (kind == "triangular") {
        require(triangular_exists(p), "--beta1/--beta2", "no triangular equilibrium for these parameters");
        print(out, to_json(triangular_points(p)));
      } else {
        print(out, to_json(find_collinear(p)));
      }
    } else if (stab->parsed()) {
      const SystemParams p = sr.make();
      if (point.empty()) {
        try {
          print(out, to_json(classify_triangular(p)));
        } catch (const Error& e) {
          throw UsageError("--beta1/--beta2", e.what());
        }
      } else {
        const auto xy = parse_list(point, 2, "--point");
        print(out, to_json(stability_at(p, xy[0], xy[1])));
      }
    } else if (crit->parsed()) {
      require(std::isfinite(c_mu) && c_mu > 0.0 && c_mu <= 0.5, "--mu", "must lie in (0, 1/2]");
      const CriticalRoots num = critical_roots(c_mu);
      json j = {{"mu", c_mu}, {"x_r1", num.x_r1}, {"x_r2", num.x_r2}};
      if (series) {
        const CriticalRoots ser = critical_roots_series(c_mu);
        j["series"] = {{"x_r1", ser.x_r1}, {"x_r2", ser.x_r2}};
        j["difference"] = {{"x_r1", ser.x_r1 - num.x_r1}, {"x_r2", ser.x_r2 - num.x_r2}};
      }
      print(out, j);
    } else if (reg->parsed()) {
      require(std::find(kFigures.begin(), kFigures.end(), figure) != kFigures.end(), "--figure",
              "must be one of 5 6 7 11 12 13 15 16 17 18 19 20 21");
      require(resolution >= 2 && resolution <= 8192, "--resolution", "must lie in [2, 8192]");
      const double mu = r_mu.value_or(default_mu(figure));
      require(std::isfinite(mu) && mu > 0.0 && mu <= 0.5, "--mu", "must lie in (0, 1/2]");
      const fs::path csv(r_out);
      require(csv.extension() != ".json", "--out", "the CSV path must not end in .json");
      const fs::path overlay = fs::path(csv).replace_extension(".json");
      const FigureDataset d = make_figure(figure, mu, default_grid(figure, resolution));
      write_figure(d, csv, overlay);
      print(out, {{"figure", figure},
                  {"mu", mu},
                  {"csv", csv.string()},
                  {"json", overlay.string()},
                  {"cells", d.raster.labels.size()}});
    } else if (integ->parsed()) {
      const SystemParams p = ir.make();
      const auto s = parse_list(state, 4, "--state");
      require(std::isfinite(t_end) && t_end > 0.0, "--t-end", "must be positive");
      require(tol >= 1e-14 && tol <= 1e-3, "--tol", "must lie in [1e-14, 1e-3]");
      require(std::isfinite(every) && every >= 0.0, "--every", "must be nonnegative");
      require(std::isfinite(guard) && guard >= 0.0, "--collision-radius", "must be nonnegative");
      const PhaseState s0(s[0], s[1], s[2], s[3]);
      const double r1 = std::hypot(s0.x() + p.mu, s0.y());
      const double r2 = std::hypot(s0.x() - 1.0 + p.mu, s0.y());
      require(r1 > 0.0 && r2 > 0.0, "--state", "starts on a primary");
      const Trajectory tr = integrate(p, s0, t_end, tol, {every, guard});
      std::ofstream file;
      if (!i_out.empty()) {
        file.open(i_out, std::ios::binary | std::ios::trunc);
        if (!file) throw Error(ErrorCode::Io, "cannot write " + i_out);
      }
      std::ostream& os = i_out.empty() ? out : file;
      os << "t,x,y,px,py,H\n";
      for (const auto& smp : tr.samples) {
        const auto& v = smp.state;
        os << fmt::format("{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}\n", smp.t, v.x(), v.y(), v.px(), v.py(),
                          hamiltonian(p, v));
      }
      if (tr.reason == Termination::CollisionApproach) {
        err << fmt::format("note: stopped at t={:.17g} on collision approach\n", tr.t_final);
      }
      if (!i_out.empty() && !file) throw Error(ErrorCode::Io, "write failed for " + i_out);
    } else if (repro->parsed()) {
      require(rp_res >= 2 && rp_res <= 8192, "--resolution", "must lie in [2, 8192]");
      const RunManifest m = reproduce_all(dir, rp_res);
      print(out, {{"out", dir}, {"files", m.entries.size() + 1}});
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return is_usage_code(e.code()) ? kExitUsage : kExitNumeric;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitOk;
}

}  // namespace rc3bp::cli
