// One line per acceptance criterion; exit status is the number of failures.
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <Eigen/SVD>
#include <fmt/format.h>

#include "oracles.hpp"
#include "rc3bp/collinear.hpp"
#include "rc3bp/dynamics.hpp"
#include "rc3bp/integrate.hpp"
#include "rc3bp/regions.hpp"
#include "rc3bp/stability.hpp"
#include "rc3bp/triangular.hpp"
#include "rc3bp/two_body.hpp"
#include "reproduce.hpp"

using namespace rc3bp;
namespace fs = std::filesystem;
using std::numbers::pi;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void expect(bool ok, const std::string& why) {
    if (!ok && pass) detail = why;
    pass = pass && ok;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

constexpr Interval kIntervals[] = {Interval::I1, Interval::I2, Interval::I3};

Outcome equilibrium_residuals() {
  Outcome o;
  const auto t0 = Clock::now();
  std::mt19937_64 rng(1001);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto d = oracle::draw_triangular(rng);
    const auto p = SystemParams::make(d.mu, d.b1, d.b2);
    const auto t = triangular_points(p);
    worst = std::max({worst, omega_gradient(p, t.xL, t.yL).norm(), omega_gradient(p, t.xL, -t.yL).norm()});
  }
  const double secs = seconds_since(t0);
  o.expect(worst <= 1e-11, fmt::format("max |grad Omega| = {:.3g}", worst));
  o.expect(secs < 5.0, fmt::format("runtime {:.2f} s", secs));
  if (o.pass) o.detail = fmt::format("max |grad Omega| = {:.3g}, {:.2f} s", worst, secs);
  return o;
}

Outcome root_count_conformance() {
  Outcome o;
  const auto t0 = Clock::now();
  std::mt19937_64 rng(1002);
  int cases = 0, two = 0;
  for (auto region : oracle::kRegions) {
    for (int i = 0; i < 1000; ++i) {
      const auto d = oracle::draw_in(region, rng);
      const auto p = SystemParams::make(d.mu, d.b1, d.b2);
      for (Interval iv : kIntervals) {
        const auto pred = predicted_root_count(p, iv);
        const int n = static_cast<int>(find_collinear_in(p, iv).size());
        const std::string where = fmt::format("{} {} mu={:.17g} b=({:.17g},{:.17g}) scan={} predicted={}",
                                              to_string(region), to_string(iv), d.mu, d.b1, d.b2, n, pred.roots);
        o.expect(pred.rule != CountRule::Unspecified, "unspecified rule at " + where);
        if (pred.rule == CountRule::ExactlyOne) o.expect(n == 1, where);
        o.expect(n <= 2, where);
        o.expect(n == pred.roots, where);
        ++cases;
        two += n == 2;
      }
    }
  }
  const double secs = seconds_since(t0);
  o.expect(secs < 60.0, fmt::format("runtime {:.2f} s", secs));
  if (o.pass) o.detail = fmt::format("{} region/interval cases, {} with two roots, {:.2f} s", cases, two, secs);
  return o;
}

Outcome eigenvalue_cross_check() {
  Outcome o;
  std::mt19937_64 rng(1003);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto d = oracle::draw_triangular(rng);
    const auto p = SystemParams::make(d.mu, d.b1, d.b2);
    const auto t = triangular_points(p);
    const auto closed = triangular_eigenvalues(F_stability(p.mu, gamma_of(p)));
    worst = std::max(worst, spectrum_distance(closed, dense_eigenvalues(linearization(p, t.xL, t.yL))));
  }
  o.expect(worst <= 1e-10, fmt::format("max eigenvalue distance {:.3g}", worst));

  // F = 0 at mu = 1/2, gamma = arcsin(1/3); any rho1 on that arc works.
  const double g = std::asin(1.0 / 3.0), r1 = 0.8, c = std::cos(g);
  const double r2 = -r1 * c + std::sqrt(r1 * r1 * c * c - r1 * r1 + 1.0);
  const auto p = SystemParams::make(0.5, r1 * r1 * r1, r2 * r2 * r2);
  const auto t = triangular_points(p);
  const Eigen::Matrix4cd B = linearization(p, t.xL, t.yL).cast<std::complex<double>>() -
                             std::complex<double>(0.0, std::sqrt(0.5)) * Eigen::Matrix4cd::Identity();
  const auto sv = Eigen::JacobiSVD<Eigen::Matrix4cd>(B).singularValues();
  o.expect(sv(3) < 1e-10 && sv(2) > 1e-6, fmt::format("singular values s3={:.3g} s4={:.3g}", sv(2), sv(3)));
  if (o.pass) o.detail = fmt::format("max distance {:.3g}; at F=0 s3={:.3g}, s4={:.3g}", worst, sv(2), sv(3));
  return o;
}

Outcome critical_constants() {
  Outcome o;
  const double ms = critical_mu();
  const double f0 = F_stability(ms, pi / 2.0);
  const double dg = std::abs(gamma_mu(0.5) - std::asin(1.0 / 3.0));
  o.expect(std::abs(ms - (0.5 - std::sqrt(2.0) / 3.0)) == 0.0, "mu* mismatch");
  o.expect(std::abs(f0) <= 1e-14, fmt::format("F(mu*, pi/2) = {:.3g}", f0));
  o.expect(dg <= 1e-15, fmt::format("|gamma_mu(1/2) - arcsin(1/3)| = {:.3g}", dg));
  double lo = 2.0, hi = -9.0;
  for (int i = 0; i < 100; ++i) {
    for (int j = 0; j < 100; ++j) {
      const double F = F_stability(0.5 * i / 99.0, pi * j / 99.0);
      lo = std::min(lo, F);
      hi = std::max(hi, F);
    }
  }
  o.expect(lo >= -8.0 && hi <= 1.0, fmt::format("F range [{:.17g}, {:.17g}]", lo, hi));
  if (o.pass) o.detail = fmt::format("F(mu*,pi/2)={:.3g}, gamma gap {:.3g}, F in [{:.6g}, {:.6g}]", f0, dg, lo, hi);
  return o;
}

Outcome small_mu_series() {
  Outcome o;
  std::string d;
  for (double mu : {0.005, 0.01, 0.02}) {
    const auto num = critical_roots(mu);
    const auto ser = critical_roots_series(mu);
    const double e1 = std::abs(ser.x_r1 - num.x_r1), e2 = std::abs(ser.x_r2 - num.x_r2);
    o.expect(e1 <= 10.0 * std::pow(mu, 5.0), fmt::format("mu={} x_r1 error {:.3g} > {:.3g}", mu, e1, 10.0 * std::pow(mu, 5.0)));
    o.expect(e2 <= 10.0 * std::pow(mu, 1.25), fmt::format("mu={} x_r2 error {:.3g} > {:.3g}", mu, e2, 10.0 * std::pow(mu, 1.25)));
    d += fmt::format("mu={}: {:.2g}/{:.2g} ", mu, e1, e2);
  }
  for (double mu : {0.1, 0.25, 0.5}) {
    const double e = std::abs(critical_roots(mu).x_r2 + critical_root_r1(1.0 - mu));
    o.expect(e <= 1e-12, fmt::format("identity gap {:.3g} at mu={}", e, mu));
  }
  if (o.pass) o.detail = d + "; identity holds";
  return o;
}

Outcome mirror_antisymmetry() {
  Outcome o;
  std::mt19937_64 rng(1006);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int n = 0; n < 10000;) {
    const double mu = 0.001 + 0.998 * u(rng);
    const double b1 = -5.0 + 10.0 * u(rng), b2 = -5.0 + 10.0 * u(rng);
    const double x = -4.0 + 8.0 * u(rng);
    if (std::abs(x + mu) < 1e-3 || std::abs(x + mu - 1.0) < 1e-3) continue;
    const auto p = SystemParams::make(mu, b1, b2);
    const auto [pm, xm] = mirror(p, x);
    const double sum = collinear_F(pm, xm) + collinear_F(p, x);
    const double r1 = std::abs(x + mu), r2 = std::abs(x + mu - 1.0);
    const double scale = std::abs(x) + std::abs(b1) * (1.0 - mu) / (r1 * r1) + std::abs(b2) * mu / (r2 * r2);
    worst = std::max(worst, std::abs(sum) / scale);
    ++n;
  }
  o.expect(worst <= 1e-12, fmt::format("max relative residual {:.3g}", worst));
  int sets = 0;
  for (int n = 0; n < 100; ++n) {
    const auto d = oracle::draw_in(oracle::kRegions[n % 7], rng);
    const auto p = SystemParams::make(d.mu, d.b1, d.b2);
    auto a = find_collinear(p);
    auto b = find_collinear(mirror(p, 0.0).first);
    bool same = a.size() == b.size();
    for (std::size_t k = 0; same && k < a.size(); ++k) {
      same = std::abs(a[k].x + b[b.size() - 1 - k].x) <= 1e-9 * std::max(1.0, std::abs(a[k].x));
    }
    o.expect(same, fmt::format("root sets differ at mu={:.17g} b=({:.17g},{:.17g})", d.mu, d.b1, d.b2));
    sets += same;
  }
  if (o.pass) o.detail = fmt::format("max relative residual {:.3g}; {} mirrored root sets coincide", worst, sets);
  return o;
}

Outcome integrator_conservation() {
  Outcome o;
  std::mt19937_64 rng(1007);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double tol = 1e-12;
  double worst = 0.0;
  for (int n = 0; n < 10;) {
    const auto p = SystemParams::make(0.01 + 0.49 * u(rng), 0.5 + 1.0 * u(rng), 0.5 + 1.0 * u(rng));
    const double x = -1.5 + 3.0 * u(rng), y = -1.5 + 3.0 * u(rng);
    if (std::hypot(x + p.mu, y) < 0.2 || std::hypot(x - 1.0 + p.mu, y) < 0.2) continue;
    const PhaseState s0(x, y, -y + 0.3 * (2.0 * u(rng) - 1.0), x + 0.3 * (2.0 * u(rng) - 1.0));
    // Non-singular: the orbit never comes within 0.05 of a primary.
    if (integrate(p, s0, 100.0, tol, {0.0, 0.05}).reason != Termination::Completed) continue;
    const double H0 = hamiltonian(p, s0);
    for (const auto& s : integrate(p, s0, 100.0, tol, {0.5, 0.0}).samples) {
      worst = std::max(worst, std::abs(hamiltonian(p, s.state) - H0));
    }
    ++n;
  }
  o.expect(worst <= 1e-9, fmt::format("max |H - H0| = {:.3g}", worst));
  double rest = 0.0;
  for (int n = 0; n < 10; ++n) {
    const auto d = oracle::draw_triangular(rng);
    const auto p = SystemParams::make(d.mu, d.b1, d.b2);
    const auto t = triangular_points(p);
    const PhaseState s0 = rest_state(t.xL, t.yL);
    for (const auto& s : integrate(p, s0, 10.0, tol, {0.5, 0.0}).samples) {
      rest = std::max(rest, (s.state.v - s0.v).cwiseAbs().maxCoeff());
    }
  }
  o.expect(rest < 1e-9, fmt::format("equilibrium drift {:.3g}", rest));
  if (o.pass) o.detail = fmt::format("max |H - H0| = {:.3g}, equilibrium drift {:.3g}", worst, rest);
  return o;
}

Outcome two_body_hyperbola() {
  Outcome o;
  std::mt19937_64 rng(1008);
  std::uniform_real_distribution<double> u(0.5, 2.0);
  double res = 0.0, ang = 0.0;
  for (int i = 0; i < 10; ++i) {
    const double mu = u(rng), C = -u(rng), k = u(rng);
    const double l = (i % 2 ? -1.0 : 1.0) * u(rng);
    const auto orb = two_body::hyperbolic_orbit(mu, C, k, l);
    const auto run = oracle::integrate_hyperbola(mu, C, k, l, 1e7 * orb.r0);
    const double target = l > 0.0 ? orb.theta_e : 2.0 * pi - orb.theta_e;
    res = std::max(res, run.max_residual);
    ang = std::max(ang, std::abs(run.final_theta - target));
    o.expect(run.final_rho > 1e4 * orb.r0, "trajectory stopped short of 1e4 r0");
  }
  o.expect(res <= 1e-8, fmt::format("orbit residual {:.3g}", res));
  o.expect(ang <= 1e-5, fmt::format("asymptote error {:.3g}", ang));
  if (o.pass) o.detail = fmt::format("orbit residual {:.3g}, asymptote error {:.3g}", res, ang);
  return o;
}

Outcome region_consistency() {
  Outcome o;
  long cells = 0;
  for (int f : {6, 7, 11, 12, 13}) {
    const double mu = default_mu(f);
    const auto d = make_figure(f, mu, default_grid(f, 512));
    const auto& g = d.raster.grid;
    for (int j = 0; j < g.ny; j += 4) {
      for (int i = 0; i < g.nx; i += 4) {
        const CellLabel l = d.raster.at(i, j);
        const double a = g.x_at(i), b = g.y_at(j);
        bool ok = true;
        if (f == 6 || f == 7) {
          const double r1 = f == 6 ? a : std::hypot(a + mu, b);
          const double r2 = f == 6 ? b : std::hypot(a - 1.0 + mu, b);
          ok = (l == CellLabel::TriangularExists) == triangular_exists(SystemParams::make(mu, r1 * r1 * r1, r2 * r2 * r2));
        } else {
          const auto p = SystemParams::make(mu, a, b);
          const Interval iv = f == 11 ? Interval::I1 : f == 12 ? Interval::I2 : Interval::I3;
          if (!p.admissible) {
            ok = l == CellLabel::Inadmissible;
          } else if (l != CellLabel::Unspecified) {
            const int n = static_cast<int>(find_collinear_in(p, iv).size());
            ok = n == (l == CellLabel::ZeroRoots ? 0 : l == CellLabel::TwoRoots ? 2 : 1);
          }
        }
        o.expect(ok, fmt::format("figure {} cell ({:.6g}, {:.6g}) label {}", f, a, b, to_string(l)));
        ++cells;
      }
    }
  }
  double worst = 0.0;
  for (int f : {16, 17, 18, 19, 20, 21}) {
    const double mu = default_mu(f);
    const auto d = make_figure(f, mu, default_grid(f, 32));
    for (const auto& arc : d.arcs) {
      for (const auto& p : arc.sample(257)) {
        const double r1 = std::hypot(p.x + mu, p.y), r2 = std::hypot(p.x - 1.0 + mu, p.y);
        worst = std::max(worst, std::abs(r1 * r1 + r2 * r2 + 2.0 * std::cos(arc.gamma) * r1 * r2 - 1.0));
        const double dr = std::hypot(p.x - arc.center.x, p.y - arc.center.y) - arc.radius;
        worst = std::max(worst, std::abs(dr));
      }
    }
    for (const auto& e : d.ellipses) {
      for (const auto& p : e.sample_first_quadrant(257)) {
        worst = std::max(worst, std::abs(p.x * p.x + p.y * p.y + 2.0 * std::cos(e.gamma) * p.x * p.y - 1.0));
      }
    }
  }
  o.expect(worst <= 1e-12, fmt::format("arc/ellipse identity residual {:.3g}", worst));
  if (o.pass) o.detail = fmt::format("{} subsampled cells agree; overlay residual {:.3g}", cells, worst);
  return o;
}

std::vector<char> slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome determinism() {
  Outcome o;
  const char* env = std::getenv("RC3BP_TMP");
  const fs::path base = fs::path(env ? env : fs::temp_directory_path().string()) / "acceptance_repro";
  fs::remove_all(base);
  const auto a = reproduce_all(base / "a", 96);
  const auto b = reproduce_all(base / "b", 96);
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(base / "a")) {
    const fs::path other = base / "b" / entry.path().filename();
    o.expect(fs::exists(other), "missing " + other.string());
    o.expect(slurp(entry.path()) == slurp(other), "bytes differ in " + entry.path().filename().string());
    ++files;
  }
  o.expect(a.entries.size() == b.entries.size() && files == a.entries.size() + 1, "file count mismatch");
  if (o.pass) o.detail = fmt::format("{} files byte-identical across two runs", files);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"equilibrium residuals", equilibrium_residuals},
      {"root-count conformance", root_count_conformance},
      {"eigenvalue cross-check", eigenvalue_cross_check},
      {"critical constants", critical_constants},
      {"small-mu series", small_mu_series},
      {"mirror antisymmetry", mirror_antisymmetry},
      {"integrator conservation", integrator_conservation},
      {"two-body hyperbola", two_body_hyperbola},
      {"region consistency", region_consistency},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    failures += !r.pass;
    std::cout << fmt::format("criterion {:2}: {} {}: {}", i + 1, r.pass ? "PASS" : "FAIL", criteria[i].first, r.detail)
              << std::endl;
  }
  return failures;
}
