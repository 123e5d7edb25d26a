#include "rc3bp/collinear.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rc3bp {

std::string_view to_string(Interval i) noexcept {
  switch (i) {
    case Interval::I1: return "I1";
    case Interval::I2: return "I2";
    case Interval::I3: return "I3";
  }
  return "Unknown";
}

std::string_view to_string(BetaRegion r) noexcept {
  switch (r) {
    case BetaRegion::S11: return "S11";
    case BetaRegion::S12: return "S12";
    case BetaRegion::S2: return "S2";
    case BetaRegion::S41: return "S41";
    case BetaRegion::S42: return "S42";
    case BetaRegion::S5: return "S5";
    case BetaRegion::S6: return "S6";
    case BetaRegion::Inadmissible: return "Inadmissible";
    case BetaRegion::AxisOrigin: return "AxisOrigin";
  }
  return "Unknown";
}

std::string_view to_string(CountRule r) noexcept {
  switch (r) {
    case CountRule::ExactlyOne: return "exactly_one";
    case CountRule::OneConditional: return "one_conditional";
    case CountRule::UpToTwo: return "up_to_two";
    case CountRule::Unspecified: return "unspecified";
  }
  return "unknown";
}

BetaRegion classify_region(double b1, double b2) noexcept {
  if (b1 == 0.0 && b2 == 0.0) return BetaRegion::AxisOrigin;
  if (!is_admissible(b1, b2)) return BetaRegion::Inadmissible;
  if (b1 == 0.0) return BetaRegion::S5;
  if (b2 == 0.0) return BetaRegion::S6;
  if (b1 > 0.0 && b2 > 0.0) return b1 <= 1.0 ? BetaRegion::S11 : BetaRegion::S12;
  if (b1 < 0.0 && b2 > 0.0) return BetaRegion::S2;
  if (b1 > 0.0 && b2 < 0.0) return b1 < 1.0 ? BetaRegion::S41 : BetaRegion::S42;
  // Both negative is never admissible.
  return BetaRegion::Inadmissible;
}

namespace {

constexpr double kBandTolerance = 1e-12;

// Bisection down to adjacent doubles on a function with f(lo) < 0 < f(hi)
// (or the reverse); returns the endpoint with the smaller |f|.
template <typename Fn>
double bisect(Fn&& f, double lo, double hi) {
  double flo = f(lo);
  for (int it = 0; it < 2000; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= std::min(lo, hi) || mid >= std::max(lo, hi)) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return std::abs(f(lo)) <= std::abs(f(hi)) ? lo : hi;
}

BandStatus compare_band(double value, double bound, bool inside_above) {
  const double tol = kBandTolerance * std::max(1.0, std::abs(bound));
  if (std::abs(value - bound) <= tol) return BandStatus::Boundary;
  const bool above = value > bound;
  return above == inside_above ? BandStatus::Inside : BandStatus::Outside;
}

}  // namespace

// Outer band (I1 for beta1 < 0 < beta2): the boundary curve
// (-beta1*(x*), beta2*(x*)), x* < -mu, runs monotonically from (-inf, +inf)
// to (0, 1); two roots exist for points on or above-right of it.
BandStatus band_status_outer(double b1, double b2, double mu) {
  if (!(b1 < 0.0) || !(b2 > 0.0)) return BandStatus::Outside;
  const auto g = [&](double xs) { return -beta1_star(xs, mu) - b1; };
  double lo = -mu - 1.0;
  while (g(lo) > 0.0) lo = -mu - 2.0 * (-mu - lo);
  const double xs = bisect(g, lo, -mu);
  return compare_band(b2, beta2_star(xs, mu), true);
}

// Inner band (I2 for beta1 < 0 < beta2): the boundary curve
// (beta1*(x*), beta2*(x*)), -mu < x* < x_r1, decreases in both coordinates
// from (0, 1); two roots exist for points on or below-right of it.
BandStatus band_status_inner(double b1, double b2, double mu) {
  if (!(b1 < 0.0) || !(b2 > 0.0)) return BandStatus::Outside;
  const double xr1 = critical_root_r1(mu);
  if (b1 < beta1_star(xr1, mu)) return BandStatus::Outside;
  const auto g = [&](double xs) { return beta1_star(xs, mu) - b1; };
  const double xs = bisect(g, -mu, xr1);
  return compare_band(b2, beta2_star(xs, mu), false);
}

namespace {

RootCountPrediction from_band(BandStatus status) {
  switch (status) {
    case BandStatus::Inside: return {CountRule::UpToTwo, 2, false};
    case BandStatus::Boundary: return {CountRule::UpToTwo, 1, true};
    case BandStatus::Outside: break;
  }
  return {CountRule::UpToTwo, 0, false};
}

RootCountPrediction conditional(double beta, bool present_above_one) {
  if (beta == 1.0) return {CountRule::Unspecified, -1, false};
  const bool above = beta > 1.0;
  return {CountRule::OneConditional, above == present_above_one ? 1 : 0, false};
}

constexpr RootCountPrediction kExactlyOne{CountRule::ExactlyOne, 1, false};

}  // namespace

RootCountPrediction predicted_root_count(const SystemParams& p, Interval interval) {
  if (!is_admissible(p.beta1, p.beta2)) {
    throw Error(ErrorCode::InadmissibleParams, "root counts are defined only for admissible betas");
  }
  switch (classify_region(p)) {
    case BetaRegion::S11:
    case BetaRegion::S12:
      return kExactlyOne;
    case BetaRegion::S2:
      if (interval == Interval::I3) return kExactlyOne;
      if (interval == Interval::I1) return from_band(band_status_outer(p.beta1, p.beta2, p.mu));
      return from_band(band_status_inner(p.beta1, p.beta2, p.mu));
    case BetaRegion::S41:
    case BetaRegion::S42:
      if (interval == Interval::I1) return kExactlyOne;
      if (interval == Interval::I3) return from_band(band_status_outer(p.beta2, p.beta1, 1.0 - p.mu));
      return from_band(band_status_inner(p.beta2, p.beta1, 1.0 - p.mu));
    case BetaRegion::S5:
      if (interval == Interval::I3) return kExactlyOne;
      return conditional(p.beta2, interval == Interval::I1);
    case BetaRegion::S6:
      if (interval == Interval::I1) return kExactlyOne;
      return conditional(p.beta1, interval == Interval::I3);
    case BetaRegion::Inadmissible:
    case BetaRegion::AxisOrigin:
      break;
  }
  throw Error(ErrorCode::InadmissibleParams, "root counts are defined only for admissible betas");
}

namespace {

std::vector<double> log_space(double lo, double hi, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (int i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = std::exp(a + (b - a) * i / (n - 1));
  }
  return out;
}

std::vector<double> scan_points(double mu, Interval interval, const ScanOptions& o) {
  const int n = std::max(o.samples_per_interval, 16);
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(n));
  switch (interval) {
    case Interval::I1:
      for (double d : log_space(o.min_pole_distance, o.max_pole_distance, n)) xs.push_back(-mu - d);
      break;
    case Interval::I3:
      for (double d : log_space(o.min_pole_distance, o.max_pole_distance, n)) xs.push_back(1.0 - mu + d);
      break;
    case Interval::I2: {
      // Cluster toward both poles; the two halves meet at the midpoint.
      const auto half = log_space(o.min_pole_distance, 0.5, n / 2);
      for (double d : half) xs.push_back(-mu + d);
      for (double d : half) xs.push_back(1.0 - mu - d);
      break;
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  const auto inside = [&](double x) { return interval_of(mu, x) == interval; };
  xs.erase(std::remove_if(xs.begin(), xs.end(), [&](double x) { return !inside(x); }), xs.end());
  return xs;
}

struct Node {
  double x;
  double f;
  bool extremum;
};

double polish(const SystemParams& p, double x, double lo, double hi) {
  for (int it = 0; it < 3; ++it) {
    const double f = collinear_F(p, x);
    const double g = collinear_F_prime(p, x);
    if (f == 0.0 || g == 0.0) break;
    const double next = x - f / g;
    if (!(next > lo && next < hi)) break;
    if (std::abs(collinear_F(p, next)) >= std::abs(f)) break;
    x = next;
  }
  return x;
}

}  // namespace

std::vector<CollinearRoot> find_collinear_in(const SystemParams& p, Interval interval, const ScanOptions& o) {
  const std::vector<double> xs = scan_points(p.mu, interval, o);
  const auto F = [&](double x) { return collinear_F(p, x); };
  const auto Fp = [&](double x) { return collinear_F_prime(p, x); };

  std::vector<Node> nodes;
  nodes.reserve(xs.size() + 8);
  double prev_g = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double g = Fp(xs[i]);
    if (i > 0 && ((g < 0.0) != (prev_g < 0.0)) && g != 0.0 && prev_g != 0.0) {
      const double xe = bisect(Fp, xs[i - 1], xs[i]);
      if (xe > xs[i - 1] && xe < xs[i]) nodes.push_back({xe, F(xe), true});
    }
    nodes.push_back({xs[i], F(xs[i]), g == 0.0});
    prev_g = g;
  }

  std::vector<CollinearRoot> roots;
  std::vector<bool> consumed(nodes.size(), false);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Node& n = nodes[i];
    if (!n.extremum) continue;
    if (std::abs(n.f) < o.double_root_f_tol && std::abs(Fp(n.x)) < o.double_root_fprime_tol) {
      roots.push_back({n.x, interval, 2, n.f});
      consumed[i] = true;
    }
  }

  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (consumed[i]) continue;
    const Node& a = nodes[i];
    if (a.f == 0.0) {
      roots.push_back({a.x, interval, 1, 0.0});
      continue;
    }
    if (i + 1 >= nodes.size() || consumed[i + 1]) continue;
    const Node& b = nodes[i + 1];
    if (b.f == 0.0 || (a.f < 0.0) == (b.f < 0.0)) continue;
    double x = bisect(F, a.x, b.x);
    x = polish(p, x, a.x, b.x);
    roots.push_back({x, interval, 1, F(x)});
  }
  std::sort(roots.begin(), roots.end(), [](const auto& l, const auto& r) { return l.x < r.x; });
  return roots;
}

std::vector<CollinearRoot> find_collinear(const SystemParams& p, const ScanOptions& o) {
  std::vector<CollinearRoot> all;
  for (Interval i : kIntervals) {
    auto r = find_collinear_in(p, i, o);
    all.insert(all.end(), r.begin(), r.end());
  }
  return all;
}

std::vector<CollinearRoot> limit_collinear(const SystemParams& p) {
  constexpr double tol = 1e-12;
  if (!(p.beta1 > 0.0 && p.beta2 > 0.0 && is_admissible(p.beta1, p.beta2))) {
    throw Error(ErrorCode::NotOnLimitLocus, "limit solutions need both betas positive and admissible");
  }
  const double d1 = p.delta1();
  const double d2 = p.delta2();
  std::vector<CollinearRoot> out;
  const auto add = [&](double x, Interval i) { out.push_back({x, i, 1, collinear_F(p, x)}); };
  if (std::abs(d2 - d1 - 1.0) <= tol) add(-p.mu - d1, Interval::I1);
  if (std::abs(d1 + d2 - 1.0) <= tol) add(-p.mu + d1, Interval::I2);
  if (std::abs(d1 - d2 - 1.0) <= tol) add(-p.mu + d1, Interval::I3);
  if (out.empty()) throw Error(ErrorCode::NotOnLimitLocus, "deltas do not satisfy a limit relation");
  return out;
}

std::pair<SystemParams, double> mirror(const SystemParams& p, double x) {
  SystemParams q = SystemParams::make(1.0 - p.mu, p.beta2, p.beta1);
  q.swapped = !p.swapped;
  return {q, -x};
}

double critical_root_r1(double mu) {
  if (!(mu > 0.0 && mu < 1.0)) throw Error(ErrorCode::InvalidArgument, "mu must lie in (0, 1)");
  const auto g = [&](double xs) { return critical_G_tilde(xs, mu); };
  const double lo = -mu;
  const double hi = -mu / 3.0;
  const double glo = g(lo);
  const double ghi = g(hi);
  if (!((glo < 0.0 && ghi > 0.0) || (glo > 0.0 && ghi < 0.0))) {
    throw Error(ErrorCode::RootNotBracketed, "G has no sign change on (-mu, -mu/3)");
  }
  return bisect(g, lo, hi);
}

CriticalRoots critical_roots(double mu) {
  if (!(mu > 0.0 && mu <= 0.5)) throw Error(ErrorCode::InvalidArgument, "mu must lie in (0, 1/2]");
  const double r1 = critical_root_r1(mu);
  const double r2 = -critical_root_r1(1.0 - mu);
  const double lo = (1.0 - mu) / 3.0;
  const double hi = 1.0 - mu;
  if (!(r2 > lo && r2 < hi)) {
    throw Error(ErrorCode::RootNotBracketed, "mirrored root left ((1-mu)/3, 1-mu)");
  }
  return {r1, r2};
}

CriticalRoots critical_roots_series(double mu) {
  if (!(mu > 0.0 && mu <= 0.5)) throw Error(ErrorCode::InvalidArgument, "mu must lie in (0, 1/2]");
  const double eps = std::pow(mu, 0.25);
  const double b0 = -std::pow(4.0 / 27.0, 0.25);
  const double b1 = 11.0 / (36.0 * std::sqrt(3.0));
  const double b2 = 67.0 / (864.0 * std::pow(12.0, 0.25));
  const double b3 = -497.0 / 486.0;
  CriticalRoots r;
  r.x_r1 = -mu / 3.0 - 8.0 / 81.0 * mu * mu * mu * mu;
  r.x_r2 = 1.0 + eps * (b0 + eps * (b1 + eps * (b2 + eps * b3)));
  return r;
}

}  // namespace rc3bp
