#include "rc3bp/integrate.hpp"

#include <algorithm>
#include <cmath>

#include <boost/numeric/odeint.hpp>

#include "rc3bp/error.hpp"

namespace rc3bp {

namespace ode {

Result integrate(const Rhs& rhs, const State& x0, double t_end, double tol,
                 std::span<const double> sample_times, const StopFn& stop) {
  namespace odeint = boost::numeric::odeint;
  auto stepper = odeint::make_controlled(tol, tol, odeint::runge_kutta_fehlberg78<State>());

  Result result;
  std::size_t next = 0;
  while (next < sample_times.size() && sample_times[next] <= 0.0) {
    result.samples.push_back({sample_times[next], x0});
    ++next;
  }

  State x = x0;
  double t = 0.0;
  double dt = std::min(1e-3, t_end / 16.0);
  const double t_eps = 1e-13 * std::max(1.0, std::abs(t_end));
  while (t_end - t > t_eps) {
    // Land exactly on the next sample time or on t_end.
    const double target = next < sample_times.size() ? std::min(sample_times[next], t_end) : t_end;
    const bool clamped = dt >= target - t;
    double h = clamped ? target - t : dt;
    if (stepper.try_step(rhs, x, t, h) == odeint::fail) {
      if (!(h > 1e-14 * std::max(1.0, std::abs(t)))) {
        throw Error(ErrorCode::StepSizeUnderflow, "step size fell below 1e-14 relative");
      }
      dt = h;
      continue;
    }
    ++result.steps;
    if (clamped) {
      t = target;
      dt = std::max(dt, h);
    } else {
      dt = h;
    }
    while (next < sample_times.size() && sample_times[next] <= t + t_eps) {
      result.samples.push_back({sample_times[next], x});
      ++next;
    }
    if (stop && stop(x)) {
      result.stopped = true;
      break;
    }
  }
  if (!result.stopped) {
    while (next < sample_times.size() && sample_times[next] <= t_end) {
      result.samples.push_back({sample_times[next], x});
      ++next;
    }
  }
  result.t_final = t;
  result.x_final = x;
  return result;
}

}  // namespace ode

std::string_view to_string(Termination t) noexcept {
  return t == Termination::Completed ? "Completed" : "CollisionApproach";
}

Trajectory integrate(const SystemParams& p, const PhaseState& s0, double t_end, double tol,
                     const IntegrateOptions& options) {
  if (!(t_end > 0.0)) throw Error(ErrorCode::InvalidArgument, "t_end must be positive");
  if (!(tol >= 1e-14 && tol <= 1e-3)) throw Error(ErrorCode::InvalidArgument, "tol must lie in [1e-14, 1e-3]");
  if (!s0.v.allFinite()) throw Error(ErrorCode::InvalidArgument, "initial state must be finite");
  // Rejects a start on a primary before any stepping.
  potential(p, s0.x(), s0.y());

  const double guard = options.collision_radius;
  const auto too_close = [&](double x, double y) {
    const double r1 = std::hypot(x + p.mu, y);
    const double r2 = std::hypot(x - 1.0 + p.mu, y);
    return std::min(r1, r2) < guard;
  };

  std::vector<double> times;
  if (options.sample_every > 0.0) {
    const auto n = static_cast<std::size_t>(std::floor(t_end / options.sample_every + 1e-9));
    for (std::size_t i = 0; i <= n; ++i) times.push_back(static_cast<double>(i) * options.sample_every);
  } else {
    times.push_back(0.0);
  }
  if (times.back() < t_end) times.push_back(t_end);

  const ode::Rhs rhs = [&](const ode::State& s, ode::State& ds, double) {
    const PhaseState d = eom(p, PhaseState(s[0], s[1], s[2], s[3]));
    for (int i = 0; i < 4; ++i) ds[static_cast<std::size_t>(i)] = d.v(i);
  };
  const ode::StopFn stop = [&](const ode::State& s) { return too_close(s[0], s[1]); };

  Trajectory traj;
  if (too_close(s0.x(), s0.y())) {
    traj.reason = Termination::CollisionApproach;
    traj.samples.push_back({0.0, s0});
    traj.final_state = s0;
    return traj;
  }

  const ode::State x0{s0.x(), s0.y(), s0.px(), s0.py()};
  const ode::Result r = ode::integrate(rhs, x0, t_end, tol, times, stop);
  for (const auto& s : r.samples) {
    traj.samples.push_back({s.t, PhaseState(s.x[0], s.x[1], s.x[2], s.x[3])});
  }
  traj.reason = r.stopped ? Termination::CollisionApproach : Termination::Completed;
  traj.t_final = r.t_final;
  traj.final_state = PhaseState(r.x_final[0], r.x_final[1], r.x_final[2], r.x_final[3]);
  traj.steps = r.steps;
  return traj;
}

}  // namespace rc3bp
