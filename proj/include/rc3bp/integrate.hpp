#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "rc3bp/dynamics.hpp"
#include "rc3bp/params.hpp"

namespace rc3bp {

/// Generic four-dimensional first-order system, used for both the restricted
/// problem and the two-body relative motion.
namespace ode {

using State = std::array<double, 4>;
using Rhs = std::function<void(const State&, State&, double)>;
/// Returns true when integration must stop at the current accepted step.
using StopFn = std::function<bool(const State&)>;

struct Sample {
  double t;
  State x;
};

struct Result {
  std::vector<Sample> samples;
  bool stopped = false;
  double t_final = 0.0;
  State x_final{};
  std::size_t steps = 0;
};

/// Adaptive Runge-Kutta-Fehlberg 7(8) landing exactly on each sample time. `sample_times` must be
/// ascending; samples past an early stop are dropped. Throws StepSizeUnderflow.
Result integrate(const Rhs& rhs, const State& x0, double t_end, double tol,
                 std::span<const double> sample_times, const StopFn& stop = {});

}  // namespace ode

enum class Termination { Completed, CollisionApproach };

std::string_view to_string(Termination t) noexcept;

struct TrajectorySample {
  double t;
  PhaseState state;
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  Termination reason = Termination::Completed;
  double t_final = 0.0;
  PhaseState final_state;
  std::size_t steps = 0;
};

struct IntegrateOptions {
  /// Spacing of dense-output samples; 0 keeps only the endpoints.
  double sample_every = 0.0;
  /// Stop once min(rho1, rho2) falls below this radius.
  double collision_radius = 1e-6;
};

/// Integrates the rotating-frame Hamiltonian flow. `tol` in [1e-14, 1e-3] is
/// applied as both absolute and relative error tolerance. The final time is
/// always sampled.
Trajectory integrate(const SystemParams& p, const PhaseState& s0, double t_end, double tol,
                     const IntegrateOptions& options = {});

}  // namespace rc3bp
