#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <functional>

namespace zssusy {

using cplx = std::complex<double>;

/// Settings shared by every adaptive integration (scattering, shooting,
/// pulses).
struct SolverOptions {
  /// Half-width of the integration domain [-L, L] for scattering problems.
  double L = 25.0;
  double rtol = 1e-12;
  double atol = 1e-14;
  /// Upper bound on |step|; keeps the integrator from stepping over a
  /// localized potential when the free solution is flat.
  double max_step = 0.1;
  std::size_t max_steps = 20'000'000;

  /// Throws std::invalid_argument unless L > 5 and tolerances are positive.
  void validate() const;
};

namespace ode {

using State = std::array<cplx, 2>;
using Rhs = std::function<State(double x, const State& y)>;
/// Called after every accepted step; may rescale the state in place.
using StepHook = std::function<void(State& y)>;

struct Stats {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  std::size_t evaluations = 0;
};

/// Dormand-Prince 5(4) with FSAL and standard step control. Integrates from
/// x0 to x1 (either direction). Throws IntegrationError on step underflow or
/// when the step budget is exhausted.
State integrate(const Rhs& rhs, double x0, double x1, State y0,
                const SolverOptions& opts, Stats* stats = nullptr,
                const StepHook& hook = {});

}  // namespace ode
}  // namespace zssusy
