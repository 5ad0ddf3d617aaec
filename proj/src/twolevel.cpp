#include "zssusy/twolevel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "zssusy/scattering.hpp"

namespace zssusy {

void PulseSpec::validate() const {
  if (!std::isfinite(n_area) || !std::isfinite(tau) || !std::isfinite(delta) ||
      !std::isfinite(T())) {
    throw std::invalid_argument("pulse: non-finite parameter");
  }
  if (!(tau > 0.0)) throw std::invalid_argument("pulse: tau must be positive");
  if (!(T() >= 20.0 * tau)) {
    throw std::invalid_argument("pulse: horizon must be at least 20 tau");
  }
}

PulseResult simulate_pulse(const PulseSpec& spec, const SolverOptions& opts) {
  spec.validate();
  opts.validate();
  const cplx I(0.0, 1.0);
  const double half_delta = 0.5 * spec.delta;
  const double amp = spec.n_area / spec.tau;
  const double tau = spec.tau;
  // Interaction picture: g = e^{-i Delta t/2} a, e = e^{+i Delta t/2} b.
  // The detuning rotation is then exact and the solver only sees the pulse.
  const ode::Rhs rhs = [=](double t, const ode::State& y) {
    const double v = amp / std::cosh(t / tau);
    const cplx rot = std::exp(I * (2.0 * half_delta * t));
    return ode::State{-I * v * rot * y[1], -I * v * std::conj(rot) * y[0]};
  };
  SolverOptions o = opts;
  o.max_step = std::min(opts.max_step, tau);
  const double T = spec.T();
  // a(-T) = 1 is g(-T) = e^{i Delta T / 2}.
  const ode::State ab = ode::integrate(rhs, -T, T, {cplx(1.0), cplx(0.0)}, o);
  const ode::State y{std::exp(-I * (half_delta * T)) * ab[0],
                     std::exp(I * (half_delta * T)) * ab[1]};

  PulseResult r;
  r.final_g = y[0];
  r.final_e = y[1];
  r.p_transfer = std::norm(y[1]);
  r.norm_drift = std::abs(std::norm(y[0]) + std::norm(y[1]) - 1.0);
  return r;
}

std::vector<PulseResult> detuning_sweep(double n_area, double tau,
                                        std::span<const double> deltas,
                                        const SolverOptions& opts) {
  if (deltas.empty()) {
    throw std::invalid_argument("detuning_sweep: no detunings");
  }
  std::vector<PulseResult> out;
  out.reserve(deltas.size());
  for (double d : deltas) {
    try {
      out.push_back(simulate_pulse({n_area, tau, d, std::nullopt}, opts));
    } catch (const std::exception& e) {
      throw SweepPointError(d, e.what());
    }
  }
  return out;
}

ScatteringEquivalent scattering_equivalent(const PulseSpec& spec,
                                           const SolverOptions& opts) {
  spec.validate();
  ScatteringEquivalent eq;
  eq.spec = {spec.n_area, 1.0 / spec.tau, 0.0, 0.0, -0.5 * std::numbers::pi};
  eq.zeta = -0.5 * spec.delta;
  eq.opts = opts;
  eq.opts.L = spec.T();
  eq.opts.max_step = std::min(opts.max_step, spec.tau);
  return eq;
}

}  // namespace zssusy
