#pragma once

#include <optional>
#include <span>
#include <vector>

#include "zssusy/akulin.hpp"
#include "zssusy/ode.hpp"

namespace zssusy {

/// Two-level atom driven by V(t) = n / (tau cosh(t / tau)) at detuning Delta:
///   i g' = +Delta/2 g + V e
///   i e' = V g - Delta/2 e
struct PulseSpec {
  double n_area = 1.0;
  double tau = 1.0;
  double delta = 0.0;
  /// Integration runs over [-T, T]; defaults to 40 tau.
  std::optional<double> horizon;

  double T() const { return horizon.value_or(40.0 * tau); }
  /// Throws std::invalid_argument unless tau > 0, fields are finite and
  /// T >= 20 tau.
  void validate() const;
};

struct PulseResult {
  double p_transfer = 0.0;
  cplx final_g;
  cplx final_e;
  /// | |g|^2 + |e|^2 - 1 | at +T.
  double norm_drift = 0.0;
};

/// Starts from (e^{i Delta T / 2}, 0) at -T. The step cap is
/// min(opts.max_step, tau).
PulseResult simulate_pulse(const PulseSpec& spec,
                           const SolverOptions& opts = {});

/// simulate_pulse per detuning, in input order. Errors are rethrown as
/// SweepPointError carrying the detuning.
std::vector<PulseResult> detuning_sweep(double n_area, double tau,
                                        std::span<const double> deltas,
                                        const SolverOptions& opts = {});

/// The scattering problem whose |b|^2 equals the pulse's p_transfer:
/// w = n/tau sech(t/tau) e^{-i pi/2}, zeta = -Delta/2, on [-T, T].
struct ScatteringEquivalent {
  AkulinSpec spec;
  double zeta = 0.0;
  SolverOptions opts;
};

ScatteringEquivalent scattering_equivalent(const PulseSpec& spec,
                                           const SolverOptions& opts = {});

}  // namespace zssusy
