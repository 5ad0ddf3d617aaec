#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "zssusy/akulin.hpp"
#include "zssusy/ode.hpp"

namespace zssusy {

/// Connection coefficients of the Jost solution that starts as
/// e^{i zeta x} (1, 0) at x = -L: at x = +L it is
/// a e^{i zeta x} (1, 0) + b e^{-i zeta x} (0, 1).
struct ScatteringData {
  double zeta = 0.0;
  cplx a{1.0, 0.0};
  cplx b{};
  /// |b|^2 / |a|^2
  double R = 0.0;

  /// |a|^2 + |b|^2 - 1, zero for Hermitian potentials that anticommute with
  /// sigma_z.
  double unitarity_defect() const { return std::norm(a) + std::norm(b) - 1.0; }
  /// |b|^2, the transferred probability of the two-level picture.
  double transfer() const { return std::norm(b); }
};

/// Failure at one point of a sweep, annotated with the point.
class SweepPointError : public std::runtime_error {
 public:
  SweepPointError(double point, const std::string& what)
      : std::runtime_error(what), point_(point) {}
  double point() const noexcept { return point_; }

 private:
  double point_;
};

/// Integrates psi' = sigma_z (i zeta - Q(x)) psi across [-L, L]. Requires
/// P = sigma_z and max-norm Q(+-L) < 1e-10 (std::invalid_argument otherwise).
ScatteringData scatter(const FirstOrderOperator& h, double zeta,
                       const SolverOptions& opts = {});

/// As above for the extended family; also requires the unitarity defect to
/// stay below 1e-9 (VerificationFailure otherwise).
ScatteringData scatter(const AkulinSpec& spec, double zeta,
                       const SolverOptions& opts = {});

/// scatter() at each zeta in input order; requires a nonempty list with
/// |zeta| <= 20. Errors are rethrown as SweepPointError.
std::vector<ScatteringData> reflectivity_sweep(const AkulinSpec& spec,
                                               std::span<const double> zetas,
                                               const SolverOptions& opts = {});

/// `count` points log-spaced over [lo, hi].
std::vector<double> log_spaced(double lo, double hi, std::size_t count);
std::vector<double> lin_spaced(double lo, double hi, std::size_t count);

struct BoundStateSet {
  std::vector<double> eigenvalues;
  std::vector<double> mismatch_values;
};

/// Matching determinant det[psi_left(0), psi_right(0)] at real lambda, where
/// psi_left decays at -infinity, psi_right at +infinity, and both are
/// renormalized to unit length after every step.
double matching_function(const FirstOrderOperator& h, double lambda,
                         const SolverOptions& opts = {});

/// Real eigenvalues in (0, lambda_max] by sign-change scan over scan_points
/// then bisection to 1e-10. Requires eta = 0 (real spectrum). An empty set
/// is a valid result.
BoundStateSet bound_states(const AkulinSpec& spec, double lambda_max,
                           int scan_points, const SolverOptions& opts = {});

}  // namespace zssusy
