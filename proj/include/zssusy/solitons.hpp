#pragma once

#include <functional>
#include <vector>

#include "zssusy/akulin.hpp"
#include "zssusy/grid.hpp"

namespace zssusy {

// -- sine-Gordon, u_xt = sin u in light-cone coordinates --------------------

enum class SGKind { kink, antikink, two_soliton, custom };

class SGSolution {
 public:
  /// -4 atan(exp(-[xi (x - x0) + t / xi])), generated by H_{-1}(xi, 0, x0, 0).
  static SGSolution kink(double xi, double x0 = 0.0);
  /// -4 atan(exp(+[xi (x - x0) + t / xi])), generated by H_{+1}.
  static SGSolution antikink(double xi, double x0 = 0.0);
  /// -4 atan(-+ sinh(2[xi (x-x0) + t/(3 xi)]) / (2 cosh(-xi (x-x0) + t/(3 xi)))).
  /// `kinks` selects the upper sign (H_{-2}); otherwise antikinks (H_{+2}).
  static SGSolution two_soliton(double xi, double x0 = 0.0, bool kinks = true);
  /// Arbitrary evaluator, for negative controls.
  static SGSolution custom(std::function<double(double, double)> u,
                           int soliton_count);

  SGKind kind() const noexcept { return kind_; }
  double xi() const noexcept { return xi_; }
  double x0() const noexcept { return x0_; }
  int soliton_count() const noexcept;
  /// n of the Akulin Hamiltonian whose potential is this solution's q(x, 0).
  int akulin_n() const;

  double operator()(double x, double t) const;
  /// Analytic u_x; not available for custom solutions.
  double dudx(double x, double t) const;

 private:
  SGKind kind_ = SGKind::kink;
  double xi_ = 1.0;
  double x0_ = 0.0;
  bool upper_ = true;
  int count_ = 1;
  std::function<double(double, double)> custom_;
};

inline double sg_eval(const SGSolution& sol, double x, double t) {
  return sol(x, t);
}

struct ResidualWindow {
  double x_min = -8.0, x_max = 8.0;
  double t_min = -3.0, t_max = 3.0;
  int nx = 41, nt = 21;
};

/// max |u_xt - sin u| over the sample, u_xt by 4th-order central differences
/// in each variable with step h in [1e-4, 1e-2].
double sg_residual(const SGSolution& sol, double h,
                   const ResidualWindow& window = {});

/// q(x, 0) = -u_x(x, 0) / 2 on the grid, from the analytic u_x.
std::vector<double> sg_initial_potential(const SGSolution& sol,
                                         const Grid& grid);

/// Max over the grid of |q(x, 0) - w(x)| with w the potential of
/// H_{akulin_n}(xi, 0, x0, 0).
double sg_initial_match(const SGSolution& sol, const Grid& grid);

/// Lab frame: x_lab = x + t, t_lab = x - t.
struct FrameKinematics {
  /// (1 - xi^2) / (1 + xi^2), the single-kink lab velocity.
  double v_lab = 0.0;
  /// (3 xi^2 - 1) / (3 xi^2 + 1), the observer frame of the two-soliton.
  double V_frame = 0.0;
  /// Velocities fitted to the tracked level sets u = -pi (and u = +pi for
  /// the two-soliton), in increasing order.
  std::vector<double> tracked;
  /// Formula predictions matching `tracked`.
  std::vector<double> predicted;
};

/// Tracks kink centres in lab coordinates: t_lab in [0, 5] for one kink,
/// [10, 20] for the two-soliton (after the collision). Throws
/// VerificationFailure if a level set leaves |x_lab| <= 80.
FrameKinematics sg_lab_kinematics(const SGSolution& sol);

// -- NLS, i u_t = -u_xx - 2|u|^2 u ------------------------------------------

enum class NLSKind { one_soliton, breather };

/// Carrier phase of a moving solution.
///   galilean:     eta (x - x0) - eta^2 t + phi  (exact NLS solution)
///   comoving:     v x'/2 + phi with x' = xi (x - v t - x0)
enum class NLSPhase { galilean, comoving };

struct NLSSolution {
  NLSKind kind = NLSKind::one_soliton;
  int sign = +1;
  double xi = 1.0;
  double eta = 0.0;
  double x0 = 0.0;
  double phi = 0.0;
  NLSPhase phase = NLSPhase::galilean;

  double velocity() const { return 2.0 * eta; }
  /// n of the Akulin Hamiltonian producing u(x, 0): +-1 or +-2.
  int akulin_n() const;
};

cplx nls_eval(const NLSSolution& sol, double x, double t);

/// max |i u_t + u_xx + 2|u|^2 u| over the sample, 4th-order differences.
double nls_residual(const NLSSolution& sol, double h,
                    const ResidualWindow& window = {});
/// Same for an arbitrary field, for negative controls.
double nls_residual(const std::function<cplx(double, double)>& u, double h,
                    const ResidualWindow& window = {});

/// Max over the grid of |u(x, 0) - w_n(x; xi, eta, x0, phi)|.
double nls_initial_match(const NLSSolution& sol, const AkulinSpec& spec,
                         const Grid& grid);

}  // namespace zssusy
