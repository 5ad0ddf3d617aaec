#pragma once

#include <functional>
#include <vector>

#include "zssusy/akulin.hpp"

namespace zssusy {

/// A closed-form eigenstate (phi1, phi2) of H_SG = sigma_z d/dx - sigma_x q
/// at eigenvalue lambda0.
struct FixedEigenstate {
  cplx lambda0;
  std::function<cplx(double)> phi1;
  std::function<cplx(double)> phi2;

  /// lambda0 = 1/2, (e^{x/2}, e^{-x/2}) over q = 0.
  static FixedEigenstate canonical();
};

/// sigma_z d/dx - (sigma_+ q + sigma_- conj(q)) / 2; reduces to
/// sigma_z d/dx - sigma_x q for real q.
FirstOrderOperator sg_hamiltonian(const ScalarCoeff& q);

/// Which ratio enters U.
///   direct:       zeta = (phi1 + i phi2) / (phi1 - i phi2)
///   reciprocal:   zeta -> 1/zeta, flipping the sign of zeta - 1/zeta
enum class ZetaConvention { direct, reciprocal };

struct DarbouxData {
  ZetaConvention convention = ZetaConvention::direct;
  cplx lambda0;
  std::function<cplx(double)> zeta_fn;
  std::function<cplx(double)> q_background;

  /// -(lambda0/2)(zeta + 1/zeta) - (lambda0/2)(zeta - 1/zeta) sigma_y
  ///   + lambda sigma_z
  Mat2 U(double x, cplx lambda) const;
  /// -q + lambda0 (zeta - 1/zeta)
  cplx q_new(double x) const;
};

/// eigen_residual of the fixed state against sg_hamiltonian(q) on `grid`.
double fixed_state_residual(const FixedEigenstate& fixed, const ScalarCoeff& q,
                            const Grid& grid);

/// Throws VerificationFailure if phi1 - i phi2 vanishes (relative to
/// |phi|) anywhere on `window`.
DarbouxData build_darboux(const FixedEigenstate& fixed, const ScalarCoeff& q,
                          const Grid& window,
                          ZetaConvention convention = ZetaConvention::direct);

/// Comparison of U with one intertwiner at one lambda.
struct CoincidenceFit {
  /// Best c in min ||U psi - c Upsilon psi|| / ||Upsilon psi||.
  cplx scale;
  double residual = 0.0;
};

struct ConjecturePoint {
  cplx lambda;
  /// Against the intertwiner in the requested direction.
  CoincidenceFit target;
  /// Against the intertwiner in the opposite direction.
  CoincidenceFit mirror;
  /// eigen_residual(H_{n_from +- 1}, U psi, lambda); +1 is the up neighbour.
  double eigen_residual_up = 0.0;
  double eigen_residual_down = 0.0;
};

struct ConjectureReport {
  int n_from = 0;
  Direction direction = Direction::up;
  std::vector<ConjecturePoint> points;
  /// max over points of target.residual
  double max_rel_dev = 0.0;
};

/// For each lambda, U psi versus Upsilon psi on the lambda eigenspace of
/// H_{n_from}, with d/dx replaced by sigma_z (lambda - Q) on that subspace.
/// Both basis states alpha = 1 and beta = 1 enter the fit with one shared
/// scale. The background of `data` must equal the potential of H_{n_from}
/// (std::invalid_argument otherwise).
ConjectureReport conjecture_check(const DarbouxData& data, int n_from,
                                  Direction direction,
                                  const std::vector<SpectralPoint>& lambdas,
                                  const Grid& grid);

}  // namespace zssusy
