#pragma once

#include <optional>

#include "zssusy/operators.hpp"

namespace zssusy {

/// Parameters (n, xi, eta, x0, phi) of the extended family
///   H = sigma_z d/dx - (sigma_+ w + h.c.)/2,
///   w(x) = n xi exp(i(eta (x - x0) + phi)) / cosh(xi (x - x0)).
/// n is real so that non-integer contrast cases can be built.
struct AkulinSpec {
  double n = 0.0;
  double xi = 1.0;
  double eta = 0.0;
  double x0 = 0.0;
  double phi = 0.0;

  /// Throws std::invalid_argument unless xi > 0 and all fields are finite.
  void validate() const;

  /// The base member (xi = 1, eta = x0 = phi = 0).
  static AkulinSpec base(double n) { return {n, 1.0, 0.0, 0.0, 0.0}; }

  /// w(x) above, with its exact derivatives.
  ScalarCoeff envelope() const;
};

/// Eigenvalue of H psi = lambda psi. Scattering uses lambda = i zeta;
/// the two-level map uses lambda = -i Delta / 2.
struct SpectralPoint {
  cplx lambda;

  static SpectralPoint from_zeta(double zeta) { return {cplx(0.0, zeta)}; }
  static SpectralPoint from_detuning(double delta) {
    return {cplx(0.0, -0.5 * delta)};
  }
};

enum class FactorSign { plus, minus };
enum class FactorRole { A, B };

struct FactorKind {
  FactorSign sign;
  FactorRole role;
};

enum class Direction { up, down };

/// sigma_z d/dx - sigma_x n sech(x).
FirstOrderOperator hamiltonian(int n);

FirstOrderOperator hamiltonian_ext(const AkulinSpec& spec);

/// The four SUSY factors A_n^(+-), B_n^(+-) of the chain, entry by entry.
FirstOrderOperator susy_factor(int n, FactorKind kind);

/// eps_n^(+) = (-1)^n (n + 1/2), eps_n^(-) = (-1)^n (n - 1/2).
double factorization_constant(int n, FactorSign sign);

struct FactorizationReport {
  int n = 0;
  char transform = 'I';
  /// s (T[B+_n] T[A+_n] + eps) vs H_n.
  double residual_H_n = 0.0;
  /// s (T[A+_n] T[B+_n] + eps) vs s (T[A-_{n+1}] T[B-_{n+1}] + eps').
  double residual_half = 0.0;
  /// s (T[B-_{n+1}] T[A-_{n+1}] + eps') vs H_{n+1}.
  double residual_H_nplus1 = 0.0;
  /// Every composition had P2 equal to the zero matrix exactly.
  bool p2_exact_zero = false;
  /// H_{n+1/2} built from the (+) factors.
  std::optional<FirstOrderOperator> intermediate;

  double max_residual() const;
  bool passed(double tol = 1e-10) const {
    return p2_exact_zero && max_residual() <= tol;
  }
  /// Throws VerificationFailure when !passed(tol).
  void require(double tol = 1e-10) const;
};

struct FactorizationOptions {
  int max_abs_n = 8;
  /// Added to every factorization constant; a harness knob for negative
  /// controls. The residuals then equal |epsilon_shift|.
  double epsilon_shift = 0.0;
};

FactorizationReport verify_factorization(int n, const SymmetryTransform& t,
                                         const Grid& window,
                                         const FactorizationOptions& opts = {});

/// Closed-form intertwiners
///   up:   d/dx - (n + 1/2) tanh x + (1/2) sech x (i sigma_y)
///   down: d/dx + (n - 1/2) tanh x - (1/2) sech x (i sigma_y)
FirstOrderOperator intertwiner_closed(int n, Direction dir);

/// v_T (T[B-_{n+1}] T[A+_n]) for up, v_T (T[B+_{n-1}] T[A-_n]) for down,
/// reduced to first order. Throws VerificationFailure if the product is not
/// first order on identity_window().
FirstOrderOperator intertwiner_from_chain(int n, Direction dir,
                                          const SymmetryTransform& t);

/// (alpha e^{lambda x}, beta e^{-lambda x}) sampled on `grid`; an exact
/// eigenstate of H_0. Rejects |Re lambda| (x_max - x_min) > 600.
SpinorField free_eigenstate(SpectralPoint lambda, cplx alpha, cplx beta,
                            const Grid& grid);

/// Applies the closed-form intertwiners 0 -> 1 -> ... -> n (or downwards for
/// negative n) to free_eigenstate(...). Throws ChainAnnihilated when the
/// interior norm ratio |psi_n| / |psi_0| drops below 1e-10.
SpinorField chain_eigenstate(int n, SpectralPoint lambda, cplx alpha,
                             cplx beta, const Grid& grid,
                             Scheme scheme = Scheme::central8);

/// rel_residual(H psi, lambda psi) on the interior `fraction` of the grid.
double eigen_residual(const FirstOrderOperator& h, const SpinorField& psi,
                      cplx lambda, double fraction = 0.9);

}  // namespace zssusy
