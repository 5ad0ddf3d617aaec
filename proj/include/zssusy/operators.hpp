#pragma once

#include "zssusy/coeff.hpp"
#include "zssusy/grid.hpp"

namespace zssusy {

/// D = P d/dx + Q(x), with P constant.
struct FirstOrderOperator {
  Mat2 P;
  MatrixCoeff Q;

  /// s * D
  FirstOrderOperator scaled(cplx s) const { return {s * P, s * Q}; }
  /// D + eps * identity
  FirstOrderOperator shifted(cplx eps) const {
    return {P, Q + MatrixCoeff::constant(eps * Mat2::identity())};
  }
};

/// P2 d^2/dx^2 + P1(x) d/dx + P0(x), with P2 constant.
struct SecondOrderOperator {
  Mat2 P2;
  MatrixCoeff P1;
  MatrixCoeff P0;

  SecondOrderOperator scaled(cplx s) const { return {s * P2, s * P1, s * P0}; }
  SecondOrderOperator shifted(cplx eps) const {
    return {P2, P1, P0 + MatrixCoeff::constant(eps * Mat2::identity())};
  }
};

/// A first-order operator viewed as second order with P2 = 0.
SecondOrderOperator lift(const FirstOrderOperator& d);

/// Reduce a composition result back to first order. Requires P2 to be
/// exactly zero and P1 constant over `window` (deviation <= tol); throws
/// VerificationFailure otherwise.
FirstOrderOperator reduce_to_first_order(const SecondOrderOperator& d,
                                         const Grid& window,
                                         double tol = 1e-10);

/// Df = P f' + Q f, with f' from gridops. Rejects grids with h > 0.1.
SpinorField apply(const FirstOrderOperator& d, const SpinorField& f,
                  Scheme scheme = Scheme::central8);

/// Exact product A B by the product rule.
SecondOrderOperator compose(const FirstOrderOperator& a,
                            const FirstOrderOperator& b);

// -- symmetry transforms ----------------------------------------------------

enum class TransformKind { I, X, Y, Z };

/// One of the four Dih2 conjugations together with its sign on the
/// Hamiltonians (s) and on the intertwiners (v).
class SymmetryTransform {
 public:
  static SymmetryTransform identity() { return {TransformKind::I, +1, +1}; }
  static SymmetryTransform x() { return {TransformKind::X, +1, -1}; }
  static SymmetryTransform y() { return {TransformKind::Y, -1, +1}; }
  static SymmetryTransform z() { return {TransformKind::Z, -1, -1}; }
  static SymmetryTransform of(TransformKind kind);
  static const std::array<SymmetryTransform, 4>& all();

  TransformKind kind() const noexcept { return kind_; }
  int s_sign() const noexcept { return s_; }
  int v_sign() const noexcept { return v_; }
  char name() const noexcept;

 private:
  SymmetryTransform(TransformKind k, int s, int v) : kind_(k), s_(s), v_(v) {}
  TransformKind kind_;
  int s_;
  int v_;
};

/// Conjugation by sigma (with x -> -x for X and Z), as a coefficient rewrite.
FirstOrderOperator transform(const FirstOrderOperator& d,
                             const SymmetryTransform& t);

/// Max over `window` of the max-norm of every coefficient difference.
double op_distance(const FirstOrderOperator& a, const FirstOrderOperator& b,
                   const Grid& window);
double op_distance(const SecondOrderOperator& a, const SecondOrderOperator& b,
                   const Grid& window);

/// Max over `window` of the max-norm of Q (or P0 for second order).
double potential_max_norm(const FirstOrderOperator& d, const Grid& window);

/// [-10, 10] with 2001 points, where operator identities are compared.
Grid identity_window();

}  // namespace zssusy
