#include "zssusy/operators.hpp"

#include <algorithm>
#include <stdexcept>

#include "zssusy/errors.hpp"

namespace zssusy {

SecondOrderOperator lift(const FirstOrderOperator& d) {
  return {Mat2::zero(), MatrixCoeff::constant(d.P), d.Q};
}

FirstOrderOperator reduce_to_first_order(const SecondOrderOperator& d,
                                         const Grid& window, double tol) {
  if (!d.P2.is_zero()) {
    throw VerificationFailure("composition is genuinely second order (P2 != 0)");
  }
  const Mat2 p = d.P1.value(0.0);
  double dev = 0.0;
  for (std::size_t k = 0; k < window.size(); ++k) {
    dev = std::max(dev, (d.P1.value(window[k]) - p).max_norm());
  }
  if (dev > tol) {
    throw VerificationFailure("first-order coefficient is not constant");
  }
  return {p, d.P0};
}

SpinorField apply(const FirstOrderOperator& d, const SpinorField& f,
                  Scheme scheme) {
  const Grid& g = f.grid();
  if (g.spacing() > 0.1) {
    throw std::invalid_argument("apply: grid spacing above 0.1 is too coarse");
  }
  const SpinorField df = differentiate(f, 1, scheme);
  std::vector<Spinor> out(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    const Spinor a = d.P.apply(df[k]);
    const Spinor b = d.Q.value(g[k]).apply(f[k]);
    out[k] = {a[0] + b[0], a[1] + b[1]};
  }
  return SpinorField(g, std::move(out));
}

SecondOrderOperator compose(const FirstOrderOperator& a,
                            const FirstOrderOperator& b) {
  // (P_A d + Q_A)(P_B d + Q_B) f
  //   = P_A P_B f'' + (P_A Q_B + Q_A P_B) f' + (P_A Q_B' + Q_A Q_B) f
  SecondOrderOperator r{a.P * b.P, a.P * b.Q + a.Q * b.P,
                        a.P * b.Q.differentiated() + a.Q * b.Q};
  return r;
}

SymmetryTransform SymmetryTransform::of(TransformKind kind) {
  switch (kind) {
    case TransformKind::I:
      return identity();
    case TransformKind::X:
      return x();
    case TransformKind::Y:
      return y();
    case TransformKind::Z:
      return z();
  }
  throw std::invalid_argument("unknown transform kind");
}

const std::array<SymmetryTransform, 4>& SymmetryTransform::all() {
  static const std::array<SymmetryTransform, 4> ts{identity(), x(), y(), z()};
  return ts;
}

char SymmetryTransform::name() const noexcept {
  switch (kind_) {
    case TransformKind::I:
      return 'I';
    case TransformKind::X:
      return 'X';
    case TransformKind::Y:
      return 'Y';
    case TransformKind::Z:
      return 'Z';
  }
  return '?';
}

FirstOrderOperator transform(const FirstOrderOperator& d,
                             const SymmetryTransform& t) {
  // Each Pauli matrix is its own inverse, and the i in (i sigma_y) cancels.
  switch (t.kind()) {
    case TransformKind::I:
      return d;
    case TransformKind::Y:
      return {pauli::y * d.P * pauli::y, pauli::y * d.Q * pauli::y};
    case TransformKind::X:
      return {-(pauli::x * d.P * pauli::x),
              pauli::x * d.Q.reflected() * pauli::x};
    case TransformKind::Z:
      return {-(pauli::z * d.P * pauli::z),
              pauli::z * d.Q.reflected() * pauli::z};
  }
  throw std::invalid_argument("unknown transform kind");
}

double op_distance(const FirstOrderOperator& a, const FirstOrderOperator& b,
                   const Grid& window) {
  double d = (a.P - b.P).max_norm();
  for (std::size_t k = 0; k < window.size(); ++k) {
    const double x = window[k];
    d = std::max(d, (a.Q.value(x) - b.Q.value(x)).max_norm());
  }
  return d;
}

double op_distance(const SecondOrderOperator& a, const SecondOrderOperator& b,
                   const Grid& window) {
  double d = (a.P2 - b.P2).max_norm();
  for (std::size_t k = 0; k < window.size(); ++k) {
    const double x = window[k];
    d = std::max({d, (a.P1.value(x) - b.P1.value(x)).max_norm(),
                  (a.P0.value(x) - b.P0.value(x)).max_norm()});
  }
  return d;
}

double potential_max_norm(const FirstOrderOperator& d, const Grid& window) {
  double m = 0.0;
  for (std::size_t k = 0; k < window.size(); ++k) {
    m = std::max(m, d.Q.value(window[k]).max_norm());
  }
  return m;
}

Grid identity_window() { return Grid(-10.0, 10.0, 2001); }

}  // namespace zssusy
