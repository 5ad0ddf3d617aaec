#include "zssusy/akulin.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "zssusy/errors.hpp"

namespace zssusy {

namespace {

const Mat2 kE11{1.0, 0.0, 0.0, 0.0};
const Mat2 kE12{0.0, 1.0, 0.0, 0.0};
const Mat2 kE21{0.0, 0.0, 1.0, 0.0};
const Mat2 kE22{0.0, 0.0, 0.0, 1.0};

double parity(int n) { return n % 2 == 0 ? 1.0 : -1.0; }

MatrixCoeff entry(const Mat2& unit, const ScalarCoeff& s) {
  return MatrixCoeff::term(unit, s);
}

ScalarCoeff cst(double c) { return ScalarCoeff::constant(c); }

}  // namespace

void AkulinSpec::validate() const {
  if (!std::isfinite(n) || !std::isfinite(xi) || !std::isfinite(eta) ||
      !std::isfinite(x0) || !std::isfinite(phi)) {
    throw std::invalid_argument("akulin spec: non-finite parameter");
  }
  if (!(xi > 0.0)) {
    throw std::invalid_argument("akulin spec: xi must be positive");
  }
}

ScalarCoeff AkulinSpec::envelope() const {
  return (n * xi) * (ScalarCoeff::phase_wave(eta, phi - eta * x0) *
                     ScalarCoeff::sech(xi, x0));
}

FirstOrderOperator hamiltonian(int n) {
  return {pauli::z,
          MatrixCoeff::term(-static_cast<double>(n) * pauli::x,
                            ScalarCoeff::sech())};
}

FirstOrderOperator hamiltonian_ext(const AkulinSpec& spec) {
  spec.validate();
  const ScalarCoeff w = spec.envelope();
  // -(sigma_+ w + sigma_- conj(w)) / 2
  return {pauli::z, MatrixCoeff::term(-0.5 * pauli::plus, w) +
                        MatrixCoeff::term(-0.5 * pauli::minus, w.conj())};
}

FirstOrderOperator susy_factor(int n, FactorKind kind) {
  const double sg = parity(n);
  const double nd = static_cast<double>(n);
  const ScalarCoeff sech = ScalarCoeff::sech();
  const ScalarCoeff tanh = ScalarCoeff::tanh();
  const ScalarCoeff cosh = ScalarCoeff::cosh();
  const ScalarCoeff sinh = ScalarCoeff::sinh();

  if (kind.sign == FactorSign::plus) {
    // -(1/2)((-1)^n (n+1) + n tanh x)
    const ScalarCoeff diag = cst(-0.5 * sg * (nd + 1.0)) + (-0.5 * nd) * tanh;
    const ScalarCoeff lower = sg * cosh + (-1.0) * sinh;
    const ScalarCoeff upper = (-0.5 * nd) * sech;
    if (kind.role == FactorRole::B) {
      return {-kE22, entry(kE11, cst(1.0)) + entry(kE12, upper) +
                         entry(kE21, lower) + entry(kE22, diag)};
    }
    return {kE11, entry(kE11, diag) + entry(kE12, upper) + entry(kE21, lower) +
                      entry(kE22, cst(1.0))};
  }

  // +(1/2)((-1)^n (n-1) - n tanh x)
  const ScalarCoeff diag = cst(0.5 * sg * (nd - 1.0)) + (-0.5 * nd) * tanh;
  const ScalarCoeff lower = sg * cosh + sinh;
  const ScalarCoeff upper = (0.5 * nd) * sech;
  if (kind.role == FactorRole::B) {
    return {kE22, entry(kE11, cst(1.0)) + entry(kE12, upper) +
                      entry(kE21, lower) + entry(kE22, diag)};
  }
  // Overall factor (-1) on the whole matrix, including the -d/dx entry.
  const FirstOrderOperator inner{
      -kE11, entry(kE11, diag) + entry(kE12, upper) + entry(kE21, lower) +
                 entry(kE22, cst(1.0))};
  return inner.scaled(-1.0);
}

double factorization_constant(int n, FactorSign sign) {
  const double nd = static_cast<double>(n);
  return parity(n) * (sign == FactorSign::plus ? nd + 0.5 : nd - 0.5);
}

double FactorizationReport::max_residual() const {
  return std::max({residual_H_n, residual_half, residual_H_nplus1});
}

void FactorizationReport::require(double tol) const {
  if (!passed(tol)) {
    throw VerificationFailure(
        "factorization failed for n=" + std::to_string(n) + " T=" +
        std::string(1, transform) +
        ": max residual " + std::to_string(max_residual()));
  }
}

FactorizationReport verify_factorization(int n, const SymmetryTransform& t,
                                         const Grid& window,
                                         const FactorizationOptions& opts) {
  if (std::abs(n) > opts.max_abs_n) {
    throw std::invalid_argument("verify_factorization: |n| exceeds " +
                                std::to_string(opts.max_abs_n));
  }
  const FirstOrderOperator bp =
      transform(susy_factor(n, {FactorSign::plus, FactorRole::B}), t);
  const FirstOrderOperator ap =
      transform(susy_factor(n, {FactorSign::plus, FactorRole::A}), t);
  const FirstOrderOperator am =
      transform(susy_factor(n + 1, {FactorSign::minus, FactorRole::A}), t);
  const FirstOrderOperator bm =
      transform(susy_factor(n + 1, {FactorSign::minus, FactorRole::B}), t);
  const double eps_p = factorization_constant(n, FactorSign::plus) + opts.epsilon_shift;
  const double eps_m =
      factorization_constant(n + 1, FactorSign::minus) + opts.epsilon_shift;
  const double s = t.s_sign();

  const SecondOrderOperator h_n = compose(bp, ap).shifted(eps_p).scaled(s);
  const SecondOrderOperator half_p = compose(ap, bp).shifted(eps_p).scaled(s);
  const SecondOrderOperator half_m = compose(am, bm).shifted(eps_m).scaled(s);
  const SecondOrderOperator h_n1 = compose(bm, am).shifted(eps_m).scaled(s);

  FactorizationReport r;
  r.n = n;
  r.transform = t.name();
  r.p2_exact_zero = h_n.P2.is_zero() && half_p.P2.is_zero() &&
                    half_m.P2.is_zero() && h_n1.P2.is_zero();
  r.residual_H_n = op_distance(h_n, lift(hamiltonian(n)), window);
  r.residual_half = op_distance(half_p, half_m, window);
  r.residual_H_nplus1 = op_distance(h_n1, lift(hamiltonian(n + 1)), window);
  if (r.p2_exact_zero) {
    r.intermediate = FirstOrderOperator{half_p.P1.value(0.0), half_p.P0};
  }
  return r;
}

FirstOrderOperator intertwiner_closed(int n, Direction dir) {
  const double nd = static_cast<double>(n);
  const ScalarCoeff tanh = ScalarCoeff::tanh();
  const ScalarCoeff sech = ScalarCoeff::sech();
  if (dir == Direction::up) {
    return {Mat2::identity(),
            MatrixCoeff::term(-(nd + 0.5) * Mat2::identity(), tanh) +
                MatrixCoeff::term(0.5 * pauli::i_y, sech)};
  }
  return {Mat2::identity(),
          MatrixCoeff::term((nd - 0.5) * Mat2::identity(), tanh) +
              MatrixCoeff::term(-0.5 * pauli::i_y, sech)};
}

FirstOrderOperator intertwiner_from_chain(int n, Direction dir,
                                          const SymmetryTransform& t) {
  const SecondOrderOperator prod =
      dir == Direction::up
          ? compose(transform(susy_factor(n + 1, {FactorSign::minus,
                                                  FactorRole::B}), t),
                    transform(susy_factor(n, {FactorSign::plus,
                                              FactorRole::A}), t))
          : compose(transform(susy_factor(n - 1, {FactorSign::plus,
                                                  FactorRole::B}), t),
                    transform(susy_factor(n, {FactorSign::minus,
                                              FactorRole::A}), t));
  return reduce_to_first_order(prod.scaled(t.v_sign()), identity_window());
}

SpinorField free_eigenstate(SpectralPoint lambda, cplx alpha, cplx beta,
                            const Grid& grid) {
  const cplx l = lambda.lambda;
  if (std::abs(l.real()) * (grid.x_max() - grid.x_min()) > 600.0) {
    throw std::invalid_argument(
        "free_eigenstate: |Re lambda| * width > 600 would overflow");
  }
  return SpinorField::sample(grid, [&](double x) {
    return Spinor{alpha * std::exp(l * x), beta * std::exp(-l * x)};
  });
}

SpinorField chain_eigenstate(int n, SpectralPoint lambda, cplx alpha,
                             cplx beta, const Grid& grid, Scheme scheme) {
  SpinorField psi = free_eigenstate(lambda, alpha, beta, grid);
  const double norm0 = psi.interior(0.9).norm();
  const Direction dir = n >= 0 ? Direction::up : Direction::down;
  const int steps = std::abs(n);
  for (int l = 0; l < steps; ++l) {
    const int from = dir == Direction::up ? l : -l;
    psi = apply(intertwiner_closed(from, dir), psi, scheme);
  }
  const double ratio = norm0 > 0.0 ? psi.interior(0.9).norm() / norm0 : 0.0;
  if (ratio < 1e-10) {
    throw ChainAnnihilated("chain_eigenstate: intertwiner chain annihilated "
                           "the state (norm ratio " +
                               std::to_string(ratio) + ")",
                           ratio);
  }
  return psi;
}

double eigen_residual(const FirstOrderOperator& h, const SpinorField& psi,
                      cplx lambda, double fraction) {
  const SpinorField lhs = apply(h, psi).interior(fraction);
  const SpinorField rhs = (lambda * psi).interior(fraction);
  return rel_residual(lhs, rhs);
}

}  // namespace zssusy
