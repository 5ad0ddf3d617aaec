#include "zssusy/darboux.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <stdexcept>

#include "zssusy/errors.hpp"

namespace zssusy {

FixedEigenstate FixedEigenstate::canonical() {
  return {cplx(0.5, 0.0), [](double x) { return cplx(std::exp(0.5 * x)); },
          [](double x) { return cplx(std::exp(-0.5 * x)); }};
}

FirstOrderOperator sg_hamiltonian(const ScalarCoeff& q) {
  return {pauli::z, MatrixCoeff::term(-0.5 * pauli::plus, q) +
                        MatrixCoeff::term(-0.5 * pauli::minus, q.conj())};
}

Mat2 DarbouxData::U(double x, cplx lambda) const {
  const cplx z = zeta_fn(x);
  const cplx sum = z + 1.0 / z;
  const cplx diff = z - 1.0 / z;
  return (-0.5 * lambda0 * sum) * Mat2::identity() +
         (-0.5 * lambda0 * diff) * pauli::y + lambda * pauli::z;
}

cplx DarbouxData::q_new(double x) const {
  const cplx z = zeta_fn(x);
  return -q_background(x) + lambda0 * (z - 1.0 / z);
}

double fixed_state_residual(const FixedEigenstate& fixed, const ScalarCoeff& q,
                            const Grid& grid) {
  const SpinorField phi = SpinorField::sample(grid, [&](double x) {
    return Spinor{fixed.phi1(x), fixed.phi2(x)};
  });
  return eigen_residual(sg_hamiltonian(q), phi, fixed.lambda0, 1.0);
}

DarbouxData build_darboux(const FixedEigenstate& fixed, const ScalarCoeff& q,
                          const Grid& window, ZetaConvention convention) {
  const cplx I(0.0, 1.0);
  for (double x : window.points()) {
    const cplx p1 = fixed.phi1(x);
    const cplx p2 = fixed.phi2(x);
    const double scale = std::abs(p1) + std::abs(p2);
    if (!(std::abs(p1 - I * p2) > 1e-12 * scale)) {
      throw VerificationFailure("build_darboux: phi1 - i phi2 vanishes at x = " +
                                std::to_string(x));
    }
  }
  DarbouxData d;
  d.convention = convention;
  d.lambda0 = fixed.lambda0;
  auto phi1 = fixed.phi1;
  auto phi2 = fixed.phi2;
  const bool flip = convention == ZetaConvention::reciprocal;
  d.zeta_fn = [phi1, phi2, flip, I](double x) {
    const cplx p = phi1(x) + I * phi2(x);
    const cplx m = phi1(x) - I * phi2(x);
    return flip ? m / p : p / m;
  };
  d.q_background = [q](double x) { return q.value(x); };
  return d;
}

namespace {

// Least-squares c for f ~ c g over all samples of all basis states.
CoincidenceFit fit_scale(const std::vector<Spinor>& f,
                         const std::vector<Spinor>& g) {
  cplx gf{};
  double gg = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) {
    for (int c = 0; c < 2; ++c) {
      gf += std::conj(g[k][c]) * f[k][c];
      gg += std::norm(g[k][c]);
    }
  }
  CoincidenceFit fit;
  if (gg == 0.0) {
    fit.scale = 0.0;
    fit.residual = std::numeric_limits<double>::infinity();
    return fit;
  }
  fit.scale = gf / gg;
  double rr = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) {
    for (int c = 0; c < 2; ++c) rr += std::norm(f[k][c] - fit.scale * g[k][c]);
  }
  fit.residual = std::sqrt(rr / gg);
  return fit;
}

// Upsilon psi with d/dx psi = sigma_z (lambda - Q_H) psi.
Spinor on_shell(const FirstOrderOperator& ups, const FirstOrderOperator& h,
                double x, cplx lambda, const Spinor& psi) {
  const Mat2 dpsi_op = pauli::z * (lambda * Mat2::identity() - h.Q.value(x));
  return (ups.P * dpsi_op + ups.Q.value(x)).apply(psi);
}

}  // namespace

ConjectureReport conjecture_check(const DarbouxData& data, int n_from,
                                  Direction direction,
                                  const std::vector<SpectralPoint>& lambdas,
                                  const Grid& grid) {
  if (lambdas.empty()) {
    throw std::invalid_argument("conjecture_check: no spectral points");
  }
  const FirstOrderOperator h = hamiltonian(n_from);
  for (double x : grid.points()) {
    const Mat2 expect = h.Q.value(x);
    const cplx q = data.q_background(x);
    const Mat2 got = -0.5 * (q * pauli::plus + std::conj(q) * pauli::minus);
    if ((expect - got).max_norm() > 1e-12) {
      throw std::invalid_argument(
          "conjecture_check: background does not match H_n_from");
    }
  }
  const Direction other =
      direction == Direction::up ? Direction::down : Direction::up;
  const FirstOrderOperator ups = intertwiner_closed(n_from, direction);
  const FirstOrderOperator ups_other = intertwiner_closed(n_from, other);
  const FirstOrderOperator h_up = hamiltonian(n_from + 1);
  const FirstOrderOperator h_down = hamiltonian(n_from - 1);

  ConjectureReport report;
  report.n_from = n_from;
  report.direction = direction;
  for (const SpectralPoint& sp : lambdas) {
    std::vector<Spinor> f, g, g_other;
    double res_up = 0.0, res_down = 0.0;
    for (const auto& [alpha, beta] :
         {std::pair<cplx, cplx>{1.0, 0.0}, std::pair<cplx, cplx>{0.0, 1.0}}) {
      const SpinorField psi = chain_eigenstate(n_from, sp, alpha, beta, grid);
      std::vector<Spinor> u_psi(grid.size());
      for (std::size_t k = 0; k < grid.size(); ++k) {
        const double x = grid[k];
        u_psi[k] = data.U(x, sp.lambda).apply(psi[k]);
        f.push_back(u_psi[k]);
        g.push_back(on_shell(ups, h, x, sp.lambda, psi[k]));
        g_other.push_back(on_shell(ups_other, h, x, sp.lambda, psi[k]));
      }
      const SpinorField u_field(grid, std::move(u_psi));
      res_up = std::max(res_up, eigen_residual(h_up, u_field, sp.lambda));
      res_down = std::max(res_down, eigen_residual(h_down, u_field, sp.lambda));
    }
    ConjecturePoint pt;
    pt.lambda = sp.lambda;
    pt.target = fit_scale(f, g);
    pt.mirror = fit_scale(f, g_other);
    pt.eigen_residual_up = res_up;
    pt.eigen_residual_down = res_down;
    report.max_rel_dev = std::max(report.max_rel_dev, pt.target.residual);
    report.points.push_back(pt);
  }
  return report;
}

}  // namespace zssusy
