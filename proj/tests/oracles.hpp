#pragma once

// Independent reference solutions built on Boost.Odeint with fixed steps and
// the potentials written out directly, sharing nothing with the library
// beyond the complex type.

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include <boost/numeric/odeint.hpp>

namespace oracle {

using cplx = std::complex<double>;
using State4 = std::array<double, 4>;  // re1, im1, re2, im2

struct Potential {
  double n = 0, xi = 1, eta = 0, x0 = 0, phi = 0;
  cplx w(double x) const {
    const double s = xi * (x - x0);
    return n * xi * std::exp(cplx(0.0, eta * (x - x0) + phi)) / std::cosh(s);
  }
};

template <class Rhs>
State4 rk78(Rhs rhs, State4 y, double x0, double x1, int steps) {
  boost::numeric::odeint::runge_kutta_fehlberg78<State4> stepper;
  const double dx = (x1 - x0) / steps;
  double x = x0;
  for (int i = 0; i < steps; ++i) {
    stepper.do_step(rhs, y, x, dx);
    x = x0 + (i + 1) * dx;
  }
  return y;
}

struct Jost {
  cplx a, b;
  double R() const { return std::norm(b) / std::norm(a); }
};

// psi1' = i zeta psi1 + w psi2, psi2' = -conj(w) psi1 - i zeta psi2.
inline Jost scatter(const Potential& p, double zeta, double L, int steps) {
  const cplx I(0.0, 1.0);
  auto rhs = [&](const State4& y, State4& dy, double x) {
    const cplx u(y[0], y[1]), v(y[2], y[3]);
    const cplx w = p.w(x);
    const cplx du = I * zeta * u + w * v;
    const cplx dv = -std::conj(w) * u - I * zeta * v;
    dy = {du.real(), du.imag(), dv.real(), dv.imag()};
  };
  const cplx start = std::exp(-I * zeta * L);
  const State4 y = rk78(rhs, {start.real(), start.imag(), 0.0, 0.0}, -L, L, steps);
  return {cplx(y[0], y[1]) * std::exp(-I * zeta * L),
          cplx(y[2], y[3]) * std::exp(I * zeta * L)};
}

// Transfer probability of the sech pulse, Schroedinger picture, from
// (e^{i Delta T/2}, 0) at -T.
inline double pulse_transfer(double n, double tau, double delta, double T,
                             int steps) {
  const cplx I(0.0, 1.0);
  auto rhs = [&](const State4& y, State4& dy, double t) {
    const cplx g(y[0], y[1]), e(y[2], y[3]);
    const double v = n / (tau * std::cosh(t / tau));
    const cplx dg = -I * (0.5 * delta * g + v * e);
    const cplx de = -I * (v * g - 0.5 * delta * e);
    dy = {dg.real(), dg.imag(), de.real(), de.imag()};
  };
  const cplx g0 = std::exp(I * (0.5 * delta * T));
  const State4 y = rk78(rhs, {g0.real(), g0.imag(), 0.0, 0.0}, -T, T, steps);
  return y[2] * y[2] + y[3] * y[3];
}

// Matching determinant at real lambda for a real potential, without any
// renormalization: left solution from (1, 0) at -L, right from (0, 1) at +L.
inline double matching(const Potential& p, double lambda, double L, int steps) {
  auto rhs = [&](const std::array<double, 2>& y, std::array<double, 2>& dy,
                 double x) {
    const double w = p.w(x).real();
    dy = {lambda * y[0] + w * y[1], -w * y[0] - lambda * y[1]};
  };
  boost::numeric::odeint::runge_kutta_fehlberg78<std::array<double, 2>> st;
  auto run = [&](std::array<double, 2> y, double from, double to) {
    const double dx = (to - from) / steps;
    for (int i = 0; i < steps; ++i) st.do_step(rhs, y, from + i * dx, dx);
    return y;
  };
  const auto left = run({1.0, 0.0}, -L, 0.0);
  const auto right = run({0.0, 1.0}, L, 0.0);
  return left[0] * right[1] - left[1] * right[0];
}

// Roots of f on (0, hi] by a coarse scan, then repeated 21-point
// subdivision of each bracket down to `width`.
inline std::vector<double> dense_scan_roots(const std::function<double(double)>& f,
                                            double hi, int coarse,
                                            double width) {
  std::vector<double> roots;
  double x_prev = hi / coarse, f_prev = f(x_prev);
  for (int k = 2; k <= coarse; ++k) {
    const double x = hi * k / coarse;
    const double fx = f(x);
    if ((f_prev < 0) != (fx < 0)) {
      double lo = x_prev, up = x;
      while (up - lo > width) {
        double p = lo, fp = f(lo);
        for (int j = 1; j <= 20; ++j) {
          const double q = lo + (up - lo) * j / 20.0;
          const double fq = f(q);
          if ((fp < 0) != (fq < 0)) {
            lo = p;
            up = q;
            break;
          }
          p = q;
          fp = fq;
        }
      }
      roots.push_back(0.5 * (lo + up));
    }
    x_prev = x;
    f_prev = fx;
  }
  return roots;
}

}  // namespace oracle
