#include "zssusy/ode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "zssusy/errors.hpp"

namespace zssusy {

void SolverOptions::validate() const {
  if (!(L > 5.0)) throw std::invalid_argument("solver options: L must exceed 5");
  if (!(rtol > 0.0) || !(atol > 0.0)) {
    throw std::invalid_argument("solver options: tolerances must be positive");
  }
  if (!(max_step > 0.0)) {
    throw std::invalid_argument("solver options: max_step must be positive");
  }
}

namespace ode {
namespace {

// Dormand & Prince (1980) 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

State axpy(const State& y, double h, std::initializer_list<std::pair<double, const State*>> terms) {
  State r = y;
  for (const auto& [w, k] : terms) {
    r[0] += (h * w) * (*k)[0];
    r[1] += (h * w) * (*k)[1];
  }
  return r;
}

double scaled(double err, double y0, double y1, const SolverOptions& o) {
  const double sc = o.atol + o.rtol * std::max(std::abs(y0), std::abs(y1));
  return err / sc;
}

}  // namespace

State integrate(const Rhs& rhs, double x0, double x1, State y,
                const SolverOptions& opts, Stats* stats, const StepHook& hook) {
  Stats local;
  Stats& st = stats != nullptr ? *stats : local;
  if (x0 == x1) return y;
  const double dir = x1 > x0 ? 1.0 : -1.0;
  const double span = std::abs(x1 - x0);

  double x = x0;
  State k1 = rhs(x, y);
  ++st.evaluations;
  double h = std::min({opts.max_step, 1e-3, span});
  constexpr double kEps = std::numeric_limits<double>::epsilon();

  while (dir * (x1 - x) > 0.0) {
    if (st.accepted + st.rejected >= opts.max_steps) {
      throw IntegrationError("integrate: step budget exhausted");
    }
    if (h < 16.0 * kEps * std::max(1.0, std::abs(x))) {
      throw IntegrationError("integrate: step-size underflow at x = " +
                             std::to_string(x));
    }
    bool last = false;
    if (h >= std::abs(x1 - x)) {
      h = std::abs(x1 - x);
      last = true;
    }
    const double hs = dir * h;
    const State k2 = rhs(x + c2 * hs, axpy(y, hs, {{a21, &k1}}));
    const State k3 = rhs(x + c3 * hs, axpy(y, hs, {{a31, &k1}, {a32, &k2}}));
    const State k4 =
        rhs(x + c4 * hs, axpy(y, hs, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
    const State k5 = rhs(
        x + c5 * hs,
        axpy(y, hs, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
    const State k6 =
        rhs(x + hs, axpy(y, hs,
                         {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4},
                          {a65, &k5}}));
    const State y_new = axpy(
        y, hs, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
    const State k7 = rhs(x + hs, y_new);
    st.evaluations += 6;

    double err2 = 0.0;
    for (std::size_t i = 0; i < 2; ++i) {
      const cplx e = hs * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                           e6 * k6[i] + e7 * k7[i]);
      const double er = scaled(e.real(), y[i].real(), y_new[i].real(), opts);
      const double ei = scaled(e.imag(), y[i].imag(), y_new[i].imag(), opts);
      err2 += er * er + ei * ei;
    }
    const double err = std::sqrt(err2 / 4.0);

    if (err <= 1.0) {
      ++st.accepted;
      x = last ? x1 : x + hs;
      y = y_new;
      k1 = k7;
      if (hook) {
        hook(y);
        k1 = rhs(x, y);
        ++st.evaluations;
      }
      const double fac =
          err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
      h = std::min(opts.max_step, h * fac);
      if (last) break;
    } else {
      ++st.rejected;
      h *= std::clamp(0.9 * std::pow(err, -0.2), 0.1, 1.0);
    }
  }
  return y;
}

}  // namespace ode
}  // namespace zssusy
