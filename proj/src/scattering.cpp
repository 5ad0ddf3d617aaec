#include "zssusy/scattering.hpp"

#include <cmath>
#include <sstream>

#include "zssusy/errors.hpp"

namespace zssusy {

namespace {

void require_decay(const FirstOrderOperator& h, double L) {
  if (!(h.P == pauli::z)) {
    throw std::invalid_argument("scatter: operator must have P = sigma_z");
  }
  const double tail =
      std::max(h.Q.value(-L).max_norm(), h.Q.value(L).max_norm());
  if (!(tail < 1e-10)) {
    std::ostringstream os;
    os << "scatter: potential has not decayed at |x| = L (max-norm " << tail
       << ")";
    throw std::invalid_argument(os.str());
  }
}

// psi' = sigma_z (lambda - Q(x)) psi
ode::Rhs spectral_rhs(const FirstOrderOperator& h, cplx lambda) {
  return [q = h.Q, lambda](double x, const ode::State& y) {
    const Mat2 m = q.value(x);
    const cplx r0 = lambda * y[0] - (m(0, 0) * y[0] + m(0, 1) * y[1]);
    const cplx r1 = lambda * y[1] - (m(1, 0) * y[0] + m(1, 1) * y[1]);
    return ode::State{r0, -r1};
  };
}

}  // namespace

ScatteringData scatter(const FirstOrderOperator& h, double zeta,
                       const SolverOptions& opts) {
  opts.validate();
  require_decay(h, opts.L);
  const double L = opts.L;
  const ode::State y0{std::exp(cplx(0.0, -zeta * L)), 0.0};
  const ode::State y =
      ode::integrate(spectral_rhs(h, cplx(0.0, zeta)), -L, L, y0, opts);
  ScatteringData d;
  d.zeta = zeta;
  d.a = y[0] * std::exp(cplx(0.0, -zeta * L));
  d.b = y[1] * std::exp(cplx(0.0, zeta * L));
  d.R = std::norm(d.b) / std::norm(d.a);
  return d;
}

ScatteringData scatter(const AkulinSpec& spec, double zeta,
                       const SolverOptions& opts) {
  ScatteringData d = scatter(hamiltonian_ext(spec), zeta, opts);
  if (std::abs(d.unitarity_defect()) > 1e-9) {
    std::ostringstream os;
    os << "scatter: unitarity defect " << d.unitarity_defect()
       << " at zeta = " << zeta;
    throw VerificationFailure(os.str());
  }
  return d;
}

std::vector<ScatteringData> reflectivity_sweep(const AkulinSpec& spec,
                                               std::span<const double> zetas,
                                               const SolverOptions& opts) {
  if (zetas.empty()) {
    throw std::invalid_argument("reflectivity_sweep: empty zeta grid");
  }
  for (double z : zetas) {
    if (!(std::abs(z) <= 20.0)) {
      throw std::invalid_argument("reflectivity_sweep: |zeta| must be <= 20");
    }
  }
  std::vector<ScatteringData> out;
  out.reserve(zetas.size());
  for (double z : zetas) {
    try {
      out.push_back(scatter(spec, z, opts));
    } catch (const std::exception& e) {
      std::ostringstream os;
      os << "zeta = " << z << ": " << e.what();
      throw SweepPointError(z, os.str());
    }
  }
  return out;
}

std::vector<double> log_spaced(double lo, double hi, std::size_t count) {
  if (!(lo > 0.0 && hi > lo) || count < 2) {
    throw std::invalid_argument("log_spaced: need 0 < lo < hi and count >= 2");
  }
  std::vector<double> v(count);
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (std::size_t i = 0; i < count; ++i) {
    v[i] = std::exp(a + (b - a) * static_cast<double>(i) /
                            static_cast<double>(count - 1));
  }
  v.front() = lo;
  v.back() = hi;
  return v;
}

std::vector<double> lin_spaced(double lo, double hi, std::size_t count) {
  if (count == 1) return {lo};
  if (count == 0) throw std::invalid_argument("lin_spaced: count must be > 0");
  std::vector<double> v(count);
  for (std::size_t i = 0; i < count; ++i) {
    v[i] = lo + (hi - lo) * static_cast<double>(i) /
                    static_cast<double>(count - 1);
  }
  v.back() = hi;
  return v;
}

double matching_function(const FirstOrderOperator& h, double lambda,
                         const SolverOptions& opts) {
  opts.validate();
  const auto rhs = spectral_rhs(h, cplx(lambda, 0.0));
  const ode::StepHook normalize = [](ode::State& y) {
    const double n = std::sqrt(std::norm(y[0]) + std::norm(y[1]));
    y[0] /= n;
    y[1] /= n;
  };
  const ode::State left =
      ode::integrate(rhs, -opts.L, 0.0, {1.0, 0.0}, opts, nullptr, normalize);
  const ode::State right =
      ode::integrate(rhs, opts.L, 0.0, {0.0, 1.0}, opts, nullptr, normalize);
  return (left[0] * right[1] - left[1] * right[0]).real();
}

BoundStateSet bound_states(const AkulinSpec& spec, double lambda_max,
                           int scan_points, const SolverOptions& opts) {
  if (!(lambda_max > 0.0)) {
    throw std::invalid_argument("bound_states: lambda_max must be positive");
  }
  if (scan_points < 2) {
    throw std::invalid_argument("bound_states: need at least 2 scan points");
  }
  if (spec.eta != 0.0) {
    throw std::invalid_argument(
        "bound_states: eta != 0 moves the spectrum off the real axis");
  }
  const FirstOrderOperator h = hamiltonian_ext(spec);
  require_decay(h, opts.L);

  BoundStateSet out;
  auto m = [&](double l) { return matching_function(h, l, opts); };
  double l_prev = lambda_max / scan_points;
  double m_prev = m(l_prev);
  for (int k = 2; k <= scan_points; ++k) {
    const double l = lambda_max * k / scan_points;
    const double m_cur = m(l);
    if (m_prev == 0.0) {
      out.eigenvalues.push_back(l_prev);
      out.mismatch_values.push_back(0.0);
    } else if (m_prev * m_cur < 0.0) {
      double lo = l_prev, hi = l, m_lo = m_prev;
      while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        const double m_mid = m(mid);
        if (m_mid == 0.0) {
          lo = hi = mid;
          break;
        }
        if ((m_mid < 0.0) == (m_lo < 0.0)) {
          lo = mid;
          m_lo = m_mid;
        } else {
          hi = mid;
        }
      }
      const double root = 0.5 * (lo + hi);
      out.eigenvalues.push_back(root);
      out.mismatch_values.push_back(m(root));
    }
    l_prev = l;
    m_prev = m_cur;
  }
  return out;
}

}  // namespace zssusy
