#include "zssusy/solitons.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "zssusy/errors.hpp"

namespace zssusy {

namespace {

constexpr double kPi = std::numbers::pi;

// sinh(2a) / (2 cosh b) without overflow.
double sinh2_over_2cosh(double a, double b) {
  if (a == 0.0) return 0.0;
  const double aa = std::abs(a);
  const double bb = std::abs(b);
  const double mag = std::exp(2.0 * aa - bb) * (-std::expm1(-4.0 * aa)) /
                     (2.0 * (1.0 + std::exp(-2.0 * bb)));
  return std::copysign(mag, a);
}

// cosh(p x) / cosh(q x) without overflow.
double cosh_ratio(double p, double q, double x) {
  const double ax = std::abs(x);
  return std::exp((p - q) * ax) * (1.0 + std::exp(-2.0 * p * ax)) /
         (1.0 + std::exp(-2.0 * q * ax));
}

void check_step(double h) {
  if (!(h >= 1e-4 && h <= 1e-2)) {
    throw std::invalid_argument("residual step h must be in [1e-4, 1e-2]");
  }
}

// 4th-order first-derivative weights on offsets -2..2 (unit spacing).
constexpr std::array<double, 5> kD1{1.0 / 12, -2.0 / 3, 0.0, 2.0 / 3, -1.0 / 12};
// 4th-order second-derivative weights on offsets -2..2.
constexpr std::array<double, 5> kD2{-1.0 / 12, 4.0 / 3, -5.0 / 2, 4.0 / 3,
                                    -1.0 / 12};

double sample_coord(double lo, double hi, int n, int i) {
  return i + 1 == n ? hi : lo + (hi - lo) * i / (n - 1);
}

}  // namespace

SGSolution SGSolution::kink(double xi, double x0) {
  if (!(xi > 0.0)) throw std::invalid_argument("kink: xi must be positive");
  SGSolution s;
  s.kind_ = SGKind::kink;
  s.xi_ = xi;
  s.x0_ = x0;
  s.upper_ = true;
  s.count_ = 1;
  return s;
}

SGSolution SGSolution::antikink(double xi, double x0) {
  SGSolution s = kink(xi, x0);
  s.kind_ = SGKind::antikink;
  s.upper_ = false;
  return s;
}

SGSolution SGSolution::two_soliton(double xi, double x0, bool kinks) {
  if (!(xi > 0.0)) {
    throw std::invalid_argument("two_soliton: xi must be positive");
  }
  SGSolution s;
  s.kind_ = SGKind::two_soliton;
  s.xi_ = xi;
  s.x0_ = x0;
  s.upper_ = kinks;
  s.count_ = 2;
  return s;
}

SGSolution SGSolution::custom(std::function<double(double, double)> u,
                              int soliton_count) {
  SGSolution s;
  s.kind_ = SGKind::custom;
  s.custom_ = std::move(u);
  s.count_ = soliton_count;
  return s;
}

int SGSolution::soliton_count() const noexcept { return count_; }

int SGSolution::akulin_n() const {
  switch (kind_) {
    case SGKind::kink:
      return -1;
    case SGKind::antikink:
      return +1;
    case SGKind::two_soliton:
      return upper_ ? -2 : +2;
    case SGKind::custom:
      break;
  }
  throw std::logic_error("custom sine-Gordon solution has no Akulin index");
}

double SGSolution::operator()(double x, double t) const {
  const double sgn = upper_ ? 1.0 : -1.0;
  switch (kind_) {
    case SGKind::kink:
    case SGKind::antikink: {
      const double s = xi_ * (x - x0_) + t / xi_;
      return -4.0 * std::atan(std::exp(-sgn * s));
    }
    case SGKind::two_soliton: {
      const double a = xi_ * (x - x0_) + t / (3.0 * xi_);
      const double b = -xi_ * (x - x0_) + t / (3.0 * xi_);
      return -4.0 * std::atan(-sgn * sinh2_over_2cosh(a, b));
    }
    case SGKind::custom:
      return custom_(x, t);
  }
  return 0.0;
}

double SGSolution::dudx(double x, double t) const {
  const double sgn = upper_ ? 1.0 : -1.0;
  switch (kind_) {
    case SGKind::kink:
    case SGKind::antikink: {
      // d/dx[-4 atan(e^{-sgn s})] = 2 sgn xi sech(s)
      const double s = xi_ * (x - x0_) + t / xi_;
      return 2.0 * sgn * xi_ / std::cosh(s);
    }
    case SGKind::two_soliton: {
      // u = -4 atan(r), r = -sgn sinh(2a) / (2 cosh b), a_x = xi, b_x = -xi.
      const double a = xi_ * (x - x0_) + t / (3.0 * xi_);
      const double b = -xi_ * (x - x0_) + t / (3.0 * xi_);
      const double r = -sgn * sinh2_over_2cosh(a, b);
      // r_x = -sgn xi (2 cosh 2a cosh b + sinh 2a sinh b) / (2 cosh^2 b)
      //     = -sgn xi (cosh(2a)/cosh(b) + sinh(2a) tanh(b) / (2 cosh b))
      const double c2a_over_cb =
          std::exp(2.0 * std::abs(a) - std::abs(b)) *
          (1.0 + std::exp(-4.0 * std::abs(a))) /
          (1.0 + std::exp(-2.0 * std::abs(b)));
      const double rx = -sgn * xi_ *
                        (c2a_over_cb + sinh2_over_2cosh(a, b) * std::tanh(b));
      return -4.0 * rx / (1.0 + r * r);
    }
    case SGKind::custom:
      break;
  }
  throw std::logic_error("custom sine-Gordon solution has no analytic u_x");
}

double sg_residual(const SGSolution& sol, double h,
                   const ResidualWindow& w) {
  check_step(h);
  double worst = 0.0;
  for (int i = 0; i < w.nx; ++i) {
    const double x = sample_coord(w.x_min, w.x_max, w.nx, i);
    for (int j = 0; j < w.nt; ++j) {
      const double t = sample_coord(w.t_min, w.t_max, w.nt, j);
      double uxt = 0.0;
      for (int p = 0; p < 5; ++p) {
        if (kD1[p] == 0.0) continue;
        for (int q = 0; q < 5; ++q) {
          if (kD1[q] == 0.0) continue;
          uxt += kD1[p] * kD1[q] * sol(x + (p - 2) * h, t + (q - 2) * h);
        }
      }
      uxt /= h * h;
      worst = std::max(worst, std::abs(uxt - std::sin(sol(x, t))));
    }
  }
  return worst;
}

std::vector<double> sg_initial_potential(const SGSolution& sol,
                                         const Grid& grid) {
  std::vector<double> q(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    q[k] = -0.5 * sol.dudx(grid[k], 0.0);
  }
  return q;
}

double sg_initial_match(const SGSolution& sol, const Grid& grid) {
  const AkulinSpec spec{static_cast<double>(sol.akulin_n()), sol.xi(), 0.0,
                        sol.x0(), 0.0};
  const ScalarCoeff w = spec.envelope();
  const std::vector<double> q = sg_initial_potential(sol, grid);
  double worst = 0.0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    worst = std::max(worst, std::abs(cplx(q[k]) - w.value(grid[k])));
  }
  return worst;
}

namespace {

// Lab position of the level set u = level at lab time tb, scanning x_lab.
double track_level(const SGSolution& sol, double level, double tb) {
  constexpr double kHalfWidth = 80.0;
  constexpr int kSamples = 3201;
  auto f = [&](double xb) {
    return sol(0.5 * (xb + tb), 0.5 * (xb - tb)) - level;
  };
  double x_prev = -kHalfWidth;
  double f_prev = f(x_prev);
  for (int i = 1; i < kSamples; ++i) {
    const double x = -kHalfWidth + 2.0 * kHalfWidth * i / (kSamples - 1);
    const double fx = f(x);
    if (f_prev == 0.0) return x_prev;
    if (f_prev * fx < 0.0) {
      double lo = x_prev, hi = x, f_lo = f_prev;
      for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((fm < 0.0) == (f_lo < 0.0)) {
          lo = mid;
          f_lo = fm;
        } else {
          hi = mid;
        }
      }
      return 0.5 * (lo + hi);
    }
    x_prev = x;
    f_prev = fx;
  }
  throw VerificationFailure("sg_lab_kinematics: level set left the window");
}

double fit_slope(const std::vector<double>& t, const std::vector<double>& x) {
  const double n = static_cast<double>(t.size());
  double st = 0, sx = 0, stt = 0, stx = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    st += t[i];
    sx += x[i];
    stt += t[i] * t[i];
    stx += t[i] * x[i];
  }
  return (n * stx - st * sx) / (n * stt - st * st);
}

}  // namespace

FrameKinematics sg_lab_kinematics(const SGSolution& sol) {
  if (sol.kind() == SGKind::custom) {
    throw std::invalid_argument("sg_lab_kinematics: needs a closed-form solution");
  }
  const double xi2 = sol.xi() * sol.xi();
  FrameKinematics k;
  k.v_lab = (1.0 - xi2) / (1.0 + xi2);
  k.V_frame = (3.0 * xi2 - 1.0) / (3.0 * xi2 + 1.0);

  const bool two = sol.kind() == SGKind::two_soliton;
  const double t_lo = two ? 10.0 : 0.0;
  const double t_hi = two ? 20.0 : 5.0;
  const std::vector<double> levels =
      two ? std::vector<double>{-kPi, kPi} : std::vector<double>{-kPi};
  constexpr int kTimes = 21;
  for (double level : levels) {
    std::vector<double> ts, xs;
    for (int i = 0; i < kTimes; ++i) {
      const double tb = t_lo + (t_hi - t_lo) * i / (kTimes - 1);
      ts.push_back(tb);
      xs.push_back(track_level(sol, level, tb));
    }
    k.tracked.push_back(fit_slope(ts, xs));
  }
  std::sort(k.tracked.begin(), k.tracked.end());

  if (two) {
    // Kinks at +-1/2 in their rest frame, seen from a frame moving at V.
    const double V = k.V_frame;
    k.predicted = {(-0.5 - V) / (1.0 + 0.5 * V), (0.5 - V) / (1.0 - 0.5 * V)};
    std::sort(k.predicted.begin(), k.predicted.end());
  } else {
    k.predicted = {k.v_lab};
  }
  return k;
}

int NLSSolution::akulin_n() const {
  const int m = kind == NLSKind::one_soliton ? 1 : 2;
  return sign >= 0 ? m : -m;
}

cplx nls_eval(const NLSSolution& s, double x, double t) {
  const double v = s.velocity();
  const double xp = s.xi * (x - v * t - s.x0);
  const double tp = s.xi * s.xi * t;
  const double carrier = s.phase == NLSPhase::galilean
                             ? s.eta * (x - s.x0) - s.eta * s.eta * t + s.phi
                             : 0.5 * v * xp + s.phi;
  const cplx pre = static_cast<double>(s.sign) * s.xi *
                   std::exp(cplx(0.0, carrier + tp));
  if (s.kind == NLSKind::one_soliton) {
    return pre / std::cosh(xp);
  }
  // 4 (cosh 3x' + 3 e^{8it'} cosh x') / (3 cos 8t' + 4 cosh 2x' + cosh 4x'),
  // numerator and denominator divided by cosh 4x'.
  const double e8 = 8.0 * tp;
  const cplx num = 4.0 * (cosh_ratio(3.0, 4.0, xp) +
                          3.0 * std::exp(cplx(0.0, e8)) *
                              cosh_ratio(1.0, 4.0, xp));
  const double den = 3.0 * std::cos(e8) * cosh_ratio(0.0, 4.0, xp) +
                     4.0 * cosh_ratio(2.0, 4.0, xp) + 1.0;
  return pre * num / den;
}

double nls_residual(const NLSSolution& sol, double h,
                    const ResidualWindow& w) {
  return nls_residual([&](double x, double t) { return nls_eval(sol, x, t); },
                      h, w);
}

double nls_residual(const std::function<cplx(double, double)>& field, double h,
                    const ResidualWindow& w) {
  check_step(h);
  const cplx I(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < w.nx; ++i) {
    const double x = sample_coord(w.x_min, w.x_max, w.nx, i);
    for (int j = 0; j < w.nt; ++j) {
      const double t = sample_coord(w.t_min, w.t_max, w.nt, j);
      cplx ut{}, uxx{};
      for (int p = 0; p < 5; ++p) {
        ut += kD1[p] * field(x, t + (p - 2) * h);
        uxx += kD2[p] * field(x + (p - 2) * h, t);
      }
      ut /= h;
      uxx /= h * h;
      const cplx u = field(x, t);
      worst = std::max(worst, std::abs(I * ut + uxx + 2.0 * std::norm(u) * u));
    }
  }
  return worst;
}

double nls_initial_match(const NLSSolution& sol, const AkulinSpec& spec,
                         const Grid& grid) {
  const ScalarCoeff w = spec.envelope();
  double worst = 0.0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    worst = std::max(worst, std::abs(nls_eval(sol, grid[k], 0.0) -
                                     w.value(grid[k])));
  }
  return worst;
}

}  // namespace zssusy
