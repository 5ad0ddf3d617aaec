#include "zssusy/coeff.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace zssusy {

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return r;
}

namespace {

constexpr int kMaxOrder = 24;

using Poly = std::vector<double>;  // coefficients in powers of t = tanh

Poly poly_derivative(const Poly& p) {
  if (p.size() <= 1) return {0.0};
  Poly d(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) {
    d[i - 1] = static_cast<double>(i) * p[i];
  }
  return d;
}

// p * (1 - t^2)
Poly times_one_minus_t2(const Poly& p) {
  Poly r(p.size() + 2, 0.0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    r[i] += p[i];
    r[i + 2] -= p[i];
  }
  return r;
}

Poly poly_add(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0.0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

double horner(const Poly& p, double t) {
  double r = 0.0;
  for (std::size_t i = p.size(); i-- > 0;) r = r * t + p[i];
  return r;
}

// d^k tanh / dx^k = T_k(tanh x);  d^k sech / dx^k = sech x * S_k(tanh x).
struct HyperbolicTables {
  std::vector<Poly> tanh_derivs;
  std::vector<Poly> sech_derivs;

  HyperbolicTables() {
    tanh_derivs.push_back({0.0, 1.0});
    sech_derivs.push_back({1.0});
    for (int k = 0; k < kMaxOrder; ++k) {
      tanh_derivs.push_back(times_one_minus_t2(poly_derivative(tanh_derivs.back())));
      const Poly& s = sech_derivs.back();
      Poly t_times_s(s.size() + 1, 0.0);
      for (std::size_t i = 0; i < s.size(); ++i) t_times_s[i + 1] = -s[i];
      sech_derivs.push_back(
          poly_add(times_one_minus_t2(poly_derivative(s)), t_times_s));
    }
  }
};

const HyperbolicTables& tables() {
  static const HyperbolicTables t;
  return t;
}

void check_order(int order) {
  if (order < 0 || order > kMaxOrder) {
    throw std::out_of_range("coefficient derivative order out of range");
  }
}

}  // namespace

ScalarCoeff::ScalarCoeff(Fn fn) : fn_(std::make_shared<const Fn>(std::move(fn))) {}

ScalarCoeff ScalarCoeff::constant(cplx c) {
  return ScalarCoeff([c](double, int order) { return order == 0 ? c : cplx{}; });
}

ScalarCoeff ScalarCoeff::sech(double scale, double shift) {
  return ScalarCoeff([scale, shift](double x, int order) -> cplx {
    check_order(order);
    const double u = scale * (x - shift);
    const double s = 1.0 / std::cosh(u);
    const double t = std::tanh(u);
    return std::pow(scale, order) * s * horner(tables().sech_derivs[order], t);
  });
}

ScalarCoeff ScalarCoeff::tanh(double scale, double shift) {
  return ScalarCoeff([scale, shift](double x, int order) -> cplx {
    check_order(order);
    const double t = std::tanh(scale * (x - shift));
    return std::pow(scale, order) * horner(tables().tanh_derivs[order], t);
  });
}

ScalarCoeff ScalarCoeff::cosh(double scale, double shift) {
  return ScalarCoeff([scale, shift](double x, int order) -> cplx {
    const double u = scale * (x - shift);
    return std::pow(scale, order) * (order % 2 == 0 ? std::cosh(u) : std::sinh(u));
  });
}

ScalarCoeff ScalarCoeff::sinh(double scale, double shift) {
  return ScalarCoeff([scale, shift](double x, int order) -> cplx {
    const double u = scale * (x - shift);
    return std::pow(scale, order) * (order % 2 == 0 ? std::sinh(u) : std::cosh(u));
  });
}

ScalarCoeff ScalarCoeff::phase_wave(double rate, double phase) {
  return ScalarCoeff([rate, phase](double x, int order) -> cplx {
    return std::pow(cplx(0.0, rate), order) *
           std::exp(cplx(0.0, rate * x + phase));
  });
}

ScalarCoeff operator+(const ScalarCoeff& a, const ScalarCoeff& b) {
  return ScalarCoeff([a, b](double x, int order) {
    return a.derivative(x, order) + b.derivative(x, order);
  });
}

ScalarCoeff operator*(const ScalarCoeff& a, const ScalarCoeff& b) {
  return ScalarCoeff([a, b](double x, int order) {
    cplx acc{};
    for (int j = 0; j <= order; ++j) {
      acc += binomial(order, j) * a.derivative(x, j) *
             b.derivative(x, order - j);
    }
    return acc;
  });
}

ScalarCoeff operator*(cplx s, const ScalarCoeff& a) {
  return ScalarCoeff(
      [s, a](double x, int order) { return s * a.derivative(x, order); });
}

ScalarCoeff ScalarCoeff::conj() const {
  auto self = *this;
  return ScalarCoeff(
      [self](double x, int order) { return std::conj(self.derivative(x, order)); });
}

MatrixCoeff::MatrixCoeff(Fn fn) : fn_(std::make_shared<const Fn>(std::move(fn))) {}

MatrixCoeff MatrixCoeff::constant(const Mat2& m) {
  return MatrixCoeff(
      [m](double, int order) { return order == 0 ? m : Mat2::zero(); });
}

MatrixCoeff MatrixCoeff::term(const Mat2& m, const ScalarCoeff& s) {
  return MatrixCoeff(
      [m, s](double x, int order) { return s.derivative(x, order) * m; });
}

MatrixCoeff MatrixCoeff::reflected() const {
  auto self = *this;
  return MatrixCoeff([self](double x, int order) {
    Mat2 v = self.derivative(-x, order);
    return order % 2 == 0 ? v : -v;
  });
}

MatrixCoeff MatrixCoeff::differentiated() const {
  auto self = *this;
  return MatrixCoeff(
      [self](double x, int order) { return self.derivative(x, order + 1); });
}

MatrixCoeff operator+(const MatrixCoeff& a, const MatrixCoeff& b) {
  return MatrixCoeff([a, b](double x, int order) {
    return a.derivative(x, order) + b.derivative(x, order);
  });
}

MatrixCoeff operator-(const MatrixCoeff& a, const MatrixCoeff& b) {
  return MatrixCoeff([a, b](double x, int order) {
    return a.derivative(x, order) - b.derivative(x, order);
  });
}

MatrixCoeff operator*(const MatrixCoeff& a, const MatrixCoeff& b) {
  return MatrixCoeff([a, b](double x, int order) {
    Mat2 acc;
    for (int j = 0; j <= order; ++j) {
      acc += binomial(order, j) *
             (a.derivative(x, j) * b.derivative(x, order - j));
    }
    return acc;
  });
}

MatrixCoeff operator*(const Mat2& m, const MatrixCoeff& a) {
  return MatrixCoeff(
      [m, a](double x, int order) { return m * a.derivative(x, order); });
}

MatrixCoeff operator*(const MatrixCoeff& a, const Mat2& m) {
  return MatrixCoeff(
      [m, a](double x, int order) { return a.derivative(x, order) * m; });
}

MatrixCoeff operator*(cplx s, const MatrixCoeff& a) {
  return MatrixCoeff(
      [s, a](double x, int order) { return s * a.derivative(x, order); });
}

}  // namespace zssusy
