#pragma once

#include <functional>
#include <memory>

#include "zssusy/mat2.hpp"

namespace zssusy {

/// A closed-form scalar function of x that can report any derivative
/// exactly. Derivatives of products and sums follow the Leibniz rule, so
/// composed operators stay exact to rounding.
class ScalarCoeff {
 public:
  using Fn = std::function<cplx(double x, int order)>;

  explicit ScalarCoeff(Fn fn);

  cplx value(double x) const { return (*fn_)(x, 0); }
  cplx derivative(double x, int order = 1) const { return (*fn_)(x, order); }
  cplx operator()(double x) const { return value(x); }

  static ScalarCoeff constant(cplx c);
  /// sech(scale*(x - shift)), tanh(...), cosh(...), sinh(...).
  static ScalarCoeff sech(double scale = 1.0, double shift = 0.0);
  static ScalarCoeff tanh(double scale = 1.0, double shift = 0.0);
  static ScalarCoeff cosh(double scale = 1.0, double shift = 0.0);
  static ScalarCoeff sinh(double scale = 1.0, double shift = 0.0);
  /// exp(i*(rate*x + phase)).
  static ScalarCoeff phase_wave(double rate, double phase);

  friend ScalarCoeff operator+(const ScalarCoeff& a, const ScalarCoeff& b);
  friend ScalarCoeff operator*(const ScalarCoeff& a, const ScalarCoeff& b);
  friend ScalarCoeff operator*(cplx s, const ScalarCoeff& a);
  ScalarCoeff conj() const;

 private:
  std::shared_ptr<const Fn> fn_;
};

/// x -> 2x2 complex matrix with exact derivatives of every order.
class MatrixCoeff {
 public:
  using Fn = std::function<Mat2(double x, int order)>;

  explicit MatrixCoeff(Fn fn);

  Mat2 value(double x) const { return (*fn_)(x, 0); }
  Mat2 derivative(double x, int order = 1) const { return (*fn_)(x, order); }

  static MatrixCoeff constant(const Mat2& m);
  static MatrixCoeff zero() { return constant(Mat2::zero()); }
  /// m * s(x).
  static MatrixCoeff term(const Mat2& m, const ScalarCoeff& s);

  /// x -> value(-x); the k-th derivative picks up (-1)^k.
  MatrixCoeff reflected() const;
  /// x -> value'(x).
  MatrixCoeff differentiated() const;

  friend MatrixCoeff operator+(const MatrixCoeff& a, const MatrixCoeff& b);
  friend MatrixCoeff operator-(const MatrixCoeff& a, const MatrixCoeff& b);
  friend MatrixCoeff operator*(const MatrixCoeff& a, const MatrixCoeff& b);
  friend MatrixCoeff operator*(const Mat2& m, const MatrixCoeff& a);
  friend MatrixCoeff operator*(const MatrixCoeff& a, const Mat2& m);
  friend MatrixCoeff operator*(cplx s, const MatrixCoeff& a);

 private:
  std::shared_ptr<const Fn> fn_;
};

double binomial(int n, int k);

}  // namespace zssusy
