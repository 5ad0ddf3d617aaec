#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

namespace zssusy {

using cplx = std::complex<double>;

/// Row-major 2x2 complex matrix [[a, b], [c, d]].
struct Mat2 {
  std::array<cplx, 4> m{};

  constexpr Mat2() = default;
  constexpr Mat2(cplx a, cplx b, cplx c, cplx d) : m{a, b, c, d} {}

  cplx& operator()(int r, int c) { return m[static_cast<std::size_t>(2 * r + c)]; }
  const cplx& operator()(int r, int c) const {
    return m[static_cast<std::size_t>(2 * r + c)];
  }

  static Mat2 zero() { return {}; }
  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

  Mat2& operator+=(const Mat2& o) {
    for (std::size_t i = 0; i < 4; ++i) m[i] += o.m[i];
    return *this;
  }
  Mat2& operator-=(const Mat2& o) {
    for (std::size_t i = 0; i < 4; ++i) m[i] -= o.m[i];
    return *this;
  }
  Mat2& operator*=(cplx s) {
    for (auto& v : m) v *= s;
    return *this;
  }

  friend Mat2 operator+(Mat2 a, const Mat2& b) { return a += b; }
  friend Mat2 operator-(Mat2 a, const Mat2& b) { return a -= b; }
  friend Mat2 operator-(Mat2 a) { return a *= -1.0; }
  friend Mat2 operator*(cplx s, Mat2 a) { return a *= s; }
  friend Mat2 operator*(Mat2 a, cplx s) { return a *= s; }
  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.m[0] * b.m[0] + a.m[1] * b.m[2], a.m[0] * b.m[1] + a.m[1] * b.m[3],
            a.m[2] * b.m[0] + a.m[3] * b.m[2], a.m[2] * b.m[1] + a.m[3] * b.m[3]};
  }
  friend bool operator==(const Mat2& a, const Mat2& b) { return a.m == b.m; }

  std::array<cplx, 2> apply(const std::array<cplx, 2>& v) const {
    return {m[0] * v[0] + m[1] * v[1], m[2] * v[0] + m[3] * v[1]};
  }

  Mat2 adjoint() const {
    return {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])};
  }

  /// Largest entry modulus.
  double max_norm() const {
    double r = 0.0;
    for (const auto& v : m) r = std::max(r, std::abs(v));
    return r;
  }

  bool is_zero() const {
    return std::all_of(m.begin(), m.end(),
                       [](const cplx& v) { return v == cplx{}; });
  }
};

namespace pauli {
inline const Mat2 x{0.0, 1.0, 1.0, 0.0};
inline const Mat2 y{0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0};
inline const Mat2 z{1.0, 0.0, 0.0, -1.0};
/// sigma_x + i sigma_y = [[0, 2], [0, 0]].
inline const Mat2 plus{0.0, 2.0, 0.0, 0.0};
/// sigma_x - i sigma_y.
inline const Mat2 minus{0.0, 0.0, 2.0, 0.0};
/// i sigma_y = [[0, 1], [-1, 0]].
inline const Mat2 i_y{0.0, 1.0, -1.0, 0.0};
}  // namespace pauli

}  // namespace zssusy
