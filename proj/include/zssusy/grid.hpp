#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace zssusy {

using cplx = std::complex<double>;

/// Two-component complex amplitude (psi1, psi2) at one grid point.
using Spinor = std::array<cplx, 2>;

/// Uniform sampling x_k = x_min + k*h, k = 0..num_points-1.
class Grid {
 public:
  static constexpr std::size_t kMinPoints = 8;

  /// Throws std::invalid_argument unless x_min < x_max and
  /// num_points >= kMinPoints.
  Grid(double x_min, double x_max, std::size_t num_points);

  double x_min() const noexcept { return x_min_; }
  double x_max() const noexcept { return x_max_; }
  std::size_t size() const noexcept { return n_; }
  double spacing() const noexcept { return h_; }

  /// The last point is returned as x_max itself.
  double operator[](std::size_t k) const noexcept {
    return k + 1 == n_ ? x_max_ : x_min_ + static_cast<double>(k) * h_;
  }

  std::vector<double> points() const;

  /// Sub-grid keeping the central `fraction` of the points.
  Grid interior(double fraction) const;
  /// Index of the first point kept by interior(fraction).
  std::size_t interior_offset(double fraction) const;

  bool operator==(const Grid& other) const noexcept {
    return x_min_ == other.x_min_ && x_max_ == other.x_max_ && n_ == other.n_;
  }

 private:
  double x_min_;
  double x_max_;
  std::size_t n_;
  double h_;
};

inline Grid make_grid(double x_min, double x_max, std::size_t num_points) {
  return Grid(x_min, x_max, num_points);
}

/// Complex 2-spinor sampled on a grid. Values are finite by construction.
class SpinorField {
 public:
  SpinorField(Grid grid, std::vector<Spinor> values);

  static SpinorField zeros(const Grid& grid);
  static SpinorField sample(const Grid& grid,
                            const std::function<Spinor(double)>& f);

  const Grid& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return values_.size(); }
  const Spinor& operator[](std::size_t k) const noexcept { return values_[k]; }
  std::span<const Spinor> values() const noexcept { return values_; }

  /// Interleaved (re1, im1, re2, im2) view used by the SIMD kernels.
  const double* raw() const noexcept {
    return reinterpret_cast<const double*>(values_.data());
  }

  /// Restriction to Grid::interior(fraction).
  SpinorField interior(double fraction) const;

  /// Discrete L2 norm sqrt(h * sum |psi|^2).
  double norm() const;

  SpinorField operator+(const SpinorField& other) const;
  SpinorField operator-(const SpinorField& other) const;
  friend SpinorField operator*(cplx scale, const SpinorField& f);

 private:
  Grid grid_;
  std::vector<Spinor> values_;
};

enum class Scheme { central4, central8 };

inline int formal_order(Scheme s) { return s == Scheme::central4 ? 4 : 8; }

/// First or second derivative by finite differences. Interior points use the
/// centred stencil; points near the ends use one-sided stencils of the same
/// formal order.
SpinorField differentiate(const SpinorField& f, int order,
                          Scheme scheme = Scheme::central8);

/// ||f - g|| / max(||f||, ||g||, 1e-300). Throws GridMismatch when the
/// grids differ.
double rel_residual(const SpinorField& f, const SpinorField& g);

/// Max over points and components of |f - g|.
double max_abs_diff(const SpinorField& f, const SpinorField& g);

/// Finite-difference weights for the m-th derivative at `x0` from the nodes
/// `nodes` (Fornberg's recursion). Exposed for tests and the soliton
/// residuals.
std::vector<double> fd_weights(double x0, std::span<const double> nodes,
                               int m);

}  // namespace zssusy
