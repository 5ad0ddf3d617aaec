#include "zssusy/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "zssusy/errors.hpp"
#include "zssusy/simd.hpp"

namespace zssusy {

Grid::Grid(double x_min, double x_max, std::size_t num_points)
    : x_min_(x_min), x_max_(x_max), n_(num_points), h_(0.0) {
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_min < x_max)) {
    throw std::invalid_argument("grid: need finite x_min < x_max");
  }
  if (num_points < kMinPoints) {
    throw std::invalid_argument("grid: need at least " +
                                std::to_string(kMinPoints) + " points, got " +
                                std::to_string(num_points));
  }
  h_ = (x_max - x_min) / static_cast<double>(num_points - 1);
}

std::vector<double> Grid::points() const {
  std::vector<double> xs(n_);
  for (std::size_t k = 0; k < n_; ++k) xs[k] = (*this)[k];
  return xs;
}

std::size_t Grid::interior_offset(double fraction) const {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw std::invalid_argument("grid: interior fraction must be in (0, 1]");
  }
  const auto drop = static_cast<std::size_t>(
      std::floor(0.5 * (1.0 - fraction) * static_cast<double>(n_ - 1) + 1e-9));
  return drop;
}

Grid Grid::interior(double fraction) const {
  const std::size_t k0 = interior_offset(fraction);
  const std::size_t k1 = n_ - 1 - k0;
  return Grid((*this)[k0], (*this)[k1], k1 - k0 + 1);
}

SpinorField::SpinorField(Grid grid, std::vector<Spinor> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw std::invalid_argument("spinor field: value count " +
                                std::to_string(values_.size()) +
                                " does not match grid size " +
                                std::to_string(grid_.size()));
  }
  for (const auto& s : values_) {
    for (const auto& c : s) {
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
        throw std::invalid_argument("spinor field: non-finite entry");
      }
    }
  }
}

SpinorField SpinorField::zeros(const Grid& grid) {
  return SpinorField(grid, std::vector<Spinor>(grid.size(), Spinor{}));
}

SpinorField SpinorField::sample(const Grid& grid,
                                const std::function<Spinor(double)>& f) {
  std::vector<Spinor> v(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) v[k] = f(grid[k]);
  return SpinorField(grid, std::move(v));
}

SpinorField SpinorField::interior(double fraction) const {
  const std::size_t k0 = grid_.interior_offset(fraction);
  Grid sub = grid_.interior(fraction);
  std::vector<Spinor> v(values_.begin() + static_cast<std::ptrdiff_t>(k0),
                        values_.begin() +
                            static_cast<std::ptrdiff_t>(k0 + sub.size()));
  return SpinorField(sub, std::move(v));
}

double SpinorField::norm() const {
  return std::sqrt(grid_.spacing() *
                   simd::active().sum_sq(raw(), 4 * values_.size()));
}

namespace {
void require_same_grid(const SpinorField& f, const SpinorField& g) {
  if (!(f.grid() == g.grid())) {
    throw GridMismatch("spinor fields live on different grids");
  }
}
}  // namespace

SpinorField SpinorField::operator+(const SpinorField& other) const {
  require_same_grid(*this, other);
  std::vector<Spinor> v(values_.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    v[k] = {values_[k][0] + other.values_[k][0],
            values_[k][1] + other.values_[k][1]};
  }
  return SpinorField(grid_, std::move(v));
}

SpinorField SpinorField::operator-(const SpinorField& other) const {
  require_same_grid(*this, other);
  std::vector<Spinor> v(values_.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    v[k] = {values_[k][0] - other.values_[k][0],
            values_[k][1] - other.values_[k][1]};
  }
  return SpinorField(grid_, std::move(v));
}

SpinorField operator*(cplx scale, const SpinorField& f) {
  std::vector<Spinor> v(f.values_.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    v[k] = {scale * f.values_[k][0], scale * f.values_[k][1]};
  }
  return SpinorField(f.grid_, std::move(v));
}

std::vector<double> fd_weights(double x0, std::span<const double> nodes,
                               int m) {
  // Fornberg (1988), weights for derivatives 0..m; returns the m-th row.
  const std::size_t n = nodes.size();
  if (n == 0 || m < 0 || static_cast<std::size_t>(m) >= n) {
    throw std::invalid_argument("fd_weights: need more nodes than the order");
  }
  const auto M = static_cast<std::size_t>(m);
  std::vector<std::vector<double>> c(n, std::vector<double>(M + 1, 0.0));
  double c1 = 1.0;
  double c4 = nodes[0] - x0;
  c[0][0] = 1.0;
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t mn = std::min(i, M);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = nodes[i] - x0;
    for (std::size_t j = 0; j < i; ++j) {
      const double c3 = nodes[i] - nodes[j];
      c2 *= c3;
      if (j == i - 1) {
        for (std::size_t k = mn; k >= 1; --k) {
          c[i][k] = c1 * (static_cast<double>(k) * c[i - 1][k - 1] -
                          c5 * c[i - 1][k]) / c2;
        }
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (std::size_t k = mn; k >= 1; --k) {
        c[j][k] = (c4 * c[j][k] - static_cast<double>(k) * c[j][k - 1]) / c3;
      }
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = c[i][M];
  return w;
}

namespace {

// Weights on integer offsets (in units of h) for derivative `order`.
std::vector<double> integer_weights(const std::vector<int>& offsets,
                                    int order) {
  std::vector<double> nodes(offsets.begin(), offsets.end());
  return fd_weights(0.0, nodes, order);
}

}  // namespace

SpinorField differentiate(const SpinorField& f, int order, Scheme scheme) {
  if (order != 1 && order != 2) {
    throw std::invalid_argument("differentiate: order must be 1 or 2");
  }
  const int p = formal_order(scheme);
  const std::size_t n = f.size();
  // Centred stencils need p+1 nodes for either derivative; off-centre
  // second-derivative stencils need one more to keep order p.
  const int half = p / 2;
  const std::size_t central_width = static_cast<std::size_t>(p + 1);
  const std::size_t onesided_width =
      static_cast<std::size_t>(order == 1 ? p + 1 : p + 2);
  if (n < onesided_width) {
    throw std::invalid_argument("differentiate: grid has too few points for "
                                "the requested stencil");
  }
  const double h = f.grid().spacing();
  const double scale = order == 1 ? 1.0 / h : 1.0 / (h * h);
  const simd::Kernels& kern = simd::active();

  std::vector<Spinor> out(n);
  auto* out_raw = reinterpret_cast<double*>(out.data());
  const double* in_raw = f.raw();

  std::vector<int> offs(central_width);
  for (int k = 0; k < static_cast<int>(central_width); ++k) offs[k] = k - half;
  std::vector<double> w = integer_weights(offs, order);
  for (double& x : w) x *= scale;
  const auto h_sz = static_cast<std::size_t>(half);
  kern.stencil(in_raw, out_raw, h_sz, n - h_sz, offs.data(), w.data(),
               offs.size());

  // Boundary rows, one stencil per row.
  std::vector<int> b_offs(onesided_width);
  for (std::size_t i = 0; i < h_sz; ++i) {
    for (int side = 0; side < 2; ++side) {
      const std::size_t row = side == 0 ? i : n - 1 - i;
      const std::size_t start = side == 0 ? 0 : n - onesided_width;
      for (std::size_t k = 0; k < onesided_width; ++k) {
        b_offs[k] = static_cast<int>(start + k) - static_cast<int>(row);
      }
      std::vector<double> bw = integer_weights(b_offs, order);
      for (double& x : bw) x *= scale;
      kern.stencil(in_raw, out_raw, row, row + 1, b_offs.data(), bw.data(),
                   b_offs.size());
    }
  }
  return SpinorField(f.grid(), std::move(out));
}

double rel_residual(const SpinorField& f, const SpinorField& g) {
  require_same_grid(f, g);
  const simd::Kernels& kern = simd::active();
  const std::size_t nd = 4 * f.size();
  const double h = f.grid().spacing();
  const double diff = std::sqrt(h * kern.sum_sq_diff(f.raw(), g.raw(), nd));
  const double nf = std::sqrt(h * kern.sum_sq(f.raw(), nd));
  const double ng = std::sqrt(h * kern.sum_sq(g.raw(), nd));
  return diff / std::max({nf, ng, 1e-300});
}

double max_abs_diff(const SpinorField& f, const SpinorField& g) {
  require_same_grid(f, g);
  double m = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) {
    m = std::max({m, std::abs(f[k][0] - g[k][0]), std::abs(f[k][1] - g[k][1])});
  }
  return m;
}

}  // namespace zssusy
