#include "zssusy/simd.hpp"

namespace zssusy::simd {
namespace {

void stencil_scalar(const double* in, double* out, std::size_t first,
                    std::size_t last, const int* offsets,
                    const double* weights, std::size_t taps) {
  for (std::size_t p = first; p < last; ++p) {
    double acc[4] = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t k = 0; k < taps; ++k) {
      const double* src = in + 4 * (static_cast<std::ptrdiff_t>(p) + offsets[k]);
      const double w = weights[k];
      for (int c = 0; c < 4; ++c) acc[c] = acc[c] + w * src[c];
    }
    for (int c = 0; c < 4; ++c) out[4 * p + c] = acc[c];
  }
}

double sum_sq_scalar(const double* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * a[i];
  return acc;
}

double sum_sq_diff_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return acc;
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels k{Level::scalar, &stencil_scalar, &sum_sq_scalar,
                         &sum_sq_diff_scalar};
  return k;
}

}  // namespace zssusy::simd
