// Compiled with -mavx2 and nothing else from the standard library beyond
// <cstddef>, so no AVX-encoded inline functions leak into other TUs.
// FMA is deliberately not enabled: the stencil must round exactly like the
// scalar reference.
#include <immintrin.h>

#include <cstddef>

namespace zssusy::simd::detail {

void stencil_avx2(const double* in, double* out, std::size_t first,
                  std::size_t last, const int* offsets, const double* weights,
                  std::size_t taps) {
  for (std::size_t p = first; p < last; ++p) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t k = 0; k < taps; ++k) {
      const double* src =
          in + 4 * (static_cast<std::ptrdiff_t>(p) + offsets[k]);
      acc = _mm256_add_pd(
          acc, _mm256_mul_pd(_mm256_set1_pd(weights[k]), _mm256_loadu_pd(src)));
    }
    _mm256_storeu_pd(out + 4 * p, acc);
  }
}

namespace {
double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}
}  // namespace

double sum_sq_avx2(const double* a, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256d x0 = _mm256_loadu_pd(a + i);
    __m256d x1 = _mm256_loadu_pd(a + i + 4);
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(x0, x0));
    acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(x1, x1));
  }
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) acc += a[i] * a[i];
  return acc;
}

double sum_sq_diff_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256d d0 = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    __m256d d1 =
        _mm256_sub_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4));
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(d0, d0));
    acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(d1, d1));
  }
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return acc;
}

}  // namespace zssusy::simd::detail
