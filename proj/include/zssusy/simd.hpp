#pragma once

#include <cstddef>
#include <span>
#include <string_view>

// Data-parallel kernels behind gridops. Each grid point of a spinor field is
// four contiguous doubles (re psi1, im psi1, re psi2, im psi2), which is one
// 256-bit lane group on AVX2. Kernels exist in a scalar reference form and
// an AVX2 form; the active set is picked once at runtime.
namespace zssusy::simd {

enum class Level { scalar, avx2 };

struct Kernels {
  Level level;

  // out[p] = sum_k weights[k] * in[p + offsets[k]] for points p in
  // [first, last), where every index is a point (4 doubles).
  void (*stencil)(const double* in, double* out, std::size_t first,
                  std::size_t last, const int* offsets, const double* weights,
                  std::size_t taps);

  double (*sum_sq)(const double* a, std::size_t n_doubles);
  double (*sum_sq_diff)(const double* a, const double* b,
                        std::size_t n_doubles);
};

const Kernels& scalar_kernels();

/// Null when the binary was built without AVX2 support.
const Kernels* avx2_kernels();

bool cpu_has_avx2();

/// Kernels used by gridops. ZSSUSY_SIMD=scalar in the environment forces the
/// reference path; otherwise AVX2 is used when the CPU supports it.
const Kernels& active();

std::string_view level_name(Level level);

}  // namespace zssusy::simd
