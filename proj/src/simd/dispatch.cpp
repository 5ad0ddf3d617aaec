#include <cstdlib>
#include <string_view>

#include "zssusy/simd.hpp"

namespace zssusy::simd {

#ifdef ZSSUSY_HAVE_AVX2
namespace detail {
void stencil_avx2(const double*, double*, std::size_t, std::size_t, const int*,
                  const double*, std::size_t);
double sum_sq_avx2(const double*, std::size_t);
double sum_sq_diff_avx2(const double*, const double*, std::size_t);
}  // namespace detail
#endif

bool cpu_has_avx2() {
#if defined(ZSSUSY_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const Kernels* avx2_kernels() {
#ifdef ZSSUSY_HAVE_AVX2
  static const Kernels k{Level::avx2, &detail::stencil_avx2,
                         &detail::sum_sq_avx2, &detail::sum_sq_diff_avx2};
  return &k;
#else
  return nullptr;
#endif
}

const Kernels& active() {
  static const Kernels& chosen = []() -> const Kernels& {
    const char* env = std::getenv("ZSSUSY_SIMD");
    if (env != nullptr && std::string_view(env) == "scalar") {
      return scalar_kernels();
    }
    if (avx2_kernels() != nullptr && cpu_has_avx2()) return *avx2_kernels();
    return scalar_kernels();
  }();
  return chosen;
}

std::string_view level_name(Level level) {
  switch (level) {
    case Level::scalar:
      return "scalar";
    case Level::avx2:
      return "avx2";
  }
  return "unknown";
}

}  // namespace zssusy::simd
