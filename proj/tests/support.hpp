#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include "zssusy/grid.hpp"

namespace zssusy::testing {

// Seeded generators for the property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  int integer(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }
  cplx complex(double r) { return {uniform(-r, r), uniform(-r, r)}; }

  // Smooth bounded field: a few Gaussian-windowed waves per component.
  SpinorField smooth_field(const Grid& g) {
    struct Wave {
      cplx amp;
      double k, c, w;
    };
    std::array<std::array<Wave, 3>, 2> waves;
    for (auto& comp : waves) {
      for (auto& w : comp) {
        w = {complex(1.0), uniform(-2.0, 2.0), uniform(-2.0, 2.0),
             uniform(1.0, 3.0)};
      }
    }
    return SpinorField::sample(g, [&](double x) {
      Spinor s{};
      for (int c = 0; c < 2; ++c) {
        for (const auto& w : waves[c]) {
          const double d = (x - w.c) / w.w;
          s[c] += w.amp * std::exp(cplx(-d * d, w.k * x));
        }
      }
      return s;
    });
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace zssusy::testing
