#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <vector>

#include "support.hpp"
#include "zssusy/errors.hpp"
#include "zssusy/grid.hpp"
#include "zssusy/simd.hpp"

using namespace zssusy;

namespace {

SpinorField plane_wave(const Grid& g, double k) {
  return SpinorField::sample(
      g, [k](double x) { return Spinor{std::exp(cplx(0.0, k * x)), 0.0}; });
}

double derivative_error(std::size_t n, double k, Scheme s) {
  const Grid g(-3.0, 3.0, n);
  const SpinorField d = differentiate(plane_wave(g, k), 1, s);
  const SpinorField exact = cplx(0.0, k) * plane_wave(g, k);
  return max_abs_diff(d, exact);
}

}  // namespace

TEST_CASE("make_grid enforces its preconditions") {
  CHECK_THROWS_AS(make_grid(-1.0, 1.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(1.0, 1.0, 10), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(2.0, 1.0, 10), std::invalid_argument);
}

TEST_CASE("grid spacing and end points") {
  const Grid g = make_grid(0.0, 1.0, 11);
  CHECK(g.spacing() == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(g[10] == 1.0);
  CHECK(make_grid(-25.0, 25.0, 4001).spacing() ==
        doctest::Approx(0.0125).epsilon(1e-15));
  const auto pts = g.points();
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    CHECK(pts[k] == 0.0 + static_cast<double>(k) * g.spacing());
  }
}

TEST_CASE("spinor fields reject non-finite values and wrong sizes") {
  const Grid g(0.0, 1.0, 8);
  std::vector<Spinor> v(8, Spinor{1.0, 0.0});
  v[3][1] = std::nan("");
  CHECK_THROWS_AS(SpinorField(g, v), std::invalid_argument);
  CHECK_THROWS_AS(SpinorField(g, std::vector<Spinor>(7)), std::invalid_argument);
}

TEST_CASE("derivative of a constant vanishes") {
  const Grid g(-2.0, 2.0, 101);
  const SpinorField c =
      SpinorField::sample(g, [](double) { return Spinor{cplx(2, 1), 3.0}; });
  for (Scheme s : {Scheme::central4, Scheme::central8}) {
    CHECK(max_abs_diff(differentiate(c, 1, s), SpinorField::zeros(g)) < 1e-11);
    CHECK(max_abs_diff(differentiate(c, 2, s), SpinorField::zeros(g)) < 1e-8);
  }
}

TEST_CASE("plane wave derivative at h = 1e-3") {
  const Grid g(-1.0, 1.0, 2001);
  const SpinorField d = differentiate(plane_wave(g, 1.0), 1, Scheme::central8);
  CHECK(max_abs_diff(d, cplx(0, 1) * plane_wave(g, 1.0)) < 1e-8);
}

TEST_CASE("tanh derivative") {
  const Grid g(-5.0, 5.0, 1001);
  const SpinorField f = SpinorField::sample(
      g, [](double x) { return Spinor{std::tanh(x), 0.0}; });
  const SpinorField exact = SpinorField::sample(g, [](double x) {
    const double s = 1.0 / std::cosh(x);
    return Spinor{s * s, 0.0};
  });
  CHECK(max_abs_diff(differentiate(f, 1, Scheme::central8), exact) < 1e-10);
  CHECK(max_abs_diff(differentiate(f, 1, Scheme::central4), exact) < 1e-6);
}

TEST_CASE("second derivative of a plane wave") {
  const Grid g(-2.0, 2.0, 801);
  const SpinorField d2 = differentiate(plane_wave(g, 2.0), 2, Scheme::central8);
  CHECK(max_abs_diff(d2, cplx(-4.0) * plane_wave(g, 2.0)) < 1e-8);
}

TEST_CASE("order of accuracy: halving h gains 2^order * 0.9") {
  for (Scheme s : {Scheme::central4, Scheme::central8}) {
    const double e1 = derivative_error(121, 3.0, s);
    const double e2 = derivative_error(241, 3.0, s);
    CAPTURE(formal_order(s));
    CHECK(e1 / e2 >= std::pow(2.0, formal_order(s)) * 0.9);
  }
}

TEST_CASE("property: differentiate is linear") {
  testing::Gen gen(11);
  const Grid g(-6.0, 6.0, 601);
  for (int trial = 0; trial < 20; ++trial) {
    const SpinorField f = gen.smooth_field(g);
    const SpinorField h = gen.smooth_field(g);
    const cplx a = gen.complex(2.0), b = gen.complex(2.0);
    const int order = gen.integer(1, 2);
    const Scheme s = trial % 2 ? Scheme::central4 : Scheme::central8;
    const SpinorField lhs = differentiate(a * f + b * h, order, s);
    const SpinorField rhs =
        a * differentiate(f, order, s) + b * differentiate(h, order, s);
    CHECK(rel_residual(lhs, rhs) < 1e-12);
  }
}

TEST_CASE("rel_residual examples") {
  const Grid g(0.0, 1.0, 101);
  const SpinorField f = plane_wave(g, 1.0);
  CHECK(rel_residual(f, f) == 0.0);
  const SpinorField unit = (1.0 / f.norm()) * f;
  CHECK(rel_residual(unit, 2.0 * unit) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(rel_residual(SpinorField::zeros(g), SpinorField::zeros(g)) == 0.0);
  CHECK_THROWS_AS(rel_residual(f, plane_wave(Grid(0.0, 1.0, 102), 1.0)),
                  GridMismatch);
}

TEST_CASE("Fornberg weights reproduce the textbook centred stencils") {
  const std::vector<double> nodes{-2, -1, 0, 1, 2};
  const auto w1 = fd_weights(0.0, nodes, 1);
  const std::vector<double> e1{1.0 / 12, -2.0 / 3, 0.0, 2.0 / 3, -1.0 / 12};
  const auto w2 = fd_weights(0.0, nodes, 2);
  const std::vector<double> e2{-1.0 / 12, 4.0 / 3, -2.5, 4.0 / 3, -1.0 / 12};
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    CHECK(w1[k] == doctest::Approx(e1[k]).epsilon(1e-14));
    CHECK(w2[k] == doctest::Approx(e2[k]).epsilon(1e-14));
  }
}

TEST_CASE("interior window keeps the central fraction") {
  const Grid g(-10.0, 10.0, 2001);
  const Grid in = g.interior(0.9);
  CHECK(in.x_min() == doctest::Approx(-9.0));
  CHECK(in.x_max() == doctest::Approx(9.0));
  CHECK(in.spacing() == doctest::Approx(g.spacing()));
}

TEST_CASE("SIMD kernels agree with the scalar reference") {
  const simd::Kernels* vec = simd::avx2_kernels();
  if (vec == nullptr || !simd::cpu_has_avx2()) {
    MESSAGE("AVX2 unavailable; equivalence test skipped");
    return;
  }
  const simd::Kernels& ref = simd::scalar_kernels();
  testing::Gen gen(7);
  for (std::size_t points : {8u, 9u, 33u, 1000u, 1001u}) {
    std::vector<double> in(4 * points), other(4 * points);
    for (auto& v : in) v = gen.uniform(-3.0, 3.0);
    for (auto& v : other) v = gen.uniform(-3.0, 3.0);

    const int offsets[] = {-2, -1, 0, 1, 2};
    const double weights[] = {1.0 / 12, -2.0 / 3, 0.0, 2.0 / 3, -1.0 / 12};
    std::vector<double> a(4 * points, 0.0), b(4 * points, 0.0);
    ref.stencil(in.data(), a.data(), 2, points - 2, offsets, weights, 5);
    vec->stencil(in.data(), b.data(), 2, points - 2, offsets, weights, 5);
    CHECK(a == b);

    const double s_ref = ref.sum_sq(in.data(), in.size());
    const double s_vec = vec->sum_sq(in.data(), in.size());
    CHECK(std::abs(s_ref - s_vec) <= 1e-13 * s_ref);
    const double d_ref = ref.sum_sq_diff(in.data(), other.data(), in.size());
    const double d_vec = vec->sum_sq_diff(in.data(), other.data(), in.size());
    CHECK(std::abs(d_ref - d_vec) <= 1e-13 * d_ref);
  }
}

TEST_CASE("active kernel set is reported") {
  const auto level = simd::active().level;
  CHECK((level == simd::Level::scalar || level == simd::Level::avx2));
  const char* forced = std::getenv("ZSSUSY_SIMD");
  if (forced != nullptr && std::string_view(forced) == "scalar") {
    CHECK(level == simd::Level::scalar);
  }
  CHECK(!simd::level_name(level).empty());
}
