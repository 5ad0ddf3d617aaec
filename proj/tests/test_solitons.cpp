#include <doctest.h>

#include <cmath>
#include <numbers>

#include "support.hpp"
#include "zssusy/solitons.hpp"

using namespace zssusy;

namespace {
constexpr double kPi = std::numbers::pi;
const double kInvSqrt3 = 1.0 / std::sqrt(3.0);
}  // namespace

TEST_CASE("sine-Gordon closed-form values") {
  const auto k = SGSolution::kink(1.0);
  CHECK(sg_eval(k, 0.0, 0.0) == doctest::Approx(-kPi).epsilon(1e-15));
  CHECK(std::abs(sg_eval(k, 40.0, 0.0)) < 1e-15);
  CHECK(sg_eval(k, -40.0, 0.0) == doctest::Approx(-2 * kPi).epsilon(1e-15));
  CHECK(sg_eval(SGSolution::two_soliton(1.0), 0.0, 0.0) == 0.0);
}

TEST_CASE("sine-Gordon PDE residuals") {
  CHECK(sg_residual(SGSolution::kink(1.0), 1e-3) < 1e-6);
  CHECK(sg_residual(SGSolution::antikink(2.0, 1.0), 1e-3) < 1e-6);
  CHECK(sg_residual(SGSolution::two_soliton(kInvSqrt3), 1e-3) < 1e-6);
  CHECK(sg_residual(SGSolution::two_soliton(1.3, 0.5, false), 1e-3) < 1e-6);
  const auto base = SGSolution::kink(1.0);
  const auto bad = SGSolution::custom(
      [base](double x, double t) { return base(x, t) + 0.1 * x * t; }, 1);
  CHECK(sg_residual(bad, 1e-3) >= 0.09);
  CHECK_THROWS_AS(sg_residual(base, 1e-5), std::invalid_argument);
  CHECK_THROWS_AS(sg_residual(base, 0.1), std::invalid_argument);
}

TEST_CASE("residuals converge at fourth order in h") {
  // Away from the rounding floor the error drops by ~16 per halving.
  const auto k = SGSolution::kink(1.0);
  const double r1 = sg_residual(k, 1e-2), r2 = sg_residual(k, 5e-3);
  CHECK(r1 / r2 > 16.0 * 0.8);
  NLSSolution s;
  s.kind = NLSKind::breather;
  const double n1 = nls_residual(s, 1e-2), n2 = nls_residual(s, 5e-3);
  CHECK(n1 / n2 > 16.0 * 0.8);
}

TEST_CASE("sine-Gordon initial data are Akulin potentials") {
  const Grid g(-10.0, 10.0, 2001);
  const auto kink = SGSolution::kink(1.0);
  CHECK(kink.akulin_n() == -1);
  const auto q = sg_initial_potential(kink, g);
  for (std::size_t k = 0; k < g.size(); ++k) {
    CHECK(std::abs(q[k] + 1.0 / std::cosh(g[k])) < 1e-12);
  }
  CHECK(sg_initial_match(kink, g) < 1e-12);

  const auto two = SGSolution::two_soliton(1.0);
  CHECK(two.akulin_n() == -2);
  CHECK(sg_initial_match(two, g) < 1e-10);
  CHECK(SGSolution::two_soliton(1.0, 0.0, false).akulin_n() == 2);
  CHECK(sg_initial_match(SGSolution::two_soliton(0.7, -1.0, false), g) < 1e-10);

  const auto anti = SGSolution::antikink(2.0, 1.0);
  CHECK(anti.akulin_n() == 1);
  CHECK(sg_initial_match(anti, g) < 1e-12);
}

TEST_CASE("analytic u_x agrees with a difference quotient") {
  testing::Gen gen(43);
  for (int trial = 0; trial < 50; ++trial) {
    const double xi = gen.uniform(0.3, 2.5);
    const SGSolution sols[] = {SGSolution::kink(xi, gen.uniform(-1, 1)),
                               SGSolution::two_soliton(xi, gen.uniform(-1, 1),
                                                       trial % 2 == 0)};
    for (const auto& s : sols) {
      const double x = gen.uniform(-6, 6), t = gen.uniform(-3, 3), h = 1e-5;
      const double fd = (s(x + h, t) - s(x - h, t)) / (2 * h);
      CHECK(std::abs(fd - s.dudx(x, t)) < 1e-6 * std::max(1.0, std::abs(fd)));
    }
  }
}

TEST_CASE("property: |u| <= 2 pi per soliton") {
  testing::Gen gen(47);
  for (int trial = 0; trial < 200; ++trial) {
    const double xi = gen.uniform(0.2, 3.0);
    const SGSolution s = trial % 3 == 0   ? SGSolution::kink(xi)
                         : trial % 3 == 1 ? SGSolution::antikink(xi)
                                          : SGSolution::two_soliton(xi);
    const double u = s(gen.uniform(-50, 50), gen.uniform(-50, 50));
    CHECK(std::isfinite(u));
    CHECK(std::abs(u) <= 2 * kPi * s.soliton_count());
  }
}

TEST_CASE("lab-frame kink velocities") {
  for (double xi : {0.5, 1.0, 2.0}) {
    const auto k = sg_lab_kinematics(SGSolution::kink(xi));
    REQUIRE(k.tracked.size() == 1);
    CHECK(k.v_lab == doctest::Approx((1 - xi * xi) / (1 + xi * xi)));
    CHECK(std::abs(k.tracked[0] - k.v_lab) < 1e-3);
    CHECK(std::abs(k.v_lab) < 1.0);
    CHECK(std::abs(k.V_frame) < 1.0);
  }
  CHECK(std::abs(sg_lab_kinematics(SGSolution::kink(1.0)).tracked[0]) < 1e-3);
  CHECK(std::abs(sg_lab_kinematics(SGSolution::kink(0.5)).tracked[0] - 0.6) < 1e-3);
}

TEST_CASE("two-soliton kinks separate at +-1/2 in the lab") {
  const auto k = sg_lab_kinematics(SGSolution::two_soliton(kInvSqrt3));
  REQUIRE(k.tracked.size() == 2);
  CHECK(std::abs(k.V_frame) < 1e-15);
  CHECK(std::abs(k.tracked[0] + 0.5) < 5e-3);
  CHECK(std::abs(k.tracked[1] - 0.5) < 5e-3);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(std::abs(k.tracked[i] - k.predicted[i]) < 5e-3);
  }
  // Other widths: the frame formula still predicts the tracked speeds.
  const auto k2 = sg_lab_kinematics(SGSolution::two_soliton(1.0));
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(std::abs(k2.tracked[i] - k2.predicted[i]) < 5e-3);
  }
}

TEST_CASE("NLS closed-form values") {
  NLSSolution s;
  CHECK(std::abs(nls_eval(s, 0.0, 0.0) - 1.0) < 1e-15);
  for (double t : {0.3, 1.7, -4.0}) {
    CHECK(std::abs(nls_eval(s, 0.0, t)) == doctest::Approx(1.0).epsilon(1e-15));
  }
  NLSSolution br;
  br.kind = NLSKind::breather;
  CHECK(std::abs(nls_eval(br, 0.0, 0.0) - 2.0) < 1e-15);
  for (double x : {-30.0, 30.0, 200.0}) CHECK(std::isfinite(std::abs(nls_eval(br, x, 0.1))));
}

TEST_CASE("NLS PDE residuals") {
  NLSSolution s;
  CHECK(nls_residual(s, 1e-3) < 1e-6);
  s.eta = 0.5;
  CHECK(nls_residual(s, 1e-3) < 1e-6);
  NLSSolution br;
  br.kind = NLSKind::breather;
  CHECK(nls_residual(br, 1e-3) < 1e-5);
}

TEST_CASE("the literal moving-frame phase is not an exact solution") {
  NLSSolution s;
  s.eta = 0.5;
  s.phase = NLSPhase::comoving;
  CHECK(nls_residual(s, 1e-3) > 1e-2);
  s.eta = 0.0;
  CHECK(nls_residual(s, 1e-3) < 1e-6);
}

TEST_CASE("NLS initial data are Akulin envelopes") {
  const Grid g(-10.0, 10.0, 2001);
  NLSSolution s;
  CHECK(s.akulin_n() == 1);
  CHECK(nls_initial_match(s, AkulinSpec::base(1.0), g) < 1e-12);

  NLSSolution br;
  br.kind = NLSKind::breather;
  CHECK(br.akulin_n() == 2);
  CHECK(nls_initial_match(br, AkulinSpec::base(2.0), g) < 1e-10);

  NLSSolution neg;
  neg.sign = -1;
  neg.phi = kPi / 3;
  CHECK(neg.akulin_n() == -1);
  CHECK(nls_initial_match(neg, {-1.0, 1.0, 0.0, 0.0, kPi / 3}, g) < 1e-12);
}

TEST_CASE("property: Galilean solutions match w_n at t = 0 for any eta") {
  testing::Gen gen(53);
  const Grid g(-10.0, 10.0, 1001);
  for (int trial = 0; trial < 10; ++trial) {
    NLSSolution s;
    s.kind = trial % 2 ? NLSKind::breather : NLSKind::one_soliton;
    s.sign = trial % 4 < 2 ? 1 : -1;
    s.xi = gen.uniform(0.5, 2.0);
    s.eta = gen.uniform(-1.0, 1.0);
    s.x0 = gen.uniform(-2.0, 2.0);
    s.phi = gen.uniform(-3.0, 3.0);
    const AkulinSpec spec{static_cast<double>(s.akulin_n()), s.xi, s.eta, s.x0,
                          s.phi};
    CHECK(nls_initial_match(s, spec, g) < 1e-10);
  }
}

TEST_CASE("property: NLS solutions decay far from the centre") {
  testing::Gen gen(59);
  for (int trial = 0; trial < 20; ++trial) {
    NLSSolution s;
    s.kind = trial % 2 ? NLSKind::breather : NLSKind::one_soliton;
    s.xi = gen.uniform(0.5, 3.0);
    s.x0 = gen.uniform(-3.0, 3.0);
    for (double side : {-1.0, 1.0}) {
      const double x = s.x0 + side * 20.0 / s.xi;
      CHECK(std::abs(nls_eval(s, x, gen.uniform(-2, 2))) < 1e-6 * s.xi);
    }
  }
}

TEST_CASE("property: breather modulus has period pi/4 in t'") {
  testing::Gen gen(61);
  for (int trial = 0; trial < 30; ++trial) {
    NLSSolution br;
    br.kind = NLSKind::breather;
    br.xi = gen.uniform(0.5, 2.0);
    const double x = gen.uniform(-4, 4), t = gen.uniform(-3, 3);
    const double period = (kPi / 4) / (br.xi * br.xi);
    CHECK(std::abs(std::abs(nls_eval(br, x, t + period)) -
                   std::abs(nls_eval(br, x, t))) < 1e-10);
  }
}
