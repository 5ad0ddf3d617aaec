#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "support.hpp"
#include "zssusy/errors.hpp"
#include "zssusy/scattering.hpp"

using namespace zssusy;

TEST_CASE("free propagation") {
  const auto d = scatter(AkulinSpec::base(0.0), 0.7);
  CHECK(std::abs(d.a - 1.0) < 1e-10);
  CHECK(d.b == cplx(0.0));
  CHECK(d.R == 0.0);
}

TEST_CASE("n = 1 is reflectionless and stays so as the domain grows") {
  const auto d = scatter(AkulinSpec::base(1.0), 0.7);
  CHECK(d.R < 1e-8);
  SolverOptions wide;
  wide.L = 30.0;
  wide.rtol = 1e-13;
  const auto d30 = scatter(AkulinSpec::base(1.0), 0.7, wide);
  CHECK(d30.R < 1e-8);
  CHECK(std::abs(d30.a - d.a) < 1e-10);
}

TEST_CASE("n = 1/2 reflects; the fixed-step oracle agrees") {
  const auto d = scatter(AkulinSpec::base(0.5), 0.05);
  CHECK(d.R > 0.5);
  const auto o = oracle::scatter({0.5}, 0.05, 25.0, 20000);
  CHECK(std::abs(d.a - o.a) < 1e-8);
  CHECK(std::abs(d.b - o.b) < 1e-8);
}

TEST_CASE("property: Jost coefficients match the oracle") {
  testing::Gen gen(23);
  for (int trial = 0; trial < 6; ++trial) {
    const AkulinSpec s{gen.uniform(-2.5, 2.5), gen.uniform(1.0, 2.0),
                       gen.uniform(-1.0, 1.0), gen.uniform(-2.0, 2.0),
                       gen.uniform(-3.0, 3.0)};
    const double zeta = gen.uniform(-3.0, 3.0);
    const auto d = scatter(s, zeta);
    const auto o = oracle::scatter({s.n, s.xi, s.eta, s.x0, s.phi}, zeta, 25.0,
                                   40000);
    CAPTURE(s.n);
    CAPTURE(zeta);
    CHECK(std::abs(d.a - o.a) < 1e-8);
    CHECK(std::abs(d.b - o.b) < 1e-8);
  }
}

TEST_CASE("sweep examples") {
  const auto zetas = log_spaced(0.1, 5.0, 40);
  double worst = 0.0;
  for (const auto& d : reflectivity_sweep(AkulinSpec::base(2.0), zetas)) {
    worst = std::max(worst, d.R);
  }
  CHECK(worst < 1e-8);

  for (const auto& d : reflectivity_sweep(AkulinSpec::base(0.0), zetas)) {
    CHECK(d.R == 0.0);
  }

  worst = 0.0;
  const auto sweep = reflectivity_sweep({1.0, 2.0, 0.0, 1.0, 0.3}, zetas);
  for (std::size_t i = 0; i < sweep.size(); ++i) {
    CHECK(sweep[i].zeta == zetas[i]);
    worst = std::max(worst, sweep[i].R);
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("sweep preconditions and annotated errors") {
  const std::vector<double> none;
  CHECK_THROWS_AS(reflectivity_sweep(AkulinSpec::base(1.0), none),
                  std::invalid_argument);
  const std::vector<double> far{0.5, 25.0};
  CHECK_THROWS_AS(reflectivity_sweep(AkulinSpec::base(1.0), far),
                  std::invalid_argument);
  SolverOptions starved;
  starved.max_steps = 10;
  const std::vector<double> pts{0.3, 0.6};
  try {
    reflectivity_sweep(AkulinSpec::base(1.0), pts, starved);
    FAIL("expected a sweep error");
  } catch (const SweepPointError& e) {
    CHECK(e.point() == 0.3);
  }
}

TEST_CASE("decay precondition") {
  CHECK_THROWS_AS(scatter(AkulinSpec{1.0, 0.5, 0.0, 0.0, 0.0}, 0.5),
                  std::invalid_argument);
  const FirstOrderOperator not_zs{pauli::x, MatrixCoeff::zero()};
  CHECK_THROWS_AS(scatter(not_zs, 0.5), std::invalid_argument);
}

TEST_CASE("property: unitarity for the extended family") {
  testing::Gen gen(29);
  for (int trial = 0; trial < 20; ++trial) {
    const AkulinSpec s{gen.uniform(-3.0, 3.0), gen.uniform(1.0, 3.0),
                       gen.uniform(-2.0, 2.0), gen.uniform(-3.0, 3.0),
                       gen.uniform(-3.0, 3.0)};
    const auto d = scatter(s, gen.uniform(-5.0, 5.0));
    CHECK(std::abs(d.unitarity_defect()) < 1e-9);
    CHECK(d.R >= 0.0);
  }
}

TEST_CASE("property: reflectionlessness needs integer n") {
  CHECK(scatter(AkulinSpec::base(1.0), 0.1).R < 1e-8);
  CHECK(scatter(AkulinSpec::base(0.5), 0.1).R > 0.1);
  testing::Gen gen(31);
  for (int trial = 0; trial < 10; ++trial) {
    const double n = gen.integer(-4, 4);
    const AkulinSpec s{n, gen.uniform(1.0, 2.5), gen.uniform(-1.0, 1.0),
                       gen.uniform(-2.0, 2.0), gen.uniform(-3.0, 3.0)};
    CHECK(scatter(s, gen.uniform(0.05, 5.0)).R < 1e-8);
  }
}

TEST_CASE("property: zeta parity for real potentials") {
  testing::Gen gen(37);
  for (int trial = 0; trial < 10; ++trial) {
    const AkulinSpec s{gen.uniform(0.1, 2.9), gen.uniform(1.0, 2.0), 0.0,
                       gen.uniform(-2.0, 2.0), 0.0};
    const double z = gen.uniform(0.05, 3.0);
    CHECK(std::abs(scatter(s, z).R - scatter(s, -z).R) < 1e-9);
  }
}

TEST_CASE("property: doubling the domain leaves a and b unchanged") {
  testing::Gen gen(41);
  SolverOptions wide;
  wide.L = 50.0;
  for (int trial = 0; trial < 5; ++trial) {
    const AkulinSpec s{gen.uniform(-2.5, 2.5), 1.0, gen.uniform(-1.0, 1.0), 0.0,
                       gen.uniform(-3.0, 3.0)};
    const double z = gen.uniform(0.1, 3.0);
    const auto d25 = scatter(s, z);
    const auto d50 = scatter(s, z, wide);
    CHECK(std::abs(d25.a - d50.a) < 1e-10);
    CHECK(std::abs(d25.b - d50.b) < 1e-10);
  }
}

TEST_CASE("bound states match a dense scan of the unnormalized determinant") {
  for (int n : {1, 2, 3}) {
    const auto found = bound_states(AkulinSpec::base(n), 3.0, 60);
    const oracle::Potential p{static_cast<double>(n)};
    const auto ref = oracle::dense_scan_roots(
        [&](double l) { return oracle::matching(p, l, 25.0, 4000); }, 3.0, 300,
        1e-9);
    CAPTURE(n);
    REQUIRE(found.eigenvalues.size() == ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) {
      CHECK(std::abs(found.eigenvalues[i] - ref[i]) < 1e-6);
      CHECK(std::abs(found.mismatch_values[i]) < 1e-8);
    }
  }
}

TEST_CASE("bound state examples") {
  const auto one = bound_states(AkulinSpec::base(1.0), 3.0, 60);
  REQUIRE(one.eigenvalues.size() == 1);
  CHECK(one.eigenvalues[0] == doctest::Approx(0.5).epsilon(1e-8));
  const auto two = bound_states(AkulinSpec::base(2.0), 3.0, 60);
  REQUIRE(two.eigenvalues.size() == 2);
  CHECK(two.eigenvalues[0] == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(two.eigenvalues[1] == doctest::Approx(1.5).epsilon(1e-8));
  CHECK(bound_states(AkulinSpec::base(0.0), 3.0, 60).eigenvalues.empty());
  CHECK_THROWS_AS(bound_states({1.0, 1.0, 0.3, 0.0, 0.0}, 3.0, 60),
                  std::invalid_argument);
}

TEST_CASE("spacing helpers") {
  const auto l = log_spaced(0.1, 5.0, 40);
  CHECK(l.front() == 0.1);
  CHECK(l.back() == 5.0);
  CHECK(l.size() == 40);
  const auto s = lin_spaced(-10.0, 10.0, 21);
  CHECK(s[10] == 0.0);
  CHECK(s.back() == 10.0);
}
