#include <cmath>
#include <vector>

#include <doctest.h>

#include "testutil.hpp"
#include "zgm/delta_solver.hpp"
#include "zgm/errors.hpp"
#include "zgm/estimators.hpp"
#include "zgm/stats.hpp"

using namespace zgm;

TEST_CASE("residual endpoints match the analysis") {
  std::vector<double> xs = {1.0, 4.0};
  Epsilon eps(0.01);
  // at the root the residual vanishes
  CHECK(std::fabs(delta_residual(xs, 0.08375, eps)) < 1e-15);
  // near zero the residual approaches -eps*G = -0.02
  CHECK(delta_residual(xs, 1e-12, eps) == doctest::Approx(-0.02).epsilon(1e-6));
  // far out it approaches (A - G) - eps*G = 0.5 - 0.02
  CHECK(delta_residual(xs, 1e8, eps) ==
        doctest::Approx(0.47999998875000028).epsilon(1e-12));
  // strictly increasing in delta
  double prev = delta_residual(xs, 0.001, eps);
  for (double d : {0.01, 0.05, 0.08375, 0.2, 1.0, 10.0}) {
    double r = delta_residual(xs, d, eps);
    CHECK(r > prev);
    prev = r;
  }
}

TEST_CASE("solver reproduces the closed-form two-point shift") {
  Epsilon eps(0.01);
  std::vector<double> xs = {1.0, 4.0};
  DeltaSolution sol = solve_delta(xs, eps);
  REQUIRE(sol.delta.has_value());
  CHECK(testutil::rel_err(*sol.delta, 0.08375) < 1e-11);
  CHECK(std::fabs(sol.residual) <= 1e-9 * 2.0);
  CHECK(sol.iterations <= 200);
  CHECK(sol.bracket_width >= 0.0);

  // scale invariance sanity: {2,8} doubles the shift
  std::vector<double> ys = {2.0, 8.0};
  DeltaSolution sol2 = solve_delta(ys, eps);
  REQUIRE(sol2.delta.has_value());
  CHECK(testutil::rel_err(*sol2.delta, 0.1675) < 1e-11);
}

TEST_CASE("solved shift sits at the boundary of the condition") {
  Epsilon eps(0.001);
  std::vector<double> xs = {0.5, 3.0, 7.25};
  double g = geometric_mean(xs);
  DeltaSolution sol = solve_delta(xs, eps);
  REQUIRE(sol.delta.has_value());
  double d = *sol.delta;
  // just below: strictly inside the condition; just above: outside
  CHECK(delta_residual(xs, 0.99 * d, eps) < 0.0);
  CHECK(delta_residual(xs, 1.01 * d, eps) > 0.0);
  CHECK(std::fabs(sol.residual) <= 1e-9 * g);
}

TEST_CASE("unbounded detection") {
  SUBCASE("all-equal data never leaves the condition") {
    std::vector<double> xs = {2.0, 2.0, 2.0};
    DeltaSolution sol = solve_delta(xs, Epsilon(1e-5));
    CHECK(sol.unbounded());
    CHECK(sol.bracket_width == 0.0);
    CHECK(unboundedness_threshold(xs) == 0.0);
  }
  SUBCASE("threshold value for {1,4} is (A-G)/G = 0.25") {
    std::vector<double> xs = {1.0, 4.0};
    CHECK(unboundedness_threshold(xs) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(solve_delta(xs, Epsilon(0.25)).unbounded());   // boundary counts
    CHECK(solve_delta(xs, Epsilon(0.2501)).unbounded());
    CHECK_FALSE(solve_delta(xs, Epsilon(0.2499)).unbounded());
  }
  SUBCASE("wide epsilon on skewed data") {
    std::vector<double> xs = {1.0, 100.0};
    CHECK(unboundedness_threshold(xs) == doctest::Approx(4.05).epsilon(1e-14));
    CHECK_FALSE(solve_delta(xs, Epsilon(0.9)).unbounded());
  }
}

TEST_CASE("bounded case agrees with a brute-force residual scan") {
  // 20 random 5-element datasets; verify the root by plain bisection in
  // long double on the naive shifted mean.
  testutil::Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> xs;
    for (int i = 0; i < 5; ++i) {
      xs.push_back(rng.lognormal(0.0, 1.0));
    }
    Epsilon eps(1e-4);
    DeltaSolution sol = solve_delta(xs, eps);
    REQUIRE(sol.delta.has_value());
    double g = geometric_mean(xs);
    double target = (1.0 + eps.value()) * g;
    double lo = 0.0, hi = 1e6;
    for (int it = 0; it < 200; ++it) {
      double mid = 0.5 * (lo + hi);
      (testutil::naive_shifted_gm(xs, mid) < target ? lo : hi) = mid;
    }
    CHECK(testutil::rel_err(*sol.delta, lo) < 1e-8);
  }
}

TEST_CASE("solver config validation and failure modes") {
  std::vector<double> xs = {1.0, 4.0};
  SUBCASE("bad config") {
    SolverConfig cfg;
    cfg.rel_tolerance = 0.0;
    CHECK_THROWS_AS(solve_delta(xs, Epsilon(0.01), cfg), Error);
    cfg = SolverConfig{};
    cfg.max_iterations = 0;
    CHECK_THROWS_AS(solve_delta(xs, Epsilon(0.01), cfg), Error);
  }
  SUBCASE("iteration starvation raises NoConvergence") {
    SolverConfig cfg;
    cfg.max_iterations = 3;
    CHECK_THROWS_AS(solve_delta(xs, Epsilon(0.01), cfg), NoConvergence);
  }
  SUBCASE("empty input") {
    std::vector<double> none;
    CHECK_THROWS_AS(solve_delta(none, Epsilon(0.01)), EmptyInput);
  }
}

TEST_CASE("tiny root beyond bisection reach raises NoConvergence") {
  // The root here is around 2e-313; 200 halvings from a unit bracket cannot
  // resolve it to the relative tolerance.
  std::vector<double> xs = {1e-308, 1e300};
  CHECK_THROWS_AS(solve_delta(xs, Epsilon(1e-5)), NoConvergence);
}
