#include <doctest.h>

#include <cmath>
#include <sstream>

#include "csplit/experiments.hpp"

using namespace csplit;

TEST_CASE("line fit recovers an exact line") {
  const std::vector<double> x{0.0, 1.0, 2.0, 3.0};
  const std::vector<double> y{1.0, 3.0, 5.0, 7.0};
  const auto f = fit_line(x, y);
  CHECK(std::abs(f.slope - 2.0) < 1e-14);
  CHECK(std::abs(f.intercept - 1.0) < 1e-14);
  CHECK_THROWS_AS(fit_line({1.0}, {1.0}), std::invalid_argument);
}

TEST_CASE("growth classifier separates bounded from exponential error") {
  std::vector<double> t, bounded_err, exp_err;
  const double period = 2.0 * M_PI;
  for (int i = 1; i <= 400; ++i) {
    t.push_back(i * period / 4.0);
    bounded_err.push_back(1e-6 * (2.0 + std::sin(t.back())));
    exp_err.push_back(1e-8 * std::exp(0.01 * t.back() / period));
  }
  CHECK_FALSE(classify_error_growth(t, bounded_err, period).exponential);
  const auto g = classify_error_growth(t, exp_err, period);
  CHECK(g.exponential);
  CHECK(g.log_slope_per_period == doctest::Approx(0.01).epsilon(1e-6));
}

TEST_CASE("model comparison prefers the generating model") {
  std::vector<double> t, lin_err, exp_err;
  for (int i = 1; i <= 200; ++i) {
    t.push_back(0.5 * i);
    lin_err.push_back(2.0 + 0.03 * t.back());
    exp_err.push_back(0.5 * std::exp(0.05 * t.back()));
  }
  CHECK(compare_growth_models(t, lin_err).linear_wins);
  CHECK_FALSE(compare_growth_models(t, exp_err).linear_wins);
}

TEST_CASE("benchmark steps give 27-36 evaluations per period") {
  CHECK(harmonic_benchmark_step("s23") == M_PI / 7.0);
  CHECK(harmonic_benchmark_step("s34") == 2.0 * M_PI / 9.0);
  CHECK(harmonic_benchmark_step("s76") == M_PI / 2.0);
  CHECK(harmonic_benchmark_step("s7c6") == M_PI / 2.0);
  CHECK_THROWS_AS(harmonic_benchmark_step("nope"), std::invalid_argument);
}

TEST_CASE("short harmonic benchmark of a sixth-order method stays accurate") {
  const auto run =
      run_harmonic_benchmark(catalog().at("s7c6"), harmonic_benchmark_step("s7c6"), 5.0);
  REQUIRE(!run.diverged);
  CHECK(run.t.size() == 20);  // 4 steps per period
  for (double e : run.position_error) CHECK(e < 1e-3);
  for (double e : run.energy_error) CHECK(e < 1e-3);

  std::ostringstream os;
  write_csv(run, os);
  CHECK(os.str().rfind("t,position_error,energy_error,diverged\n", 0) == 0);
}

TEST_CASE("short lotka-volterra benchmark") {
  const double h = 4.0 * 2.0 * M_PI / 210.0;
  const auto run =
      run_vl_benchmark(catalog().at("s7c6"), h, ProjectionPolicy::OutputOnly, 2.0);
  REQUIRE(!run.diverged);
  CHECK(run.final_rel_error < 1e-6);
  CHECK(run.final_rel_error == run.invariant_rel_error.back());

  std::ostringstream os;
  write_csv(run, os);
  CHECK(os.str().rfind("t,invariant_rel_error,diverged\n", 0) == 0);
}

TEST_CASE("empirical order against the exact harmonic solution") {
  const auto sys = harmonic_oscillator();
  const auto lf = empirical_order(leapfrog(), sys, 0.4, 4, 7.3);
  CHECK(lf.slope == doctest::Approx(2.0).epsilon(0.1));
  const auto third = empirical_order(catalog().at("s23"), sys, 0.4, 4, 7.3);
  CHECK(third.slope == doctest::Approx(3.0).epsilon(0.1));
  CHECK(third.levels_used >= 3);
}

TEST_CASE("empirical order against the fine-step oracle") {
  const auto est = empirical_order(catalog().at("s23"), volterra_lotka(), 0.2, 4, 2.0 * M_PI);
  CHECK(std::abs(est.slope - 3.0) < 0.3);
}

TEST_CASE("empirical order argument validation") {
  const auto sys = harmonic_oscillator();
  CHECK_THROWS_AS(empirical_order(leapfrog(), sys, 0.4, 2, 7.3), std::invalid_argument);
  CHECK_THROWS_AS(empirical_order(leapfrog(), sys, -0.4, 4, 7.3), std::invalid_argument);
}
