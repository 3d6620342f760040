#include "csplit/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace csplit {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;
constexpr double kExpSlopeThreshold = 1e-3;  // per period

void put_row(std::ostream& os, double a, double b, double c, int flag) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%d\n", a, b, c, flag);
  os << buf;
}

double rmse(const std::vector<double>& pred, const std::vector<double>& obs) {
  double acc = 0.0;
  for (std::size_t i = 0; i < obs.size(); ++i) {
    const double r = pred[i] - obs[i];
    acc += r * r;
  }
  return std::sqrt(acc / obs.size());
}

}  // namespace

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("fit_line: need at least two samples");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  LineFit f;
  f.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  f.intercept = (sy - f.slope * sx) / n;
  return f;
}

GrowthClassification classify_error_growth(const std::vector<double>& t,
                                           const std::vector<double>& error, double period) {
  std::vector<double> xs, ys;
  for (std::size_t i = t.size() / 2; i < t.size(); ++i)
    if (error[i] > 0.0 && std::isfinite(error[i])) {
      xs.push_back(t[i] / period);
      ys.push_back(std::log(error[i]));
    }
  GrowthClassification g;
  if (xs.size() < 2) {
    // Second half has no usable samples; make no growth claim.
    g.exponential = false;
    return g;
  }
  g.log_slope_per_period = fit_line(xs, ys).slope;
  g.exponential = g.log_slope_per_period > kExpSlopeThreshold;
  return g;
}

GrowthModelComparison compare_growth_models(const std::vector<double>& t,
                                            const std::vector<double>& error) {
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (error[i] > 0.0 && std::isfinite(error[i])) {
      xs.push_back(t[i]);
      ys.push_back(error[i]);
    }
  if (xs.size() < 3) throw std::invalid_argument("compare_growth_models: too few samples");

  const LineFit lin = fit_line(xs, ys);
  std::vector<double> logs(ys.size());
  for (std::size_t i = 0; i < ys.size(); ++i) logs[i] = std::log(ys[i]);
  const LineFit exp_fit = fit_line(xs, logs);

  std::vector<double> lin_pred(xs.size()), exp_pred(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    lin_pred[i] = lin.intercept + lin.slope * xs[i];
    exp_pred[i] = std::exp(exp_fit.intercept + exp_fit.slope * xs[i]);
  }
  GrowthModelComparison cmp;
  cmp.linear_rmse = rmse(lin_pred, ys);
  cmp.exponential_rmse = rmse(exp_pred, ys);
  cmp.linear_wins = cmp.linear_rmse < cmp.exponential_rmse;
  return cmp;
}

HarmonicBenchmark run_harmonic_benchmark(const CompositionScheme& scheme, double h,
                                         double periods) {
  const SplitSystem sys = harmonic_oscillator();
  const long n_steps = std::lround(periods * kTwoPi / h);
  const Trajectory traj =
      integrate(scheme, sys, sys.default_initial, h, n_steps, ProjectionPolicy::OutputOnly);

  HarmonicBenchmark run;
  run.method = scheme.label;
  run.h = h;
  run.diverged = traj.diverged;
  const double e0 = 0.5 * (sys.default_initial[0] * sys.default_initial[0] +
                           sys.default_initial[1] * sys.default_initial[1]);
  for (std::size_t i = 1; i < traj.rows.size(); ++i) {
    const auto& row = traj.rows[i];
    const RealState exact = harmonic_reference(row.t, sys.default_initial);
    const double dq = row.state[0].real() - exact[0];
    const double dp = row.state[1].real() - exact[1];
    run.t.push_back(row.t);
    run.position_error.push_back(std::hypot(dq, dp));
    run.energy_error.push_back(std::abs(row.observables[0] - e0));
  }
  return run;
}

void write_csv(const HarmonicBenchmark& run, std::ostream& os) {
  os << "t,position_error,energy_error,diverged\n";
  for (std::size_t i = 0; i < run.t.size(); ++i)
    put_row(os, run.t[i], run.position_error[i], run.energy_error[i],
            run.diverged && i + 1 == run.t.size() ? 1 : 0);
}

double harmonic_benchmark_step(const std::string& label) {
  if (label == "s23") return M_PI / 7.0;
  if (label == "s34") return 2.0 * M_PI / 9.0;
  if (label == "s44") return 2.0 * M_PI / 9.0;  // 36 evaluations per period
  if (label == "s76" || label == "s7c6") return M_PI / 2.0;
  throw std::invalid_argument("no benchmark step registered for method '" + label + "'");
}

VolterraLotkaBenchmark run_vl_benchmark(const CompositionScheme& scheme, double h,
                                        ProjectionPolicy policy, double periods) {
  const SplitSystem sys = volterra_lotka();
  const long n_steps = std::lround(periods * kTwoPi / h);
  const Trajectory traj = integrate(scheme, sys, sys.default_initial, h, n_steps, policy);

  VolterraLotkaBenchmark run;
  run.method = scheme.label;
  run.h = h;
  run.policy = policy;
  run.diverged = traj.diverged;
  const double i0 = vl_invariant(sys.default_initial[0], sys.default_initial[1]);
  for (const auto& row : traj.rows) {
    run.t.push_back(row.t);
    run.invariant_rel_error.push_back(std::abs(row.observables[0] - i0) / std::abs(i0));
  }
  run.final_rel_error = run.invariant_rel_error.back();
  return run;
}

void write_csv(const VolterraLotkaBenchmark& run, std::ostream& os) {
  os << "t,invariant_rel_error,diverged\n";
  char buf[96];
  for (std::size_t i = 0; i < run.t.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%d\n", run.t[i], run.invariant_rel_error[i],
                  run.diverged && i + 1 == run.t.size() ? 1 : 0);
    os << buf;
  }
}

OrderEstimate empirical_order(const CompositionScheme& scheme, const SplitSystem& system,
                              double h0, int levels, double horizon) {
  if (levels < 3) throw std::invalid_argument("empirical_order: need at least 3 levels");
  if (h0 <= 0.0 || horizon <= 0.0)
    throw std::invalid_argument("empirical_order: h0 and horizon must be positive");

  auto endpoint = [&](const CompositionScheme& s, double h) {
    const long n = std::lround(horizon / h);
    const Trajectory traj = integrate(s, system, system.default_initial, horizon / n, n,
                                      ProjectionPolicy::Never, n);
    if (traj.diverged) throw std::runtime_error("empirical_order: trajectory diverged");
    return traj.rows.back().state;
  };

  State reference;
  if (system.reference) {
    reference = system.reference(horizon, system.default_initial).cast<ComplexScalar>();
  } else {
    const double h_fine = h0 / std::pow(2.0, levels - 1) / 64.0;
    reference = endpoint(catalog().at("s7c6"), h_fine);
  }

  OrderEstimate est;
  for (int k = 0; k < levels; ++k)
    est.errors.push_back((endpoint(scheme, h0 / std::pow(2.0, k)) - reference).norm());

  // Usable prefix: strictly decreasing and above the double-precision floor.
  int used = 1;
  while (used < levels && est.errors[used] < est.errors[used - 1] && est.errors[used] > 1e-13)
    ++used;
  if (used < 3) used = std::min(3, levels);
  est.levels_used = used;
  est.roundoff_excluded = used < levels;

  std::vector<double> xs(used), ys(used);
  for (int k = 0; k < used; ++k) {
    xs[k] = k;
    ys[k] = std::log2(est.errors[k]);
  }
  est.slope = -fit_line(xs, ys).slope;
  return est;
}

}  // namespace csplit
