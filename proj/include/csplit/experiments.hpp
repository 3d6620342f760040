#ifndef CSPLIT_EXPERIMENTS_HPP
#define CSPLIT_EXPERIMENTS_HPP

#include <ostream>
#include <string>
#include <vector>

#include "csplit/engine.hpp"
#include "csplit/models.hpp"

namespace csplit {

// Least-squares slope/intercept of y against x.
struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

// Secular-growth decision rule: fit log|error| against t over the second
// half of the run; a slope above 1e-3 per period flags exponential growth.
struct GrowthClassification {
  double log_slope_per_period = 0.0;
  bool exponential = false;
};
GrowthClassification classify_error_growth(const std::vector<double>& t,
                                           const std::vector<double>& error, double period);

// RMS residuals of a linear fit (err ~ c0 + c1 t) and an exponential fit
// (log err ~ d0 + d1 t, compared in the original scale).
struct GrowthModelComparison {
  double linear_rmse = 0.0;
  double exponential_rmse = 0.0;
  bool linear_wins = false;
};
GrowthModelComparison compare_growth_models(const std::vector<double>& t,
                                            const std::vector<double>& error);

// Long-time harmonic oscillator benchmark: position and energy error of the
// real-part output against the exact rotation, initial state (1, 1).
struct HarmonicBenchmark {
  std::string method;
  double h = 0.0;
  bool diverged = false;
  std::vector<double> t;
  std::vector<double> position_error;
  std::vector<double> energy_error;
};
HarmonicBenchmark run_harmonic_benchmark(const CompositionScheme& scheme, double h,
                                         double periods);
void write_csv(const HarmonicBenchmark& run, std::ostream& os);

// Default step for the harmonic benchmark: 27-28 basic-method evaluations
// per period (pi/7 for s23, 2pi/9 for s34, pi/2 for the 7-stage methods).
double harmonic_benchmark_step(const std::string& label);

// Long-time Volterra-Lotka benchmark: relative first-integral error from
// (2, 4) under the chosen projection policy.
struct VolterraLotkaBenchmark {
  std::string method;
  double h = 0.0;
  ProjectionPolicy policy = ProjectionPolicy::Never;
  bool diverged = false;
  std::vector<double> t;
  std::vector<double> invariant_rel_error;
  double final_rel_error = 0.0;
};
VolterraLotkaBenchmark run_vl_benchmark(const CompositionScheme& scheme, double h,
                                        ProjectionPolicy policy, double periods);
void write_csv(const VolterraLotkaBenchmark& run, std::ostream& os);

// Empirical convergence order by step halving.  Endpoint error is measured
// in the complex norm against the exact solution when the system provides
// one, otherwise against a fine-step s7c6 run at 1/64 of the finest level.
// Levels below the roundoff floor (error under 1e-13, or no longer
// decreasing) are excluded from the fit.
struct OrderEstimate {
  double slope = 0.0;
  std::vector<double> errors;       // one per level, coarse to fine
  int levels_used = 0;
  bool roundoff_excluded = false;
};
OrderEstimate empirical_order(const CompositionScheme& scheme, const SplitSystem& system,
                              double h0, int levels, double horizon);

}  // namespace csplit

#endif
