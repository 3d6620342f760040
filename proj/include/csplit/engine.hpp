#ifndef CSPLIT_ENGINE_HPP
#define CSPLIT_ENGINE_HPP

#include <Eigen/Dense>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "csplit/coeffs.hpp"

namespace csplit {

using State = Eigen::VectorXcd;
using RealState = Eigen::VectorXd;

// Exact flow of one split part: state after time z (complex effective step).
using ExactFlow = std::function<State(ComplexScalar z, const State&)>;

// Named scalar observable; evaluates on the real part of the state and may
// return NaN to flag a domain violation.
using Observable = std::function<double(const State&)>;

struct SplitSystem {
  std::string name;
  int dimension = 0;
  std::vector<ExactFlow> parts;
  std::vector<std::pair<std::string, Observable>> observables;
  RealState default_initial;
  // Exact solution, when available: (t, x0) -> x(t).
  std::function<RealState(double, const RealState&)> reference;
};

enum class ProjectionPolicy { Never, EachStep, OutputOnly };

ProjectionPolicy parse_projection(const std::string& name);  // never|step|output
std::string to_string(ProjectionPolicy p);

struct TrajectoryRow {
  double t = 0.0;
  State state;
  std::vector<double> observables;
};

struct Trajectory {
  std::vector<TrajectoryRow> rows;
  std::vector<std::string> observable_names;
  std::string scheme_label;
  double h = 0.0;
  ProjectionPolicy policy = ProjectionPolicy::Never;
  bool diverged = false;
};

// One palindromic second-order step: parts m..2 over z/2, part 1 over z,
// parts 2..m over z/2.
State strang_step(const SplitSystem& system, ComplexScalar z, State state);

// Folds strang_step with effective steps alpha_j * h, alphas[0] first.
State composition_step(const CompositionScheme& scheme, const SplitSystem& system,
                       State state, double h);

// Alternates part-2 (b) and part-1 (a) flows; requires exactly 2 parts.
State ab_step(const TwoTermSplitScheme& scheme, const SplitSystem& system,
              State state, double h);

// Fixed-step integration with projection policy and divergence guard
// (any component magnitude above 1e12 aborts with a flagged partial
// trajectory).  Rows are recorded at t = 0 and every observe_every steps.
Trajectory integrate(const CompositionScheme& scheme, const SplitSystem& system,
                     const RealState& state0, double h, long n_steps,
                     ProjectionPolicy policy, long observe_every = 1);

// Header t,<observable names...>,diverged; optional re_i,im_i state columns.
void write_csv(const Trajectory& trajectory, std::ostream& os, bool with_state = false);

}  // namespace csplit

#endif
