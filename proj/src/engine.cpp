#include "csplit/engine.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace csplit {

namespace {

constexpr double kDivergenceBound = 1e12;

bool out_of_bounds(const State& x) {
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const ComplexScalar& z = x[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) ||
        std::abs(z.real()) > kDivergenceBound || std::abs(z.imag()) > kDivergenceBound)
      return true;
  }
  return false;
}

void put_17g(std::ostream& os, double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  os << buf;
}

}  // namespace

ProjectionPolicy parse_projection(const std::string& name) {
  if (name == "never") return ProjectionPolicy::Never;
  if (name == "step") return ProjectionPolicy::EachStep;
  if (name == "output") return ProjectionPolicy::OutputOnly;
  throw std::invalid_argument("unknown projection policy '" + name +
                              "' (expected never, step or output)");
}

std::string to_string(ProjectionPolicy p) {
  switch (p) {
    case ProjectionPolicy::EachStep: return "step";
    case ProjectionPolicy::OutputOnly: return "output";
    default: return "never";
  }
}

State strang_step(const SplitSystem& system, ComplexScalar z, State state) {
  const std::size_t m = system.parts.size();
  if (m < 2) throw std::invalid_argument("strang_step: need at least 2 split parts");
  const ComplexScalar half = 0.5 * z;
  for (std::size_t i = m; i-- > 1;) state = system.parts[i](half, state);
  state = system.parts[0](z, state);
  for (std::size_t i = 1; i < m; ++i) state = system.parts[i](half, state);
  return state;
}

State composition_step(const CompositionScheme& scheme, const SplitSystem& system,
                       State state, double h) {
  for (const auto& alpha : scheme.alphas) state = strang_step(system, alpha * h, state);
  return state;
}

State ab_step(const TwoTermSplitScheme& scheme, const SplitSystem& system,
              State state, double h) {
  if (system.parts.size() != 2)
    throw std::invalid_argument("ab_step: system must have exactly 2 parts");
  if (scheme.b.size() != scheme.a.size() + 1)
    throw std::invalid_argument("ab_step: need s+1 b coefficients");
  state = system.parts[1](scheme.b[0] * h, state);
  for (std::size_t i = 0; i < scheme.a.size(); ++i) {
    state = system.parts[0](scheme.a[i] * h, state);
    state = system.parts[1](scheme.b[i + 1] * h, state);
  }
  return state;
}

Trajectory integrate(const CompositionScheme& scheme, const SplitSystem& system,
                     const RealState& state0, double h, long n_steps,
                     ProjectionPolicy policy, long observe_every) {
  if (h <= 0.0) throw std::invalid_argument("integrate: step size must be positive");
  if (n_steps < 1) throw std::invalid_argument("integrate: need at least one step");
  if (observe_every < 1) throw std::invalid_argument("integrate: observe_every must be >= 1");
  if (state0.size() != system.dimension)
    throw std::invalid_argument("integrate: initial state has wrong dimension");

  Trajectory traj;
  traj.scheme_label = scheme.label;
  traj.h = h;
  traj.policy = policy;
  for (const auto& [name, fn] : system.observables) traj.observable_names.push_back(name);

  State state = state0.cast<ComplexScalar>();
  auto record = [&](double t) {
    TrajectoryRow row;
    row.t = t;
    row.state = state;
    row.observables.reserve(system.observables.size());
    for (const auto& [name, fn] : system.observables) row.observables.push_back(fn(state));
    traj.rows.push_back(std::move(row));
  };
  record(0.0);

  for (long n = 1; n <= n_steps; ++n) {
    state = composition_step(scheme, system, state, h);
    if (policy == ProjectionPolicy::EachStep)
      for (Eigen::Index i = 0; i < state.size(); ++i) state[i] = ComplexScalar{state[i].real(), 0.0};
    if (out_of_bounds(state)) {
      traj.diverged = true;
      record(n * h);
      break;
    }
    if (n % observe_every == 0) record(n * h);
  }
  return traj;
}

void write_csv(const Trajectory& trajectory, std::ostream& os, bool with_state) {
  os << 't';
  for (const auto& name : trajectory.observable_names) os << ',' << name;
  if (with_state && !trajectory.rows.empty())
    for (Eigen::Index i = 0; i < trajectory.rows.front().state.size(); ++i)
      os << ",re_" << i << ",im_" << i;
  os << ",diverged\n";
  for (std::size_t r = 0; r < trajectory.rows.size(); ++r) {
    const auto& row = trajectory.rows[r];
    put_17g(os, row.t);
    for (double v : row.observables) {
      os << ',';
      put_17g(os, v);
    }
    if (with_state)
      for (Eigen::Index i = 0; i < row.state.size(); ++i) {
        os << ',';
        put_17g(os, row.state[i].real());
        os << ',';
        put_17g(os, row.state[i].imag());
      }
    const bool flag = trajectory.diverged && r + 1 == trajectory.rows.size();
    os << ',' << (flag ? 1 : 0) << '\n';
  }
}

}  // namespace csplit
