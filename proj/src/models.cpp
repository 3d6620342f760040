#include "csplit/models.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace csplit {

SplitSystem harmonic_oscillator() {
  SplitSystem sys;
  sys.name = "harmonic";
  sys.dimension = 2;
  sys.parts = {
      // drift: q += z p
      [](ComplexScalar z, const State& x) {
        State y = x;
        y[0] += z * x[1];
        return y;
      },
      // kick: p -= z q
      [](ComplexScalar z, const State& x) {
        State y = x;
        y[1] -= z * x[0];
        return y;
      },
  };
  sys.observables = {{"energy", [](const State& x) {
                        const double q = x[0].real(), p = x[1].real();
                        return 0.5 * (q * q + p * p);
                      }}};
  sys.default_initial = Eigen::Vector2d{1.0, 1.0};
  sys.reference = harmonic_reference;
  return sys;
}

RealState harmonic_reference(double t, const RealState& x0) {
  const double c = std::cos(t), s = std::sin(t);
  Eigen::Vector2d out;
  out << x0[0] * c + x0[1] * s, -x0[0] * s + x0[1] * c;
  return out;
}

double vl_invariant(double u, double v) {
  if (u <= 0.0 || v <= 0.0) return std::numeric_limits<double>::quiet_NaN();
  return std::log(u * v * v) - (u + v);
}

SplitSystem volterra_lotka() {
  SplitSystem sys;
  sys.name = "vl";
  sys.dimension = 2;
  sys.parts = {
      // u' = u (v - 2) with v frozen
      [](ComplexScalar z, const State& x) {
        State y = x;
        y[0] = x[0] * std::exp((x[1] - 2.0) * z);
        return y;
      },
      // v' = v (1 - u) with u frozen
      [](ComplexScalar z, const State& x) {
        State y = x;
        y[1] = x[1] * std::exp((1.0 - x[0]) * z);
        return y;
      },
  };
  sys.observables = {{"invariant", [](const State& x) {
                        return vl_invariant(x[0].real(), x[1].real());
                      }}};
  sys.default_initial = Eigen::Vector2d{2.0, 4.0};
  return sys;
}

SplitSystem find_system(const std::string& name) {
  if (name == "harmonic") return harmonic_oscillator();
  if (name == "vl") return volterra_lotka();
  throw std::invalid_argument("unknown system '" + name + "' (available: harmonic, vl)");
}

std::vector<std::string> system_names() { return {"harmonic", "vl"}; }

}  // namespace csplit
