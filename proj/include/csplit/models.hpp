#ifndef CSPLIT_MODELS_HPP
#define CSPLIT_MODELS_HPP

#include <string>
#include <vector>

#include "csplit/engine.hpp"

namespace csplit {

// Harmonic oscillator q' = p, p' = -q split into the drift and kick shears.
// Observable "energy" = ((Re q)^2 + (Re p)^2) / 2.  Exact reference rotation
// attached.  Default initial state (1, 1).
SplitSystem harmonic_oscillator();

// Exact rotation (q0 cos t + p0 sin t, -q0 sin t + p0 cos t).
RealState harmonic_reference(double t, const RealState& x0);

// Volterra-Lotka u' = u(v-2), v' = v(1-u) split into the two exact
// exponential flows.  Observable "invariant" = ln(u v^2) - (u + v) on the
// real parts; NaN when Re u <= 0 or Re v <= 0.  Default initial state (2, 4).
SplitSystem volterra_lotka();

double vl_invariant(double u, double v);

// Lookup by registered name ("harmonic" or "vl"); throws
// std::invalid_argument listing the known names.
SplitSystem find_system(const std::string& name);
std::vector<std::string> system_names();

}  // namespace csplit

#endif
