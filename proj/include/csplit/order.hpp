#ifndef CSPLIT_ORDER_HPP
#define CSPLIT_ORDER_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "csplit/coeffs.hpp"

namespace csplit {

// Residuals of the order conditions up to order six:
//   consistency  |sum alpha - 1|
//   p3, p5       |sum alpha^k|, k = 3, 5
//   ckl          |sum alpha^k c^l| for (k,l) in {(3,1),(3,2),(3,3),(5,1)}
// passes_at is the largest of {1, 3, 6} whose required subset is below tol.
struct OrderReport {
  std::map<std::string, double> residuals;
  double max_residual = 0.0;
  int passes_at = 0;
};

// c_j = alpha_j / 2 + sum_{i<j} alpha_i, in execution order.
std::vector<ComplexScalar> c_weights(const std::vector<ComplexScalar>& alphas);

OrderReport order6_report(const std::vector<ComplexScalar>& alphas, double tol = 1e-12);

// For a real coefficient set with sum alpha = 1 and sum alpha^3 = 0, derives
// the two-term a/b arrays over leapfrog and returns indices (k, l) with
// a[k] < 0 and b[l] < 0.  Throws std::domain_error when the precondition
// fails or (never, for valid inputs) when no witness exists.
std::pair<std::size_t, std::size_t> real_negativity_witness(const std::vector<double>& alphas);

// Residual names mapped to scientific-notation strings.
std::string to_json(const OrderReport& report);

}  // namespace csplit

#endif
