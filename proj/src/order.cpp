#include "csplit/order.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace csplit {

std::vector<ComplexScalar> c_weights(const std::vector<ComplexScalar>& alphas) {
  if (alphas.empty()) throw std::invalid_argument("c_weights: empty coefficient list");
  std::vector<ComplexScalar> c(alphas.size());
  ComplexScalar acc{0.0, 0.0};
  for (std::size_t j = 0; j < alphas.size(); ++j) {
    c[j] = 0.5 * alphas[j] + acc;
    acc += alphas[j];
  }
  return c;
}

OrderReport order6_report(const std::vector<ComplexScalar>& alphas, double tol) {
  const auto c = c_weights(alphas);
  auto power_sum = [&](int k, int l) {
    ComplexScalar s{0.0, 0.0};
    for (std::size_t j = 0; j < alphas.size(); ++j)
      s += std::pow(alphas[j], k) * (l ? std::pow(c[j], l) : ComplexScalar{1.0, 0.0});
    return std::abs(s);
  };

  OrderReport r;
  ComplexScalar total{0.0, 0.0};
  for (const auto& a : alphas) total += a;
  r.residuals["consistency"] = std::abs(total - 1.0);
  r.residuals["p3"] = power_sum(3, 0);
  r.residuals["p5"] = power_sum(5, 0);
  r.residuals["c31"] = power_sum(3, 1);
  r.residuals["c32"] = power_sum(3, 2);
  r.residuals["c33"] = power_sum(3, 3);
  r.residuals["c51"] = power_sum(5, 1);

  for (const auto& [name, value] : r.residuals) r.max_residual = std::max(r.max_residual, value);

  const bool ord1 = r.residuals["consistency"] < tol;
  const bool ord3 = ord1 && r.residuals["p3"] < tol;
  const bool ord6 = ord3 && r.residuals["p5"] < tol && r.residuals["c31"] < tol &&
                    r.residuals["c32"] < tol && r.residuals["c33"] < tol &&
                    r.residuals["c51"] < tol;
  r.passes_at = ord6 ? 6 : ord3 ? 3 : ord1 ? 1 : 0;
  return r;
}

std::pair<std::size_t, std::size_t> real_negativity_witness(const std::vector<double>& alphas) {
  double s1 = 0.0, s3 = 0.0;
  for (double a : alphas) {
    s1 += a;
    s3 += a * a * a;
  }
  if (std::abs(s3) >= 1e-12)
    throw std::domain_error("real_negativity_witness: sum of cubes is " + std::to_string(s3) +
                            ", the order-3 condition does not hold");

  CompositionScheme scheme;
  scheme.alphas.reserve(alphas.size());
  for (double a : alphas) scheme.alphas.emplace_back(a, 0.0);
  scheme.declared_order = 3;
  scheme.label = "witness";
  const TwoTermSplitScheme ab = ab_from_alpha(scheme);

  std::size_t ia = ab.a.size(), ib = ab.b.size();
  for (std::size_t i = 0; i < ab.a.size(); ++i)
    if (ab.a[i].real() < 0.0) { ia = i; break; }
  for (std::size_t i = 0; i < ab.b.size(); ++i)
    if (ab.b[i].real() < 0.0) { ib = i; break; }
  if (ia == ab.a.size() || ib == ab.b.size())
    throw std::domain_error("real_negativity_witness: no negative coefficient found "
                            "(consistency residual " + std::to_string(std::abs(s1 - 1.0)) + ")");
  return {ia, ib};
}

std::string to_json(const OrderReport& report) {
  auto sci = [](double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6e", x);
    return std::string(buf);
  };
  std::string out = "{\"residuals\":{";
  bool first = true;
  for (const auto& [name, value] : report.residuals) {
    if (!first) out += ',';
    first = false;
    out += "\"" + name + "\":" + sci(value);
  }
  out += "},\"max_residual\":" + sci(report.max_residual) +
         ",\"passes_at\":" + std::to_string(report.passes_at) + "}";
  return out;
}

}  // namespace csplit
