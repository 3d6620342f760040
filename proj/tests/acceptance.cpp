// Integration acceptance suite: one pass/fail line per criterion, nonzero
// exit code when any criterion fails.
#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "csplit/coeffs.hpp"
#include "csplit/experiments.hpp"
#include "csplit/linstab.hpp"
#include "csplit/models.hpp"
#include "csplit/order.hpp"
#include "generators.hpp"

using namespace csplit;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool ok, const std::string& detail) {
  std::printf("[%d/8] %-28s %s  (%s)\n", index, name.c_str(), ok ? "PASS" : "FAIL",
              detail.c_str());
  if (!ok) ++failures;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

// ---- 1. order-six residuals of the two sixth-order catalog methods --------
void criterion_table() {
  double worst = 0.0;
  for (const char* name : {"s76", "s7c6"})
    worst = std::max(worst, order6_report(catalog().at(name).alphas).max_residual);
  report(1, "sixth-order residuals", worst < 1e-12, "max residual " + fmt(worst));
}

// ---- 2. constructor identities -------------------------------------------
void criterion_constructors() {
  bool ok = true;
  std::string detail = "all identities hold";

  const ComplexScalar third{0.5, -std::sqrt(3.0) / 6.0};
  const auto s23 = third_order_two_term(Branch::Plus);
  if (std::abs(s23.alphas[1] - third) > 1e-15 ||
      std::abs(s23.alphas[0] - std::conj(third)) > 1e-15) {
    ok = false;
    detail = "third-order alpha mismatch";
  }

  for (int k = 0; k < 3 && ok; ++k) {
    const auto tj = fourth_order_three_term(k);
    const ComplexScalar alpha = tj.alphas[0], beta = tj.alphas[1];
    if (std::abs(2.0 * alpha + beta - 1.0) > 1e-14 ||
        std::abs(2.0 * std::pow(alpha, 3) + std::pow(beta, 3)) > 1e-14) {
      ok = false;
      detail = "triple-jump root identity fails at k=" + std::to_string(k);
    }
  }

  if (ok) {
    CompositionScheme two = leapfrog();
    for (int order = 2; order < 6; ++order) two = raise_order_two_term(two, order, 0);
    for (const auto& a : two.alphas)
      if (a.real() <= 0.0) {
        ok = false;
        detail = "two-term order-6 coefficient with nonpositive real part";
      }
  }
  if (ok) {
    CompositionScheme three = leapfrog();
    for (int order = 2; order < 8; order += 2) three = raise_order_three_term(three, order);
    for (const auto& a : three.alphas)
      if (a.real() <= 0.0) {
        ok = false;
        detail = "three-term order-8 coefficient with nonpositive real part";
      }
  }
  report(2, "constructor identities", ok, detail);
}

// ---- 3. a/b conversion round trip ----------------------------------------
void criterion_roundtrip() {
  double worst = 0.0;
  auto check = [&](const CompositionScheme& scheme) {
    const auto stages = alpha_from_ab(ab_from_alpha(scheme));
    // The flattening splits each alpha into two half stages.
    for (std::size_t j = 0; j < scheme.alphas.size(); ++j) {
      const ComplexScalar merged = stages[2 * j] + stages[2 * j + 1];
      worst = std::max(worst, std::abs(merged - scheme.alphas[j]));
    }
  };
  for (const auto& [name, scheme] : catalog()) check(scheme);
  std::mt19937 rng(2024);
  for (int i = 0; i < 100; ++i) check(testing::random_scheme(rng));

  // S23 flattens to the known two-term arrays.
  const auto ab = ab_from_alpha(catalog().at("s23"));
  const ComplexScalar a1{0.5, std::sqrt(3.0) / 6.0};
  worst = std::max(worst, std::abs(ab.a[0] - a1));
  worst = std::max(worst, std::abs(ab.a[1] - std::conj(a1)));
  worst = std::max(worst, std::abs(ab.b[0] - 0.5 * a1));
  worst = std::max(worst, std::abs(ab.b[1] - 0.5));
  worst = std::max(worst, std::abs(ab.b[2] - std::conj(0.5 * a1)));

  report(3, "conversion round trip", worst < 1e-14, "max defect " + fmt(worst));
}

// ---- 4. stability polynomial identities ----------------------------------
void criterion_polynomials() {
  bool ok = true;
  std::string detail = "det, parity and symmetry structure hold";
  for (const auto& [name, scheme] : catalog()) {
    const auto split = ab_from_alpha(scheme);
    const auto K = transfer_matrix(split);
    const Poly det = K.determinant();
    double defect = std::abs(det.coefficient(0) - 1.0);
    for (int k = 1; k <= det.degree(); ++k) defect = std::max(defect, std::abs(det.coefficient(k)));
    StabilityPolynomials s;
    try {
      s = pqde(K);  // throws on parity violation
    } catch (const std::exception& e) {
      ok = false;
      detail = name + ": " + e.what();
      break;
    }
    if (scheme.symmetry == SymmetryClass::Symmetric)
      for (const auto& c : s.d.coefficients()) defect = std::max(defect, std::abs(c));
    if (scheme.symmetry == SymmetryClass::ConjugateSymmetric) {
      for (const Poly* poly : {&s.p, &s.q, &s.e})
        for (const auto& c : poly->coefficients()) defect = std::max(defect, std::abs(c.imag()));
      for (const auto& c : s.d.coefficients()) defect = std::max(defect, std::abs(c.real()));
    }
    if (defect >= 1e-12) {
      ok = false;
      detail = name + " structure defect " + fmt(defect);
      break;
    }
  }
  if (ok) {
    const auto strang = pqde(transfer_matrix(ab_from_alpha(leapfrog())));
    if (strang.p.degree() != 2 || strang.p.coefficient(0) != 1.0 ||
        strang.p.coefficient(1) != 0.0 || strang.p.coefficient(2) != -0.5) {
      ok = false;
      detail = "leapfrog p(h) != 1 - h^2/2";
    }
  }
  report(4, "stability polynomials", ok, detail);
}

// ---- 5. long-time harmonic oscillator behaviour --------------------------
void criterion_harmonic_longtime() {
  bool ok = true;
  std::string detail;
  const double periods = 1000.0;
  const double period = 2.0 * M_PI;

  for (const char* name : {"s23", "s7c6"}) {
    const auto run = run_harmonic_benchmark(catalog().at(name),
                                            harmonic_benchmark_step(name), periods);
    double first_half = 0.0, second_half = 0.0;
    for (std::size_t i = 0; i < run.t.size(); ++i)
      (i < run.t.size() / 2 ? first_half : second_half) =
          std::max(i < run.t.size() / 2 ? first_half : second_half, run.energy_error[i]);
    const auto models = compare_growth_models(run.t, run.position_error);
    if (run.diverged || second_half > 2.0 * first_half || !models.linear_wins) {
      ok = false;
      detail = std::string(name) + " not bounded/linear (ratio " +
               fmt(second_half / first_half) + ")";
    }
  }
  for (const char* name : {"s34", "s76"}) {
    const auto run = run_harmonic_benchmark(catalog().at(name),
                                            harmonic_benchmark_step(name), periods);
    const auto growth = classify_error_growth(run.t, run.energy_error, period);
    if (!run.diverged && !growth.exponential) {
      ok = false;
      detail = std::string(name) + " failed to grow (slope " +
               fmt(growth.log_slope_per_period) + "/period)";
    }
  }
  if (ok) detail = "bounded: s23, s7c6; growing: s34, s76";
  report(5, "long-time harmonic runs", ok, detail);
}

// ---- 6. invariant error scaling and projection on the predator-prey model
void criterion_vl_scaling() {
  bool ok = true;
  std::string detail;
  const double periods = 100.0;
  for (const char* name : {"s23", "s34", "s44", "s76", "s7c6"}) {
    const auto& scheme = catalog().at(name);
    const double m = static_cast<double>(scheme.stages());
    const double coarse_h = 4.0 * m * M_PI / 210.0;
    const double fine_h = m * M_PI / 210.0;
    const auto coarse =
        run_vl_benchmark(scheme, coarse_h, ProjectionPolicy::OutputOnly, periods);
    const auto fine = run_vl_benchmark(scheme, fine_h, ProjectionPolicy::OutputOnly, periods);
    const double ratio = coarse.final_rel_error / fine.final_rel_error;
    const double required = std::pow(2.0, scheme.declared_order) / 4.0;
    if (coarse.diverged || fine.diverged || !(ratio >= required)) {
      ok = false;
      detail = std::string(name) + " ratio " + fmt(ratio) + " < " + fmt(required);
      break;
    }
  }
  if (ok) {
    const auto& s76 = catalog().at("s76");
    const double h = 4.0 * static_cast<double>(s76.stages()) * M_PI / 210.0;
    const auto never = run_vl_benchmark(s76, h, ProjectionPolicy::Never, periods);
    const auto step = run_vl_benchmark(s76, h, ProjectionPolicy::EachStep, periods);
    ok = step.final_rel_error < never.final_rel_error;
    detail = "s76 projection " + fmt(step.final_rel_error) + " vs " +
             fmt(never.final_rel_error);
  }
  report(6, "invariant error scaling", ok, detail);
}

// ---- 7. empirical convergence orders -------------------------------------
void criterion_orders() {
  struct Case {
    const char* name;
    double expected;
    double h0_harm;
    double h0_vl;
  };
  const Case cases[] = {{"s23", 3.0, 0.4, 0.2},
                        {"s34", 4.0, 0.4, 0.2},
                        {"s76", 6.0, 0.4, 0.25},
                        {"s7c6", 6.0, 0.4, 0.25}};
  bool ok = true;
  std::string detail = "slopes within 0.3 on both systems";
  const auto harmonic = harmonic_oscillator();
  const auto vl = volterra_lotka();
  for (const auto& c : cases) {
    const auto& scheme = catalog().at(c.name);
    const double sh = empirical_order(scheme, harmonic, c.h0_harm, 4, 7.3).slope;
    const double sv = empirical_order(scheme, vl, c.h0_vl, 4, 2.0 * M_PI).slope;
    if (std::abs(sh - c.expected) > 0.3 || std::abs(sv - c.expected) > 0.3) {
      ok = false;
      detail = std::string(c.name) + " slopes " + fmt(sh) + " / " + fmt(sv) +
               " (expected " + fmt(c.expected) + ")";
      break;
    }
  }
  report(7, "empirical orders", ok, detail);
}

// ---- 8. negative substep existence for real third-order schemes ----------
void criterion_negativity() {
  std::mt19937 rng(777);
  int found = 0;
  const int trials = 1000;
  std::string detail = "witness found in all " + std::to_string(trials) + " samples";
  bool ok = true;
  for (int i = 0; i < trials; ++i) {
    try {
      real_negativity_witness(testing::random_real_order3_alphas(rng));
      ++found;
    } catch (const std::exception&) {
      ok = false;
      detail = "no witness after " + std::to_string(found) + " successes";
      break;
    }
  }
  report(8, "negative substep witness", ok, detail);
}

}  // namespace

int main() {
  criterion_table();
  criterion_constructors();
  criterion_roundtrip();
  criterion_polynomials();
  criterion_harmonic_longtime();
  criterion_vl_scaling();
  criterion_orders();
  criterion_negativity();
  if (failures == 0) {
    std::printf("acceptance: all 8 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", failures);
  return 1;
}
