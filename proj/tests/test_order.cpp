#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "csplit/order.hpp"
#include "generators.hpp"

using namespace csplit;

TEST_CASE("c weights") {
  const std::vector<ComplexScalar> single{{1.0, 0.0}};
  auto c = c_weights(single);
  REQUIRE(c.size() == 1);
  CHECK(std::abs(c[0] - 0.5) < 1e-16);

  const std::vector<ComplexScalar> halves{{0.5, 0.0}, {0.5, 0.0}};
  c = c_weights(halves);
  CHECK(std::abs(c[0] - 0.25) < 1e-16);
  CHECK(std::abs(c[1] - 0.75) < 1e-16);

  const auto& s76 = catalog().at("s76").alphas;
  c = c_weights(s76);
  const ComplexScalar expected = 0.5 * s76[3] + s76[0] + s76[1] + s76[2];
  CHECK(std::abs(c[3] - expected) < 1e-16);

  CHECK_THROWS_AS(c_weights({}), std::invalid_argument);
}

TEST_CASE("order-six residuals for the table methods") {
  for (const char* name : {"s76", "s7c6"}) {
    const auto report = order6_report(catalog().at(name).alphas);
    for (const auto& [key, value] : report.residuals) {
      INFO(name << " residual " << key);
      CHECK(value < 1e-12);
    }
    CHECK(report.passes_at == 6);
    CHECK(report.max_residual < 1e-12);
  }
}

TEST_CASE("third-order scheme passes at 3 but not above") {
  const auto report = order6_report(catalog().at("s23").alphas);
  CHECK(report.residuals.at("consistency") < 1e-15);
  CHECK(report.residuals.at("p3") < 1e-15);
  CHECK(report.residuals.at("p5") > 1e-3);
  CHECK(report.passes_at == 3);
}

TEST_CASE("residuals are invariant under reversal of a symmetric scheme") {
  auto alphas = catalog().at("s76").alphas;
  const auto forward = order6_report(alphas);
  std::reverse(alphas.begin(), alphas.end());
  const auto backward = order6_report(alphas);
  for (const auto& [key, value] : forward.residuals)
    CHECK(std::abs(value - backward.residuals.at(key)) < 1e-14);
}

TEST_CASE("conjugate-symmetric consistency sum is real pairwise") {
  const auto& alphas = catalog().at("s7c6").alphas;
  const std::size_t s = alphas.size();
  for (std::size_t i = 0; i < s / 2; ++i)
    CHECK(std::abs((alphas[i] + alphas[s - 1 - i]).imag()) < 1e-16);
  CHECK(std::abs(alphas[s / 2].imag()) < 1e-16);
}

TEST_CASE("negativity witness on the real triple jump") {
  const std::vector<double> alphas{1.3512071919596578, -1.7024143839193155,
                                   1.3512071919596578};
  const auto [ia, ib] = real_negativity_witness(alphas);
  CHECK(ia == 1);  // the middle stage
  CHECK(ib > 0);
}

TEST_CASE("negativity witness rejects schemes failing the cube condition") {
  CHECK_THROWS_AS(real_negativity_witness({0.5, 0.5}), std::domain_error);
}

TEST_CASE("negativity witness exists for every sampled real solution") {
  std::mt19937 rng(123456);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto alphas = testing::random_real_order3_alphas(rng);
    CHECK_NOTHROW(real_negativity_witness(alphas));
  }
}

TEST_CASE("report json") {
  const auto json = to_json(order6_report(catalog().at("s23").alphas));
  CHECK(json.find("\"consistency\":") != std::string::npos);
  CHECK(json.find("\"passes_at\":3") != std::string::npos);
  CHECK(json.find("e-") != std::string::npos);  // scientific notation
}
