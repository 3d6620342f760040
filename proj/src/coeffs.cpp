#include "csplit/coeffs.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace csplit {

namespace {

constexpr double kConsistencyTol = 1e-12;
constexpr double kSymmetryTol = 1e-14;

ComplexScalar sum(const std::vector<ComplexScalar>& v) {
  return std::accumulate(v.begin(), v.end(), ComplexScalar{0.0, 0.0});
}

bool finite(const ComplexScalar& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

std::vector<ComplexScalar> scaled(const std::vector<ComplexScalar>& v, ComplexScalar f) {
  std::vector<ComplexScalar> out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [f](ComplexScalar c) { return f * c; });
  return out;
}

ComplexScalar parse(const char* re, const char* im) {
  return {std::strtod(re, nullptr), std::strtod(im, nullptr)};
}

void append_17g(std::string& out, double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  out += buf;
}

}  // namespace

std::string to_string(SymmetryClass s) {
  switch (s) {
    case SymmetryClass::Symmetric: return "symmetric";
    case SymmetryClass::ConjugateSymmetric: return "conjugate_symmetric";
    default: return "none";
  }
}

void validate(const CompositionScheme& scheme) {
  for (const auto& a : scheme.alphas)
    if (!finite(a))
      throw std::invalid_argument("scheme '" + scheme.label + "': non-finite coefficient");
  if (scheme.alphas.empty())
    throw std::invalid_argument("scheme '" + scheme.label + "': no stages");
  if (std::abs(sum(scheme.alphas) - 1.0) >= kConsistencyTol)
    throw std::invalid_argument("scheme '" + scheme.label + "': sum of alphas is not 1");
}

void validate(const TwoTermSplitScheme& scheme) {
  if (scheme.b.size() != scheme.a.size() + 1)
    throw std::invalid_argument("split scheme '" + scheme.label + "': need s+1 b coefficients");
  for (const auto& c : scheme.a)
    if (!finite(c))
      throw std::invalid_argument("split scheme '" + scheme.label + "': non-finite coefficient");
  for (const auto& c : scheme.b)
    if (!finite(c))
      throw std::invalid_argument("split scheme '" + scheme.label + "': non-finite coefficient");
  if (std::abs(sum(scheme.a) - 1.0) >= kConsistencyTol ||
      std::abs(sum(scheme.b) - 1.0) >= kConsistencyTol)
    throw std::invalid_argument("split scheme '" + scheme.label + "': inconsistent sums");
}

CompositionScheme third_order_two_term(Branch branch) {
  const double t = std::sqrt(3.0) / 6.0;
  const double sign = branch == Branch::Plus ? 1.0 : -1.0;
  const ComplexScalar alpha{0.5, -sign * t};
  const ComplexScalar beta{0.5, sign * t};
  CompositionScheme s;
  s.alphas = {beta, alpha};  // beta acts first
  s.declared_order = 3;
  s.label = branch == Branch::Plus ? "s23" : "s23_conj";
  s.symmetry = SymmetryClass::ConjugateSymmetric;
  return s;
}

CompositionScheme fourth_order_three_term(int k) {
  if (k < 0 || k > 2) throw std::invalid_argument("fourth_order_three_term: k must be 0, 1 or 2");
  const ComplexScalar root = std::pow(2.0, 1.0 / 3.0) *
                             std::exp(ComplexScalar{0.0, 2.0 * k * M_PI / 3.0});
  const ComplexScalar alpha = 1.0 / (2.0 - root);
  const ComplexScalar beta = 1.0 - 2.0 * alpha;
  CompositionScheme s;
  s.alphas = {alpha, beta, alpha};
  s.declared_order = 4;
  s.label = "s34_k" + std::to_string(k);
  s.symmetry = SymmetryClass::Symmetric;
  return s;
}

CompositionScheme fourth_order_palindromic_from_third() {
  const CompositionScheme third = third_order_two_term(Branch::Plus);
  const ComplexScalar beta = third.alphas[0];
  const ComplexScalar alpha = third.alphas[1];
  CompositionScheme s;
  s.alphas = {0.5 * alpha, 0.5 * beta, 0.5 * beta, 0.5 * alpha};
  s.declared_order = 4;
  s.label = "s44";
  s.symmetry = SymmetryClass::Symmetric;
  return s;
}

CompositionScheme raise_order_two_term(const CompositionScheme& base, int n, int l) {
  if (n < 1) throw std::invalid_argument("raise_order_two_term: order must be >= 1");
  if (base.declared_order != n)
    throw std::invalid_argument("raise_order_two_term: base order does not match n");
  const int lo = n % 2 == 0 ? -n / 2 : -(n + 1) / 2;
  const int hi = n % 2 == 0 ? n / 2 - 1 : (n - 1) / 2;
  if (l < lo || l > hi)
    throw std::invalid_argument("raise_order_two_term: l out of range [" +
                                std::to_string(lo) + ", " + std::to_string(hi) + "]");
  const double theta = (2.0 * l + 1.0) * M_PI / (n + 1.0);
  const ComplexScalar alpha = 1.0 / (1.0 + std::exp(ComplexScalar{0.0, theta}));
  const ComplexScalar beta = 1.0 - alpha;
  CompositionScheme s;
  s.alphas = scaled(base.alphas, beta);
  const auto upper = scaled(base.alphas, alpha);
  s.alphas.insert(s.alphas.end(), upper.begin(), upper.end());
  s.declared_order = n + 1;
  s.label = base.label + "+2t";
  s.symmetry = classify_symmetry(s.alphas);
  return s;
}

CompositionScheme raise_order_three_term(const CompositionScheme& base, int n) {
  if (n < 1) throw std::invalid_argument("raise_order_three_term: order must be >= 1");
  if (base.declared_order != n)
    throw std::invalid_argument("raise_order_three_term: base order does not match n");
  // Roots of 2 alpha^{n+1} + (1 - 2 alpha)^{n+1} = 0 under 2 alpha + beta = 1.
  std::vector<ComplexScalar> admissible;
  for (int k = 0; k <= n; ++k) {
    const ComplexScalar ratio = std::pow(2.0, 1.0 / (n + 1.0)) *
                                std::exp(ComplexScalar{0.0, M_PI * (2.0 * k + 1.0) / (n + 1.0)});
    const ComplexScalar alpha = 1.0 / (2.0 + ratio);
    const ComplexScalar beta = 1.0 - 2.0 * alpha;
    if (alpha.real() > 0.0 && beta.real() > 0.0) admissible.push_back(alpha);
  }
  if (admissible.empty())
    throw std::domain_error("raise_order_three_term: no admissible root for order " +
                            std::to_string(n + 2) +
                            " (both stage ratios need positive real part)");
  const ComplexScalar alpha = *std::min_element(
      admissible.begin(), admissible.end(), [](ComplexScalar x, ComplexScalar y) {
        const double ax = std::abs(std::arg(x)), ay = std::abs(std::arg(y));
        if (ax != ay) return ax < ay;
        return x.imag() > y.imag();
      });
  const ComplexScalar beta = 1.0 - 2.0 * alpha;
  CompositionScheme s;
  s.alphas = scaled(base.alphas, alpha);
  const auto mid = scaled(base.alphas, beta);
  s.alphas.insert(s.alphas.end(), mid.begin(), mid.end());
  const auto top = scaled(base.alphas, alpha);
  s.alphas.insert(s.alphas.end(), top.begin(), top.end());
  s.declared_order = n + 2;
  s.label = base.label + "+3t";
  s.symmetry = classify_symmetry(s.alphas);
  return s;
}

CompositionScheme leapfrog() {
  CompositionScheme s;
  s.alphas = {ComplexScalar{1.0, 0.0}};
  s.declared_order = 2;
  s.label = "leapfrog";
  s.symmetry = SymmetryClass::Symmetric;
  return s;
}

TwoTermSplitScheme ab_from_stage_coefficients(const std::vector<ComplexScalar>& stage) {
  if (stage.empty() || stage.size() % 2 != 0)
    throw std::invalid_argument("ab_from_stage_coefficients: need an even, nonzero stage count");
  const std::size_t s = stage.size() / 2;
  TwoTermSplitScheme out;
  out.a.resize(s);
  out.b.resize(s + 1);
  for (std::size_t j = 0; j < s; ++j) out.a[j] = stage[2 * j] + stage[2 * j + 1];
  out.b[0] = stage[0];
  for (std::size_t j = 1; j < s; ++j) out.b[j] = stage[2 * j - 1] + stage[2 * j];
  out.b[s] = stage[2 * s - 1];
  return out;
}

TwoTermSplitScheme ab_from_alpha(const CompositionScheme& scheme) {
  validate(scheme);
  std::vector<ComplexScalar> stage;
  stage.reserve(2 * scheme.alphas.size());
  for (const auto& a : scheme.alphas) {
    stage.push_back(0.5 * a);
    stage.push_back(0.5 * a);
  }
  TwoTermSplitScheme out = ab_from_stage_coefficients(stage);
  out.declared_order = scheme.declared_order;
  out.label = scheme.label;
  return out;
}

std::vector<ComplexScalar> alpha_from_ab(const TwoTermSplitScheme& scheme) {
  if (scheme.b.size() != scheme.a.size() + 1)
    throw std::invalid_argument("alpha_from_ab: need s+1 b coefficients");
  const ComplexScalar defect = sum(scheme.a) - sum(scheme.b);
  if (std::abs(defect) >= 1e-12)
    throw std::invalid_argument("alpha_from_ab: sum(a) != sum(b), the stage decomposition "
                                "does not exist for this scheme");
  const std::size_t s = scheme.a.size();
  std::vector<ComplexScalar> stage(2 * s);
  ComplexScalar odd = scheme.b[0];   // c_1 = b_1
  ComplexScalar even{0.0, 0.0};
  for (std::size_t j = 1; j <= s; ++j) {
    even += scheme.a[j - 1] - scheme.b[j - 1];
    stage[2 * j - 2] = odd;
    stage[2 * j - 1] = even;
    odd += scheme.b[j] - scheme.a[j - 1];
  }
  // odd now holds c_{2s+1}, which must vanish.
  if (std::abs(odd) >= 1e-10)
    throw std::domain_error("alpha_from_ab: trailing stage coefficient does not vanish");
  return stage;
}

SymmetryClass classify_symmetry(const std::vector<ComplexScalar>& alphas) {
  const std::size_t s = alphas.size();
  bool sym = true, conj = true;
  for (std::size_t i = 0; i < s; ++i) {
    const ComplexScalar& mirror = alphas[s - 1 - i];
    if (std::abs(mirror - alphas[i]) >= kSymmetryTol) sym = false;
    if (std::abs(mirror - std::conj(alphas[i])) >= kSymmetryTol) conj = false;
  }
  // A real palindromic scheme satisfies both; report it as symmetric.
  if (sym) return SymmetryClass::Symmetric;
  if (conj) return SymmetryClass::ConjugateSymmetric;
  return SymmetryClass::NoSymmetry;
}

SymmetryClass classify_symmetry(const CompositionScheme& scheme) {
  return classify_symmetry(scheme.alphas);
}

const std::map<std::string, CompositionScheme>& catalog() {
  static const std::map<std::string, CompositionScheme> schemes = [] {
    std::map<std::string, CompositionScheme> m;

    CompositionScheme s23 = third_order_two_term(Branch::Plus);
    s23.label = "s23";
    m.emplace("s23", s23);

    CompositionScheme s34 = fourth_order_three_term(1);
    s34.label = "s34";
    m.emplace("s34", s34);

    m.emplace("s44", fourth_order_palindromic_from_third());

    // 7-stage sixth-order coefficients, stored at full printed precision.
    const ComplexScalar a1 = parse("0.116900037554661284389", "0.043428254616060341762");
    const ComplexScalar a2 = parse("0.12955910128208826275", "-0.12398961218809259330");
    const ComplexScalar a3 = parse("0.18653249281213381780", "0.00310743071007267534");
    const ComplexScalar a4 = parse("0.13401673670223327014", "0.15490785372391915239");
    CompositionScheme s76;
    s76.alphas = {a1, a2, a3, a4, a3, a2, a1};
    s76.declared_order = 6;
    s76.label = "s76";
    s76.symmetry = SymmetryClass::Symmetric;
    m.emplace("s76", s76);

    const ComplexScalar c1 = parse("0.133741778914683628452", "-0.028839028371025553995");
    const ComplexScalar c2 = parse("0.12134019583938803504", "0.11585180844272788007");
    const ComplexScalar c3 = parse("0.13489797942731665044", "-0.12906241362827633477");
    const ComplexScalar c4 = parse("0.22004009163722337213", "0");
    CompositionScheme s7c6;
    s7c6.alphas = {c1, c2, c3, c4, std::conj(c3), std::conj(c2), std::conj(c1)};
    s7c6.declared_order = 6;
    s7c6.label = "s7c6";
    s7c6.symmetry = SymmetryClass::ConjugateSymmetric;
    m.emplace("s7c6", s7c6);

    for (const auto& [name, scheme] : m) validate(scheme);
    return m;
  }();
  return schemes;
}

std::string to_json(const CompositionScheme& scheme) {
  std::string out = "{\"label\":\"" + scheme.label + "\",\"declared_order\":" +
                    std::to_string(scheme.declared_order) + ",\"symmetry\":\"" +
                    to_string(scheme.symmetry) + "\",\"alphas\":[";
  for (std::size_t i = 0; i < scheme.alphas.size(); ++i) {
    if (i) out += ',';
    out += "{\"re\":";
    append_17g(out, scheme.alphas[i].real());
    out += ",\"im\":";
    append_17g(out, scheme.alphas[i].imag());
    out += '}';
  }
  out += "]}";
  return out;
}

}  // namespace csplit
