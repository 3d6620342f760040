#ifndef CSPLIT_COEFFS_HPP
#define CSPLIT_COEFFS_HPP

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace csplit {

using ComplexScalar = std::complex<double>;

enum class SymmetryClass { Symmetric, ConjugateSymmetric, NoSymmetry };

std::string to_string(SymmetryClass s);

// Composition of a symmetric second-order basic method with scaled steps
// alpha_j * h.  alphas[0] is applied first (the rightmost factor of the
// right-to-left composition notation).
struct CompositionScheme {
  std::vector<ComplexScalar> alphas;
  int declared_order = 1;
  std::string label;
  SymmetryClass symmetry = SymmetryClass::NoSymmetry;

  std::size_t stages() const { return alphas.size(); }
};

// Two-term splitting psi_h = phi2_{b[s]} phi1_{a[s-1]} ... phi1_{a[0]} phi2_{b[0]}
// with s = a.size() and b.size() = s + 1.  b[0] is applied first.
struct TwoTermSplitScheme {
  std::vector<ComplexScalar> a;
  std::vector<ComplexScalar> b;
  int declared_order = 1;
  std::string label;

  std::size_t stages() const { return a.size(); }
};

// Throws std::invalid_argument on non-finite coefficients or an
// inconsistent sum (|sum alpha - 1| >= 1e-12).
void validate(const CompositionScheme& scheme);
void validate(const TwoTermSplitScheme& scheme);

enum class Branch { Plus, Minus };

// Two-stage third-order scheme, alpha = 1/2 -+ i sqrt(3)/6.
CompositionScheme third_order_two_term(Branch branch);

// Symmetric triple jump [alpha, beta, alpha] with
// alpha = 1 / (2 - 2^{1/3} exp(2 i k pi / 3)), k in {0, 1, 2}.
// k = 0 is the real (Yoshida) branch with beta < 0.
CompositionScheme fourth_order_three_term(int k);

// Palindromic 4-stage scheme [alpha/2, beta/2, beta/2, alpha/2] built from
// the third-order coefficients.
CompositionScheme fourth_order_palindromic_from_third();

// Order n -> n+1 by the two-term composition S_{alpha h} S_{beta h} with
// alpha = 1 / (1 + exp(i theta)), theta = (2l+1) pi / (n+1).
// Requires base.declared_order == n and l within the admissible window.
CompositionScheme raise_order_two_term(const CompositionScheme& base, int n, int l);

// Order n -> n+2 by the symmetric three-term composition.  The stage ratio
// solves 2 alpha + beta = 1, 2 alpha^{n+1} + beta^{n+1} = 0; the root with
// the smallest |arg alpha| among those with Re(alpha) > 0 and Re(beta) > 0
// is selected, ties broken toward positive imaginary part.
CompositionScheme raise_order_three_term(const CompositionScheme& base, int n);

// Single-stage composition [1]: the basic method itself.
CompositionScheme leapfrog();

// Flattens each second-order stage over a 2-part split into
// phi2_{alpha h/2} phi1_{alpha h} phi2_{alpha h/2} and merges adjacent
// part-2 flows, so a_j = alpha_j and b_j are averages of neighbours.
TwoTermSplitScheme ab_from_alpha(const CompositionScheme& scheme);

// Same merge applied to an explicit list of 2k stage coefficients of the
// chi / chi* composition (a_j = c_{2j-1} + c_{2j}, b_{j+1} = c_{2j} + c_{2j+1}).
TwoTermSplitScheme ab_from_stage_coefficients(const std::vector<ComplexScalar>& stage);

// Inverse of the merge: recovers the 2s stage coefficients from a/b arrays.
// Requires |sum a - sum b| < 1e-12; the trailing coefficient c_{2s+1} = 0 is
// verified as a residual.
std::vector<ComplexScalar> alpha_from_ab(const TwoTermSplitScheme& scheme);

SymmetryClass classify_symmetry(const std::vector<ComplexScalar>& alphas);
SymmetryClass classify_symmetry(const CompositionScheme& scheme);

// Built-in schemes keyed by lower-case label: s23, s34, s44, s76, s7c6.
const std::map<std::string, CompositionScheme>& catalog();

// JSON object {label, declared_order, symmetry, alphas: [{re, im}...]}
// with 17 significant digits.
std::string to_json(const CompositionScheme& scheme);

}  // namespace csplit

#endif
