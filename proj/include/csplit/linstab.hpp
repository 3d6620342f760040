#ifndef CSPLIT_LINSTAB_HPP
#define CSPLIT_LINSTAB_HPP

#include <Eigen/Dense>
#include <array>
#include <optional>
#include <ostream>
#include <vector>

#include "csplit/coeffs.hpp"

namespace csplit {

// Dense univariate polynomial in the step size h, complex coefficients in
// ascending powers.  Trailing coefficients below 1e-300 are trimmed.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<ComplexScalar> coefficients);
  static Poly constant(ComplexScalar c);
  static Poly monomial(ComplexScalar c, std::size_t power);

  const std::vector<ComplexScalar>& coefficients() const { return coeffs_; }
  ComplexScalar coefficient(std::size_t power) const;
  int degree() const;  // -1 for the zero polynomial
  bool is_zero(double tol = 0.0) const;

  ComplexScalar operator()(double h) const;

  Poly conjugated() const;      // conjugate every coefficient
  Poly reflected() const;       // h -> -h
  double max_coefficient_magnitude() const;

 private:
  std::vector<ComplexScalar> coeffs_;
};

Poly operator+(const Poly& x, const Poly& y);
Poly operator-(const Poly& x, const Poly& y);
Poly operator*(const Poly& x, const Poly& y);
Poly operator*(ComplexScalar c, const Poly& x);

// 2x2 matrix of polynomials in h; row-major entries.
struct PolyMatrix2 {
  std::array<Poly, 4> entries;
  Poly& operator()(int r, int c) { return entries[2 * r + c]; }
  const Poly& operator()(int r, int c) const { return entries[2 * r + c]; }
  static PolyMatrix2 identity();
  Poly determinant() const;
  Eigen::Matrix2cd eval(double h) const;
};

PolyMatrix2 operator*(const PolyMatrix2& x, const PolyMatrix2& y);

// One-step matrix of the scheme on the harmonic oscillator split: the
// product of shear factors [[1, a_i h],[0,1]] and [[1,0],[-b_i h,1]] in
// execution order (b first).
PolyMatrix2 transfer_matrix(const TwoTermSplitScheme& scheme);

// Decomposition K = [[p+d, q+e],[-q+e, p-d]]; p, d are even and q, e odd.
// Throws std::domain_error when the parity check (1e-12 per coefficient)
// fails, which indicates an ordering bug in the factor product.
struct StabilityPolynomials {
  Poly p, q, d, e;
};
StabilityPolynomials pqde(const PolyMatrix2& K);

enum class Verdict { Stable, WeaklyUnstable, Unstable };
std::string to_string(Verdict v);

struct StabilityVerdict {
  Verdict verdict = Verdict::Unstable;
  ComplexScalar p_value;
  double max_eigenvalue_modulus = 0.0;
  std::optional<double> phase;  // arccos(Re p), interior stable case only
};

// Stable iff p(h) is real with |p| < 1, or p^2 = 1 with q = d = e = 0;
// weakly unstable iff p^2 = 1 with (q, d, e) != 0 (a Jordan block with
// linear growth).  Reality and boundary tolerances are 1e-12.
StabilityVerdict classify(const TwoTermSplitScheme& scheme, double h);

// Phase of the stable rotation, arccos(Re p(h)) in (0, pi).  Throws
// std::domain_error outside the interior stable region.
double phase(const TwoTermSplitScheme& scheme, double h);

// K(h)^{-1} = K(-h)^* as a polynomial identity (1e-12 per coefficient);
// holds for conjugate-palindromic coefficient sets.
bool adjoint_symmetry_check(const TwoTermSplitScheme& scheme);

// K(h)^{-1} = K(-h); holds for palindromic (time-symmetric) sets.
bool time_symmetry_check(const TwoTermSplitScheme& scheme);

// CSV sweep: h,re_p,im_p,max_eig_mod,verdict,phase,phase_over_h.
void stability_sweep_csv(const TwoTermSplitScheme& scheme, double h_min, double h_max,
                         int samples, std::ostream& os);

}  // namespace csplit

#endif
