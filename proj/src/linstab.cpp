#include "csplit/linstab.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace csplit {

namespace {

constexpr double kTrimTol = 1e-300;
constexpr double kCoeffTol = 1e-12;

double identity_defect(const PolyMatrix2& M) {
  double worst = 0.0;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      Poly expected = r == c ? Poly::constant({1.0, 0.0}) : Poly{};
      worst = std::max(worst, (M(r, c) - expected).max_coefficient_magnitude());
    }
  return worst;
}

}  // namespace

Poly::Poly(std::vector<ComplexScalar> coefficients) : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && std::abs(coeffs_.back()) < kTrimTol) coeffs_.pop_back();
}

Poly Poly::constant(ComplexScalar c) { return Poly{{c}}; }

Poly Poly::monomial(ComplexScalar c, std::size_t power) {
  std::vector<ComplexScalar> v(power + 1, ComplexScalar{0.0, 0.0});
  v[power] = c;
  return Poly{std::move(v)};
}

ComplexScalar Poly::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : ComplexScalar{0.0, 0.0};
}

int Poly::degree() const { return static_cast<int>(coeffs_.size()) - 1; }

bool Poly::is_zero(double tol) const {
  for (const auto& c : coeffs_)
    if (std::abs(c) > tol) return false;
  return true;
}

ComplexScalar Poly::operator()(double h) const {
  ComplexScalar acc{0.0, 0.0};
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * h + coeffs_[i];
  return acc;
}

Poly Poly::conjugated() const {
  std::vector<ComplexScalar> v(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = std::conj(coeffs_[i]);
  return Poly{std::move(v)};
}

Poly Poly::reflected() const {
  std::vector<ComplexScalar> v(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = i % 2 ? -coeffs_[i] : coeffs_[i];
  return Poly{std::move(v)};
}

double Poly::max_coefficient_magnitude() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

Poly operator+(const Poly& x, const Poly& y) {
  std::vector<ComplexScalar> v(std::max(x.coefficients().size(), y.coefficients().size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = x.coefficient(i) + y.coefficient(i);
  return Poly{std::move(v)};
}

Poly operator-(const Poly& x, const Poly& y) {
  std::vector<ComplexScalar> v(std::max(x.coefficients().size(), y.coefficients().size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = x.coefficient(i) - y.coefficient(i);
  return Poly{std::move(v)};
}

Poly operator*(const Poly& x, const Poly& y) {
  if (x.coefficients().empty() || y.coefficients().empty()) return Poly{};
  std::vector<ComplexScalar> v(x.coefficients().size() + y.coefficients().size() - 1,
                               ComplexScalar{0.0, 0.0});
  for (std::size_t i = 0; i < x.coefficients().size(); ++i)
    for (std::size_t j = 0; j < y.coefficients().size(); ++j)
      v[i + j] += x.coefficients()[i] * y.coefficients()[j];
  return Poly{std::move(v)};
}

Poly operator*(ComplexScalar c, const Poly& x) {
  std::vector<ComplexScalar> v(x.coefficients());
  for (auto& e : v) e *= c;
  return Poly{std::move(v)};
}

PolyMatrix2 PolyMatrix2::identity() {
  PolyMatrix2 m;
  m(0, 0) = Poly::constant({1.0, 0.0});
  m(1, 1) = Poly::constant({1.0, 0.0});
  return m;
}

Poly PolyMatrix2::determinant() const {
  return (*this)(0, 0) * (*this)(1, 1) - (*this)(0, 1) * (*this)(1, 0);
}

Eigen::Matrix2cd PolyMatrix2::eval(double h) const {
  Eigen::Matrix2cd m;
  m << (*this)(0, 0)(h), (*this)(0, 1)(h), (*this)(1, 0)(h), (*this)(1, 1)(h);
  return m;
}

PolyMatrix2 operator*(const PolyMatrix2& x, const PolyMatrix2& y) {
  PolyMatrix2 out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      out(r, c) = x(r, 0) * y(0, c) + x(r, 1) * y(1, c);
  return out;
}

PolyMatrix2 transfer_matrix(const TwoTermSplitScheme& scheme) {
  if (scheme.b.size() != scheme.a.size() + 1)
    throw std::invalid_argument("transfer_matrix: need s+1 b coefficients");
  auto drift = [](ComplexScalar a) {
    PolyMatrix2 m = PolyMatrix2::identity();
    m(0, 1) = Poly::monomial(a, 1);
    return m;
  };
  auto kick = [](ComplexScalar b) {
    PolyMatrix2 m = PolyMatrix2::identity();
    m(1, 0) = Poly::monomial(-b, 1);
    return m;
  };
  PolyMatrix2 K = kick(scheme.b[0]);
  for (std::size_t i = 0; i < scheme.a.size(); ++i) {
    K = drift(scheme.a[i]) * K;
    K = kick(scheme.b[i + 1]) * K;
  }
  return K;
}

StabilityPolynomials pqde(const PolyMatrix2& K) {
  const ComplexScalar half{0.5, 0.0};
  StabilityPolynomials s;
  s.p = half * (K(0, 0) + K(1, 1));
  s.d = half * (K(0, 0) - K(1, 1));
  s.q = half * (K(0, 1) - K(1, 0));
  s.e = half * (K(0, 1) + K(1, 0));
  auto parity_defect = [](const Poly& poly, int even) {
    double worst = 0.0;
    for (std::size_t i = even ? 1 : 0; i <= static_cast<std::size_t>(std::max(poly.degree(), 0));
         i += 2)
      worst = std::max(worst, std::abs(poly.coefficient(i)));
    return worst;
  };
  const double worst = std::max({parity_defect(s.p, 1), parity_defect(s.d, 1),
                                 parity_defect(s.q, 0), parity_defect(s.e, 0)});
  if (worst >= kCoeffTol)
    throw std::domain_error("pqde: parity violation (factor ordering bug), defect " +
                            std::to_string(worst));
  return s;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Stable: return "stable";
    case Verdict::WeaklyUnstable: return "weakly_unstable";
    default: return "unstable";
  }
}

StabilityVerdict classify(const TwoTermSplitScheme& scheme, double h) {
  if (h <= 0.0) throw std::invalid_argument("classify: step size must be positive");
  const PolyMatrix2 K = transfer_matrix(scheme);
  const StabilityPolynomials s = pqde(K);
  const ComplexScalar pv = s.p(h);

  StabilityVerdict out;
  out.p_value = pv;
  // det K = 1, so the eigenvalues are p +/- sqrt(p^2 - 1).
  const ComplexScalar root = std::sqrt(pv * pv - 1.0);
  out.max_eigenvalue_modulus = std::max(std::abs(pv + root), std::abs(pv - root));

  const bool p_real = std::abs(pv.imag()) < kCoeffTol;
  const double pr = pv.real();
  if (p_real && std::abs(pr) < 1.0 - kCoeffTol) {
    out.verdict = Verdict::Stable;
    out.phase = std::acos(pr);
  } else if (p_real && std::abs(pr) <= 1.0 + kCoeffTol) {
    const double qv = std::abs(s.q(h)), dv = std::abs(s.d(h)), ev = std::abs(s.e(h));
    // Double eigenvalue +/-1: stable only when K = +/-I, otherwise the
    // Jordan block gives linear growth.
    if (qv < kCoeffTol && dv < kCoeffTol && ev < kCoeffTol)
      out.verdict = Verdict::Stable;
    else
      out.verdict = Verdict::WeaklyUnstable;
  } else {
    out.verdict = Verdict::Unstable;
  }
  return out;
}

double phase(const TwoTermSplitScheme& scheme, double h) {
  const StabilityVerdict v = classify(scheme, h);
  if (v.verdict != Verdict::Stable || !v.phase)
    throw std::domain_error("phase: undefined outside the interior stable region "
                            "(p(h) = " + std::to_string(v.p_value.real()) + " + " +
                            std::to_string(v.p_value.imag()) + "i)");
  return *v.phase;
}

bool adjoint_symmetry_check(const TwoTermSplitScheme& scheme) {
  const PolyMatrix2 K = transfer_matrix(scheme);
  PolyMatrix2 mirror;
  for (int i = 0; i < 4; ++i) mirror.entries[i] = K.entries[i].reflected().conjugated();
  return identity_defect(K * mirror) < kCoeffTol;
}

bool time_symmetry_check(const TwoTermSplitScheme& scheme) {
  const PolyMatrix2 K = transfer_matrix(scheme);
  PolyMatrix2 mirror;
  for (int i = 0; i < 4; ++i) mirror.entries[i] = K.entries[i].reflected();
  return identity_defect(K * mirror) < kCoeffTol;
}

void stability_sweep_csv(const TwoTermSplitScheme& scheme, double h_min, double h_max,
                         int samples, std::ostream& os) {
  if (samples < 1 || h_min <= 0.0 || h_max < h_min)
    throw std::invalid_argument("stability_sweep_csv: bad sweep range");
  os << "h,re_p,im_p,max_eig_mod,verdict,phase,phase_over_h\n";
  char buf[160];
  for (int i = 0; i < samples; ++i) {
    const double h =
        samples == 1 ? h_min : h_min + (h_max - h_min) * static_cast<double>(i) / (samples - 1);
    const StabilityVerdict v = classify(scheme, h);
    const double ph = v.phase.value_or(std::nan(""));
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%s,%.17g,%.17g\n", h,
                  v.p_value.real(), v.p_value.imag(), v.max_eigenvalue_modulus,
                  to_string(v.verdict).c_str(), ph, ph / h);
    os << buf;
  }
}

}  // namespace csplit
