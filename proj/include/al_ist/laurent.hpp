// Complex Laurent polynomials with exact degree bookkeeping.
//
// Every transfer-matrix entry, scattering multiplier and Schur numerator in
// the library is a LaurentPoly. Products switch between direct convolution
// and zero-padded FFT convolution depending on operand size.

#ifndef AL_IST_LAURENT_HPP
#define AL_IST_LAURENT_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace al_ist {

using cplx = std::complex<double>;

/// Finite sum  sum_i coeffs[i] * z^(min_deg + i).
///
/// Leading and trailing exact zeros are trimmed on construction, so the
/// stored span always runs from the lowest to the highest nonzero
/// coefficient. The zero polynomial is canonical: min_deg 0, coeffs {0}.
class LaurentPoly {
 public:
  LaurentPoly();
  LaurentPoly(int min_deg, std::vector<cplx> coeffs);

  static LaurentPoly constant(cplx c);
  static LaurentPoly monomial(cplx c, int degree);

  int min_deg() const { return min_deg_; }
  int max_deg() const { return min_deg_ + static_cast<int>(coeffs_.size()) - 1; }
  /// Number of stored coefficients minus one.
  std::size_t span() const { return coeffs_.size() - 1; }
  std::span<const cplx> coeffs() const { return coeffs_; }

  /// Coefficient of z^degree (zero outside the stored range).
  cplx coeff(int degree) const;
  bool is_zero() const;
  double norm1() const;
  double max_abs_coeff() const;

  LaurentPoly& operator*=(cplx s);
  LaurentPoly shifted(int by) const;  // z^by * p

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void trim();

  int min_deg_ = 0;
  std::vector<cplx> coeffs_{cplx{0.0, 0.0}};
};

LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly operator*(cplx s, LaurentPoly p);
LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);

/// Product spans up to this many coefficients use direct convolution.
inline constexpr std::size_t kDirectProductSpan = 64;
/// Products whose shorter operand has at most this many coefficients also
/// use direct convolution; the FFT would cost more and would smear rounding
/// noise into coefficients that are exactly zero.
inline constexpr std::size_t kDirectShortOperand = 32;

LaurentPoly multiply_direct(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly multiply_fft(const LaurentPoly& p, const LaurentPoly& q);

/// Horner evaluation. Throws std::domain_error at z = 0 when min_deg < 0.
cplx evaluate(const LaurentPoly& p, cplx z);

/// q(z) = conj(p(1 / conj(z))): coefficients reversed and conjugated,
/// exponents negated. On the unit circle this is the pointwise conjugate.
LaurentPoly conj_flip(const LaurentPoly& p);

/// M equispaced nodes r * exp(2 pi i m / M) on a circle of radius r.
class CircleGrid {
 public:
  /// Throws std::invalid_argument unless size is a power of two and
  /// radius lies in (0, 1].
  CircleGrid(std::size_t size, double radius = 1.0);

  std::size_t size() const { return size_; }
  double radius() const { return radius_; }
  cplx node(std::size_t m) const;

  /// Smallest power-of-two grid with at least `min_size` nodes.
  static CircleGrid at_least(std::size_t min_size, double radius = 1.0);

 private:
  std::size_t size_;
  double radius_;
};

/// Values of p at every grid node via a single FFT of the radius-scaled,
/// index-folded coefficients.
std::vector<cplx> evaluate_on_grid(const LaurentPoly& p, const CircleGrid& grid);

}  // namespace al_ist

#endif  // AL_IST_LAURENT_HPP
