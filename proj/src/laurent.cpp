#include "al_ist/laurent.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "al_ist/fft.hpp"
#include "al_ist/kernels.hpp"

namespace al_ist {

LaurentPoly::LaurentPoly() = default;

LaurentPoly::LaurentPoly(int min_deg, std::vector<cplx> coeffs)
    : min_deg_(min_deg), coeffs_(std::move(coeffs)) {
  trim();
}

LaurentPoly LaurentPoly::constant(cplx c) { return LaurentPoly(0, {c}); }

LaurentPoly LaurentPoly::monomial(cplx c, int degree) { return LaurentPoly(degree, {c}); }

void LaurentPoly::trim() {
  const cplx zero{};
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [&](cplx c) { return c != zero; });
  if (first == coeffs_.end()) {
    min_deg_ = 0;
    coeffs_.assign(1, zero);
    return;
  }
  auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(), [&](cplx c) { return c != zero; });
  coeffs_.erase(last.base(), coeffs_.end());
  const auto lead = std::distance(coeffs_.begin(), first);
  coeffs_.erase(coeffs_.begin(), first);
  min_deg_ += static_cast<int>(lead);
}

cplx LaurentPoly::coeff(int degree) const {
  if (degree < min_deg_ || degree > max_deg()) return {};
  return coeffs_[static_cast<std::size_t>(degree - min_deg_)];
}

bool LaurentPoly::is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == cplx{}; }

double LaurentPoly::norm1() const {
  double s = 0.0;
  for (cplx c : coeffs_) s += std::abs(c);
  return s;
}

double LaurentPoly::max_abs_coeff() const {
  double m = 0.0;
  for (cplx c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

LaurentPoly& LaurentPoly::operator*=(cplx s) {
  for (cplx& c : coeffs_) c *= s;
  trim();
  return *this;
}

LaurentPoly LaurentPoly::shifted(int by) const {
  if (is_zero()) return *this;
  LaurentPoly out = *this;
  out.min_deg_ += by;
  return out;
}

namespace {

LaurentPoly combine(const LaurentPoly& p, const LaurentPoly& q, double sign) {
  if (q.is_zero()) return p;
  if (p.is_zero()) return sign * q;
  const int lo = std::min(p.min_deg(), q.min_deg());
  const int hi = std::max(p.max_deg(), q.max_deg());
  std::vector<cplx> out(static_cast<std::size_t>(hi - lo + 1));
  const auto pc = p.coeffs();
  const auto qc = q.coeffs();
  for (std::size_t i = 0; i < pc.size(); ++i) out[i + (p.min_deg() - lo)] += pc[i];
  for (std::size_t i = 0; i < qc.size(); ++i) out[i + (q.min_deg() - lo)] += sign * qc[i];
  return LaurentPoly(lo, std::move(out));
}

}  // namespace

LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) { return combine(p, q, 1.0); }

LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q) { return combine(p, q, -1.0); }

LaurentPoly operator*(cplx s, LaurentPoly p) {
  p *= s;
  return p;
}

LaurentPoly multiply_direct(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  return LaurentPoly(p.min_deg() + q.min_deg(), kernels::parallel::convolve(p.coeffs(), q.coeffs()));
}

LaurentPoly multiply_fft(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  return LaurentPoly(p.min_deg() + q.min_deg(), fft::convolve(p.coeffs(), q.coeffs()));
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const std::size_t product_span = p.span() + q.span();
  const std::size_t shorter = std::min(p.coeffs().size(), q.coeffs().size());
  if (product_span <= kDirectProductSpan || shorter <= kDirectShortOperand) {
    return multiply_direct(p, q);
  }
  return multiply_fft(p, q);
}

cplx evaluate(const LaurentPoly& p, cplx z) {
  if (z == cplx{} && p.min_deg() < 0) {
    throw std::domain_error("evaluate: z = 0 with negative min_deg");
  }
  const auto c = p.coeffs();
  cplx acc{};
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
  if (p.min_deg() == 0) return acc;
  if (z == cplx{}) return cplx{};
  return acc * std::pow(z, p.min_deg());
}

LaurentPoly conj_flip(const LaurentPoly& p) {
  const auto c = p.coeffs();
  std::vector<cplx> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[c.size() - 1 - i] = std::conj(c[i]);
  if (p.is_zero()) return {};
  return LaurentPoly(-p.max_deg(), std::move(out));
}

CircleGrid::CircleGrid(std::size_t size, double radius) : size_(size), radius_(radius) {
  if (size == 0 || !std::has_single_bit(size)) {
    throw std::invalid_argument("CircleGrid: size must be a positive power of two");
  }
  if (!(radius > 0.0 && radius <= 1.0)) {
    throw std::invalid_argument("CircleGrid: radius must lie in (0, 1]");
  }
}

cplx CircleGrid::node(std::size_t m) const {
  return std::polar(radius_, 2.0 * std::numbers::pi * static_cast<double>(m) /
                                 static_cast<double>(size_));
}

CircleGrid CircleGrid::at_least(std::size_t min_size, double radius) {
  return CircleGrid(std::bit_ceil(std::max<std::size_t>(min_size, 1)), radius);
}

std::vector<cplx> evaluate_on_grid(const LaurentPoly& p, const CircleGrid& grid) {
  auto values = kernels::parallel::fold_scaled(p.coeffs(), p.min_deg(), grid.radius(), grid.size());
  fft::sum_positive_exponent(values);
  return values;
}

}  // namespace al_ist
