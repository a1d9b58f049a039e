#include "al_ist/schur.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "al_ist/kernels.hpp"

namespace al_ist {

RationalSchur::RationalSchur(LaurentPoly n, LaurentPoly d) : num(std::move(n)), den(std::move(d)) {
  if (!num.is_zero() && num.min_deg() < 0) {
    throw std::invalid_argument("RationalSchur: numerator has negative exponents");
  }
  if (den.is_zero() || den.min_deg() != 0) {
    throw std::invalid_argument("RationalSchur: denominator must be analytic with den(0) != 0");
  }
}

std::vector<cplx> RationalSchur::on_grid(const CircleGrid& grid) const {
  auto p = evaluate_on_grid(num, grid);
  const auto q = evaluate_on_grid(den, grid);
  for (std::size_t m = 0; m < p.size(); ++m) p[m] /= q[m];
  return p;
}

double RationalSchur::membership_excess() const {
  const std::size_t longest = std::max(num.max_deg(), den.max_deg()) + 1;
  const CircleGrid grid = CircleGrid::at_least(std::max<std::size_t>(1024, 2 * longest));
  const auto p = evaluate_on_grid(num, grid);
  const auto q = evaluate_on_grid(den, grid);
  double max_q = 0.0;
  for (cplx v : q) max_q = std::max(max_q, std::abs(v));
  double excess = -std::numeric_limits<double>::infinity();
  for (std::size_t m = 0; m < p.size(); ++m) {
    excess = std::max(excess, std::abs(p[m]) - std::abs(q[m]));
  }
  return excess - 1e-9 * max_q;
}

void RationalSchur::require_schur_class() const {
  if (membership_excess() > 0.0) {
    throw std::invalid_argument("RationalSchur: |num| exceeds |den| on the unit circle");
  }
}

namespace {

SchurStep step_unchecked(const RationalSchur& f) {
  const cplx d0 = f.den.coeff(0);
  const cplx gamma = f.num.coeff(0) / d0;
  if (std::abs(gamma) >= kSchurStopThreshold) return {gamma, f, true};

  // Work in the gauge den(0) = 1 so that num(0) = gamma exactly.
  const cplx inv_d0 = 1.0 / d0;
  const LaurentPoly p = inv_d0 * f.num;
  const LaurentPoly q = inv_d0 * f.den;

  const LaurentPoly reduced = p - gamma * q;
  std::vector<cplx> shifted;
  const int top = reduced.max_deg();
  shifted.reserve(top > 0 ? static_cast<std::size_t>(top) : 1);
  for (int k = 1; k <= top; ++k) shifted.push_back(reduced.coeff(k));
  LaurentPoly next_num(0, std::move(shifted));

  LaurentPoly next_den = q - std::conj(gamma) * p;
  const cplx scale = 1.0 / next_den.coeff(0);
  next_num *= scale;
  next_den *= scale;
  return {gamma, RationalSchur(std::move(next_num), std::move(next_den)), false};
}

}  // namespace

SchurStep schur_step(const RationalSchur& f) {
  f.require_schur_class();
  return step_unchecked(f);
}

SchurCoeffs schur_coeffs(const RationalSchur& f, std::size_t count) {
  f.require_schur_class();
  SchurCoeffs out;
  out.gammas.reserve(count);
  RationalSchur current = f;
  for (std::size_t k = 0; k < count; ++k) {
    SchurStep s = step_unchecked(current);
    if (s.terminal) {
      out.terminal = s.gamma;
      break;
    }
    out.gammas.push_back(s.gamma);
    current = std::move(s.next);
  }
  return out;
}

std::vector<RationalSchur> schur_iterates(const RationalSchur& f, std::size_t count) {
  f.require_schur_class();
  std::vector<RationalSchur> out{f};
  for (std::size_t k = 0; k < count; ++k) {
    SchurStep s = step_unchecked(out.back());
    if (s.terminal) break;
    out.push_back(std::move(s.next));
  }
  return out;
}

double log_eta(const SchurCoeffs& c) {
  double s = 0.0;
  for (cplx g : c.gammas) s += std::log1p(-std::norm(g));
  return s;
}

double eta(const SchurCoeffs& c) { return std::exp(log_eta(c)); }

StabilityConstant stability_constant(double eta, double r) {
  if (!(eta > 0.0 && eta <= 1.0)) throw std::invalid_argument("stability_constant: eta must lie in (0, 1]");
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("stability_constant: r must lie in (0, 1)");
  if (eta == 1.0) return {1.0, 0.0};
  const double log_inv_eta = -std::log(eta);
  const double root = std::sqrt(1.0 - eta);
  // 1 - sqrt(1 - eta) = eta / (1 + sqrt(1 - eta)) avoids cancellation near eta = 0.
  const double inv_gap = (1.0 + root) / eta;
  const double log_c = log_inv_eta * (2.0 + inv_gap) * (4.0 / ((1.0 - r) * (1.0 - r)) + 1.0);
  return {std::exp(log_c), log_c};
}

double l2_distance_circle(const RationalSchur& f, const RationalSchur& g, double r,
                          std::size_t grid_size) {
  const CircleGrid grid(grid_size, r);
  const auto fv = f.on_grid(grid);
  const auto gv = g.on_grid(grid);
  double s = 0.0;
  for (std::size_t m = 0; m < fv.size(); ++m) s += std::norm(fv[m] - gv[m]);
  return std::sqrt(s / static_cast<double>(grid_size));
}

double l2_norm_circle(const RationalSchur& f, double r, std::size_t grid_size) {
  const CircleGrid grid(grid_size, r);
  const auto fv = f.on_grid(grid);
  double s = 0.0;
  for (cplx v : fv) s += std::norm(v);
  return std::sqrt(s / static_cast<double>(grid_size));
}

BoundCheck iterate_energy_bound_check(const RationalSchur& f, double r, std::size_t m) {
  const auto iterates = schur_iterates(f, m);
  const CircleGrid grid(1024, r);
  double lhs = 0.0;
  SchurCoeffs coeffs;
  for (std::size_t k = 0; k < m && k < iterates.size(); ++k) {
    double peak = 0.0;
    for (cplx v : iterates[k].on_grid(grid)) peak = std::max(peak, std::abs(v));
    lhs += peak * peak;
    coeffs.gammas.push_back(iterates[k].at_zero());
  }
  const double rhs = 4.0 / ((1.0 - r) * (1.0 - r)) * -log_eta(coeffs);
  return {lhs, rhs};
}

SchurIterator::SchurIterator(const RationalSchur& f, bool parallel) : parallel_(parallel) {
  const cplx inv_d0 = 1.0 / f.den.coeff(0);
  const std::size_t num_len = f.num.is_zero() ? 0 : static_cast<std::size_t>(f.num.max_deg()) + 1;
  den_len_ = static_cast<std::size_t>(f.den.max_deg()) + 1;
  num_.reserve(num_len + den_len_);
  num_.assign(num_len, cplx{});
  den_.assign(std::max(num_len, den_len_), cplx{});
  for (int k = f.num.min_deg(); k <= f.num.max_deg() && num_len > 0; ++k) {
    num_[static_cast<std::size_t>(k)] = f.num.coeff(k) * inv_d0;
  }
  for (std::size_t k = 0; k < den_len_; ++k) den_[k] = f.den.coeff(static_cast<int>(k)) * inv_d0;
  den_[0] = 1.0;
}

cplx SchurIterator::next() {
  if (terminated_) throw std::logic_error("SchurIterator: recursion already terminated");
  if (start_ >= num_.size()) {
    ++steps_;
    return {};
  }
  const cplx gamma = num_[start_];
  if (std::abs(gamma) >= kSchurStopThreshold) {
    terminated_ = true;
    return gamma;
  }
  if (gamma != cplx{}) {
    // (P - gamma Q)/z can reach degree deg Q - 1, past the end of P.
    if (num_.size() - start_ < den_len_) num_.resize(start_ + den_len_);
    const double scale = 1.0 / (1.0 - std::norm(gamma));
    std::span<cplx> num(num_.data() + start_, num_.size() - start_);
    den_len_ = std::max(den_len_, num.size());
    if (den_.size() < den_len_) den_.resize(den_len_);
    std::span<cplx> den(den_.data(), den_len_);
    if (parallel_) {
      kernels::parallel::schur_sweep(num, den, gamma, scale);
    } else {
      kernels::serial::schur_sweep(num, den, gamma, scale);
    }
    den_[0] = 1.0;
  }
  ++start_;
  ++steps_;
  return gamma;
}

}  // namespace al_ist
