#include "al_ist/nlft.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace al_ist {

double Transfer2x2::unitarity_residual(const CircleGrid& grid) const {
  const auto av = evaluate_on_grid(a, grid);
  const auto bv = evaluate_on_grid(b, grid);
  double worst = 0.0;
  for (std::size_t m = 0; m < av.size(); ++m) {
    worst = std::max(worst, std::abs(std::norm(av[m]) - std::norm(bv[m]) - 1.0));
  }
  return worst;
}

CircleGrid Transfer2x2::default_grid() const {
  const int lo = std::min(a.min_deg(), b.min_deg());
  const int hi = std::max(a.max_deg(), b.max_deg());
  return CircleGrid::at_least(std::max<std::size_t>(64, 4 * static_cast<std::size_t>(hi - lo + 1)));
}

Transfer2x2 operator*(const Transfer2x2& left, const Transfer2x2& right) {
  // [[a1, b1], [b1*, a1*]] [[a2, b2], [b2*, a2*]]
  Transfer2x2 out;
  out.a = left.a * right.a + left.b * right.b_star();
  out.b = left.a * right.b + left.b * right.a_star();
  return out;
}

Transfer2x2 transfer_factor(cplx qk, int k) {
  const double mod2 = std::norm(qk);
  if (!(mod2 < 1.0)) throw std::domain_error("transfer_factor: |q_k| must be < 1");
  const double scale = 1.0 / std::sqrt(1.0 - mod2);
  Transfer2x2 t;
  t.a = LaurentPoly::constant(scale);
  t.b = LaurentPoly::monomial(std::conj(qk) * scale, -k);
  return t;
}

namespace {

std::vector<Transfer2x2> leaves(const Sequence& q) {
  std::vector<Transfer2x2> out;
  out.reserve(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    out.push_back(transfer_factor(q.values()[i], q.offset() + static_cast<int>(i)));
  }
  return out;
}

Transfer2x2 product_tree(std::vector<Transfer2x2> level, bool parallel) {
  if (level.empty()) return {};
  while (level.size() > 1) {
    const auto pairs = static_cast<std::ptrdiff_t>(level.size() / 2);
    std::vector<Transfer2x2> next(static_cast<std::size_t>(pairs) + level.size() % 2);
#pragma omp parallel for schedule(dynamic) if (parallel && pairs > 1)
    for (std::ptrdiff_t i = 0; i < pairs; ++i) {
      next[static_cast<std::size_t>(i)] = level[2 * i] * level[2 * i + 1];
    }
    if (level.size() % 2 == 1) next.back() = std::move(level.back());
    level = std::move(next);
  }
  return std::move(level.front());
}

}  // namespace

Transfer2x2 nlft_forward(const Sequence& q) { return product_tree(leaves(q), true); }

Transfer2x2 nlft_forward_serial(const Sequence& q) { return product_tree(leaves(q), false); }

Transfer2x2 nlft_forward_naive(const Sequence& q) {
  Transfer2x2 acc;
  for (const Transfer2x2& f : leaves(q)) acc = acc * f;
  return acc;
}

RationalSchur fc_plus(const Sequence& q) {
  auto [lo, hi] = q.support();
  if (hi >= lo && lo < 0) {
    throw std::invalid_argument("fc_plus: data must be supported on sites k >= 0");
  }
  const Transfer2x2 t = nlft_forward(q.window(std::max(lo, 0), hi));
  return RationalSchur(t.b_star(), t.a);
}

std::vector<cplx> reflection_grid(const Transfer2x2& t, const CircleGrid& grid) {
  auto bv = evaluate_on_grid(t.b, grid);
  const auto av = evaluate_on_grid(t.a, grid);
  for (std::size_t m = 0; m < bv.size(); ++m) bv[m] /= av[m];
  return bv;
}

std::vector<cplx> reflection_grid(const Sequence& q, const CircleGrid& grid) {
  return reflection_grid(nlft_forward(q), grid);
}

SzegoIdentity szego_identity_check(const Sequence& q, const CircleGrid& grid) {
  const Transfer2x2 t = nlft_forward(q);
  const auto r = reflection_grid(t, grid);
  double mean = 0.0;
  for (cplx v : r) mean += std::log1p(-std::norm(v));
  mean /= static_cast<double>(r.size());
  return {mean, q.log_szego_product(), -2.0 * std::log(t.a.coeff(0).real())};
}

double shift_check(const Sequence& q, int n, const CircleGrid& grid) {
  const auto moved = reflection_grid(q.shifted(n), grid);
  const auto base = reflection_grid(q, grid);
  double worst = 0.0;
  for (std::size_t m = 0; m < base.size(); ++m) {
    const cplx z = grid.node(m);
    worst = std::max(worst, std::abs(moved[m] - std::pow(z, -n) * base[m]));
  }
  return worst;
}

double rho_s(std::span<const cplx> h1, std::span<const cplx> h2) {
  if (h1.size() != h2.size() || h1.empty()) {
    throw std::invalid_argument("rho_s: sample arrays must be nonempty and of equal length");
  }
  double acc = 0.0;
  for (std::size_t m = 0; m < h1.size(); ++m) {
    const cplx w = (h1[m] - h2[m]) / (1.0 - std::conj(h1[m]) * h2[m]);
    const double mod = std::abs(w);
    if (!(mod < 1.0 - 1e-14)) return std::numeric_limits<double>::infinity();
    acc -= std::log1p(-mod * mod);
  }
  return std::sqrt(acc / static_cast<double>(h1.size()));
}

}  // namespace al_ist
