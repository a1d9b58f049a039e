#include "al_ist/al_fast.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "al_ist/multiplier.hpp"
#include "al_ist/nlft.hpp"
#include "al_ist/schur.hpp"

namespace al_ist {
namespace {

constexpr double kLn2 = std::numbers::ln2;

void check_eps(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0, 1)");
}

void check_eta(double eta) {
  if (!(eta > 0.0 && eta <= 1.0)) throw std::invalid_argument("eta must lie in (0, 1]");
}

double resolve_eta(const Sequence& q0, std::optional<double> eta) {
  if (eta) {
    check_eta(*eta);
    return *eta;
  }
  const double computed = std::exp(q0.log_szego_product());
  if (!(computed > 0.0)) {
    throw InfeasibleParameters("eta computed from the data underflows to 0; no finite window exists");
  }
  return computed;
}

ErrorBudget make_budget(double localization, double truncation) {
  return {localization, truncation, localization + truncation};
}

// Localization and truncation budget for site n0 + offset, where the pass
// that produced it read coefficient n + j_shifted.
ErrorBudget site_budget(const SolveParams& p, double t_abs, int offset, int j_shifted, double l2tail) {
  const double theorem = localization_bound(p.eta, 0.5, t_abs, p.N, offset);
  const double direct = localization_bound_direct(t_abs, 0.5, p.N, offset, l2tail);
  return make_budget(std::min(theorem, direct), t3_bound(p.eta, t_abs, p.n, j_shifted));
}

// Coefficients for the window of q centred at n0, shifted onto [0, 2N].
std::vector<cplx> run_pass(const Sequence& q, double t_abs, int n0, const SolveParams& p) {
  const Sequence shifted = q.window(n0 - p.N, n0 + p.N).shifted(-(n0 - p.N));
  return evolved_coefficients(shifted, t_abs, p.n, static_cast<std::size_t>(p.n + p.N + 1));
}

}  // namespace

SolveParams select_params(double t, double eps, double eta, int n0, int window_cap) {
  check_eps(eps);
  check_eta(eta);
  const double t_abs = std::abs(t);
  const double log_c = stability_constant(eta, 0.5).log_value;
  const double raw = 4.0 * std::numbers::e * t_abs + (log_c - std::log(eps)) / kLn2;
  if (!(raw + 5.0 <= static_cast<double>(window_cap))) {
    throw InfeasibleParameters("window half-width exceeds the cap of " + std::to_string(window_cap) +
                               " because eta = " + std::to_string(eta) +
                               " makes the stability constant too large");
  }
  SolveParams p;
  p.N = 5 + static_cast<int>(std::floor(raw));
  p.n = 2 * p.N;
  p.eps = eps;
  p.eta = eta;
  p.t = t;
  p.n0 = n0;
  p.reflected = t < 0.0;
  p.log_stability = log_c;
  if (!(p.n > t_abs) || !(log_delta(p.n, t_abs) < 0.0)) {
    throw InfeasibleParameters("selected order n = " + std::to_string(p.n) + " is not admissible for |t| = " +
                               std::to_string(t_abs));
  }
  return p;
}

double localization_bound(double eta, double r, double t, int N, int j) {
  if (N < std::abs(j)) throw std::invalid_argument("localization_bound: requires N >= |j|");
  const double log_c = stability_constant(eta, r).log_value;
  return std::exp(std::log(4.0) + t / r + log_c + (N - std::abs(j)) * std::log(r) - std::log1p(-r));
}

double localization_bound_direct(double t, double r, int N, int j, std::optional<double> l2tail) {
  if (N < std::abs(j)) throw std::invalid_argument("localization_bound_direct: requires N >= |j|");
  const double decay = (N - std::abs(j)) * std::log(r);
  if (l2tail) {
    if (*l2tail == 0.0) return 0.0;
    return std::exp(std::log(r) + 10.0 * t / (r * r) + std::log(*l2tail) + decay);
  }
  return std::exp(0.5 * std::log(2.0) + std::log(r) + 10.0 * t / (r * r) + decay - 0.5 * std::log1p(-r * r));
}

double t3_bound(double eta, double t, int n, int j) {
  if (t == 0.0) return 0.0;
  const double log_c = stability_constant(eta, 0.5).log_value;
  const double log_value = j * kLn2 + log_c + std::log(12.0) + 5.0 * t -
                           0.5 * std::log(2.0 * std::numbers::pi * n) +
                           n * std::log(2.0 * std::numbers::e * t / n);
  return std::exp(log_value);
}

double order_cauchy_bound(double eta, double t, int n, int j) {
  const double log_c = stability_constant(eta, 0.5).log_value;
  return std::exp(std::log(6.0) + log_c + log_delta(n, t) + 4.0 * t + (n + j + 1) * kLn2);
}

std::vector<cplx> evolved_coefficients(const Sequence& q_plus, double t, int n, std::size_t count) {
  if (t < 0.0) throw std::invalid_argument("evolved_coefficients: t must be nonnegative");
  auto [lo, hi] = q_plus.support();
  if (hi >= lo && lo < 0) throw std::invalid_argument("evolved_coefficients: data must sit on sites >= 0");

  const Transfer2x2 scattering = nlft_forward(q_plus.window(lo, hi));
  const MultiplierBundle bundle = g_bundle(n, t);
  const RationalSchur f(bundle.g * scattering.b_star(), scattering.a);

  SchurIterator it(f);
  std::vector<cplx> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const cplx gamma = it.next();
    if (it.terminated()) {
      throw NumericalGuardError("Schur recursion hit a unimodular coefficient at step " + std::to_string(k));
    }
    out.push_back(gamma);
  }
  return out;
}

PointSolution solve_point(const Sequence& q0, double t, int n0, double eps, std::optional<double> eta) {
  check_eps(eps);
  const double eta_value = resolve_eta(q0, eta);
  SolveParams p = select_params(t, eps, eta_value, n0);
  if (q0.all_zero()) return {cplx{}, ErrorBudget{}, p};

  const double t_abs = std::abs(t);
  const Sequence data = p.reflected ? q0.conjugated() : q0;
  const auto coeffs = run_pass(data, t_abs, n0, p);
  cplx value = coeffs[static_cast<std::size_t>(p.n + p.N)];
  if (p.reflected) value = std::conj(value);

  const double l2tail = q0.l2_outside(n0 - p.N, n0 + p.N);
  return {value, site_budget(p, t_abs, 0, p.N, l2tail), p};
}

WindowSolution solve_window(const Sequence& q0, double t, int n0, double eps, std::optional<double> eta) {
  check_eps(eps);
  const double eta_value = resolve_eta(q0, eta);
  const SolveParams p = select_params(t, eps, eta_value, n0);
  const int half = p.N / 2;

  WindowSolution out;
  out.params = p;
  out.first_site = n0 - half;
  out.values.assign(static_cast<std::size_t>(2 * half + 1), cplx{});
  out.budgets.assign(out.values.size(), ErrorBudget{});
  if (q0.all_zero()) return out;

  const double t_abs = std::abs(t);
  const Sequence data = p.reflected ? q0.conjugated() : q0;
  const Sequence mirrored = data.reflected();
  std::vector<cplx> forward, backward;
#pragma omp parallel sections
  {
#pragma omp section
    forward = run_pass(data, t_abs, n0, p);
#pragma omp section
    backward = run_pass(mirrored, t_abs, -n0, p);
  }

  const double l2tail = q0.l2_outside(n0 - p.N, n0 + p.N);
  for (int offset = -half; offset <= half; ++offset) {
    // Site n0 + offset is coefficient n + N - |offset| of the pass that
    // has it on its left half.
    const int j = p.N - std::abs(offset);
    const auto& source = offset <= 0 ? forward : backward;
    const auto slot = static_cast<std::size_t>(offset + half);
    const cplx v = source[static_cast<std::size_t>(p.n + j)];
    out.values[slot] = p.reflected ? std::conj(v) : v;
    out.budgets[slot] = site_budget(p, t_abs, offset, j, l2tail);
  }
  return out;
}

}  // namespace al_ist
