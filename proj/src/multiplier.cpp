#include "al_ist/multiplier.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace al_ist {

double bessel_j(int k, double x) {
  if (x < 0.0) throw std::domain_error("bessel_j: x must be nonnegative");
  const int order = std::abs(k);
  const double sign = (k < 0 && order % 2 == 1) ? -1.0 : 1.0;
  if (x == 0.0) return order == 0 ? 1.0 : 0.0;

  const long double half = static_cast<long double>(x) / 2.0L;
  // Leading term (x/2)^k / k! in log space so large orders underflow cleanly.
  const long double log_lead = order * std::log(half) - std::lgamma(static_cast<long double>(order) + 1.0L);
  long double term = std::exp(log_lead);
  if (term == 0.0L) return 0.0;
  const long double ratio = -half * half;
  long double sum = term;
  for (int m = 0; m < 100000; ++m) {
    term *= ratio / (static_cast<long double>(m + 1) * static_cast<long double>(m + 1 + order));
    sum += term;
    if (std::abs(term) < 1e-18L * std::abs(sum) + 1e-300L) break;
  }
  return sign * static_cast<double>(sum);
}

double log_delta(int n, double t) {
  if (t == 0.0) return -std::numeric_limits<double>::infinity();
  return n * std::log(t) + t - std::lgamma(n + 1.0);
}

double delta(int n, double t) { return std::exp(log_delta(n, t)); }

LaurentPoly p_poly(int n, double t) {
  if (n < 0) throw std::invalid_argument("p_poly: order must be nonnegative");
  if (t < 0.0) throw std::invalid_argument("p_poly: t must be nonnegative");
  static constexpr cplx kPowersOfI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  std::vector<cplx> coeffs(2 * static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    // i^{-k} J_{-k} = i^{-k} (-1)^k J_k = i^k J_k, so both sides share a value.
    const cplx c = kPowersOfI[k % 4] * bessel_j(k, 2.0 * t);
    coeffs[static_cast<std::size_t>(n + k)] = c;
    coeffs[static_cast<std::size_t>(n - k)] = c;
  }
  return LaurentPoly(-n, std::move(coeffs));
}

int smallest_admissible_order(double t) {
  int n = std::max(1, static_cast<int>(std::floor(t)) + 1);
  while (log_delta(n, t) >= 0.0) ++n;
  return n;
}

MultiplierBundle g_bundle(int n, double t) {
  if (t < 0.0) throw std::invalid_argument("g_bundle: t must be nonnegative");
  const double ld = log_delta(n, t);
  if (n < 1 || !(n > t) || !(ld < 0.0)) {
    throw std::invalid_argument("g_bundle: order " + std::to_string(n) + " is not admissible for t = " +
                                std::to_string(t) + "; smallest admissible order is " +
                                std::to_string(smallest_admissible_order(t)));
  }
  const double d = std::exp(ld);
  LaurentPoly g = (1.0 - d) * p_poly(n, t).shifted(n);
  return {n, t, std::move(g), d};
}

double s_bound(int n, double t, double r) { return 6.0 * std::exp(log_delta(n, t) + t / r); }

double tail_bound(int n, double t, double r) {
  return 6.0 * std::exp(log_delta(n, t) + 2.0 * t / r - n * std::log(r));
}

}  // namespace al_ist
