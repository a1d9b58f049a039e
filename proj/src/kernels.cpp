#include "al_ist/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

namespace al_ist::kernels {
namespace {

// Below these sizes the OpenMP fork costs more than the loop.
constexpr std::ptrdiff_t kMinParallelWork = 4096;

std::size_t positive_mod(long long k, std::size_t m) {
  const long long r = k % static_cast<long long>(m);
  return static_cast<std::size_t>(r < 0 ? r + static_cast<long long>(m) : r);
}

double scale_power(double radius, long long exponent) {
  return radius == 1.0 ? 1.0 : std::pow(radius, static_cast<double>(exponent));
}

}  // namespace

int configure_threads_from_env() {
  const char* raw = std::getenv("AL_IST_THREADS");
  if (raw == nullptr) return 0;
  try {
    const int cap = std::stoi(raw);
    if (cap > 0) {
      omp_set_num_threads(cap);
      return cap;
    }
  } catch (const std::exception&) {
  }
  return 0;
}

namespace serial {

std::vector<cplx> convolve(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<cplx> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

void schur_sweep(std::span<cplx> num, std::span<cplx> den, cplx gamma, double scale) {
  const cplx gbar = std::conj(gamma);
  const std::size_t len = std::max(num.size(), den.size());
  for (std::size_t i = 1; i < len; ++i) {
    const cplx p = i < num.size() ? num[i] : cplx{};
    const cplx q = i < den.size() ? den[i] : cplx{};
    if (i < num.size()) num[i] = (p - gamma * q) * scale;
    if (i < den.size()) den[i] = (q - gbar * p) * scale;
  }
}

void al_rhs(std::span<const cplx> q, bool periodic, std::span<cplx> out) {
  const std::size_t n = q.size();
  for (std::size_t k = 0; k < n; ++k) {
    cplx left = k > 0 ? q[k - 1] : (periodic ? q[n - 1] : cplx{});
    cplx right = k + 1 < n ? q[k + 1] : (periodic ? q[0] : cplx{});
    out[k] = cplx{0.0, 1.0} * (1.0 - std::norm(q[k])) * (left + right);
  }
}

std::vector<cplx> fold_scaled(std::span<const cplx> coeffs, int min_deg, double radius,
                              std::size_t bins) {
  std::vector<cplx> out(bins);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const long long e = static_cast<long long>(min_deg) + static_cast<long long>(k);
    out[positive_mod(e, bins)] += coeffs[k] * scale_power(radius, e);
  }
  return out;
}

}  // namespace serial

namespace parallel {

std::vector<cplx> convolve(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.empty() || b.empty()) return {};
  const auto na = static_cast<std::ptrdiff_t>(a.size());
  const auto nb = static_cast<std::ptrdiff_t>(b.size());
  const std::ptrdiff_t n_out = na + nb - 1;
  std::vector<cplx> out(static_cast<std::size_t>(n_out));
#pragma omp parallel for schedule(static) if (na * nb >= kMinParallelWork)
  for (std::ptrdiff_t k = 0; k < n_out; ++k) {
    const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, k - nb + 1);
    const std::ptrdiff_t hi = std::min<std::ptrdiff_t>(k, na - 1);
    cplx acc{};
    for (std::ptrdiff_t i = lo; i <= hi; ++i) acc += a[i] * b[k - i];
    out[k] = acc;
  }
  return out;
}

void schur_sweep(std::span<cplx> num, std::span<cplx> den, cplx gamma, double scale) {
  const cplx gbar = std::conj(gamma);
  const auto n_num = static_cast<std::ptrdiff_t>(num.size());
  const auto n_den = static_cast<std::ptrdiff_t>(den.size());
  const std::ptrdiff_t len = std::max(n_num, n_den);
#pragma omp parallel for schedule(static) if (len >= kMinParallelWork)
  for (std::ptrdiff_t i = 1; i < len; ++i) {
    const cplx p = i < n_num ? num[i] : cplx{};
    const cplx q = i < n_den ? den[i] : cplx{};
    if (i < n_num) num[i] = (p - gamma * q) * scale;
    if (i < n_den) den[i] = (q - gbar * p) * scale;
  }
}

void al_rhs(std::span<const cplx> q, bool periodic, std::span<cplx> out) {
  const auto n = static_cast<std::ptrdiff_t>(q.size());
#pragma omp parallel for schedule(static) if (n >= kMinParallelWork)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    cplx left = k > 0 ? q[k - 1] : (periodic ? q[n - 1] : cplx{});
    cplx right = k + 1 < n ? q[k + 1] : (periodic ? q[0] : cplx{});
    out[k] = cplx{0.0, 1.0} * (1.0 - std::norm(q[k])) * (left + right);
  }
}

std::vector<cplx> fold_scaled(std::span<const cplx> coeffs, int min_deg, double radius,
                              std::size_t bins) {
  // Each bin owns the exponents congruent to it, so bins are independent.
  std::vector<cplx> out(bins);
  const auto n_bins = static_cast<std::ptrdiff_t>(bins);
  const auto n_coeffs = static_cast<long long>(coeffs.size());
#pragma omp parallel for schedule(static) if (n_coeffs >= kMinParallelWork)
  for (std::ptrdiff_t j = 0; j < n_bins; ++j) {
    const long long first = static_cast<long long>(positive_mod(j - static_cast<long long>(min_deg), bins));
    cplx acc{};
    for (long long k = first; k < n_coeffs; k += n_bins) {
      acc += coeffs[static_cast<std::size_t>(k)] * scale_power(radius, min_deg + k);
    }
    out[static_cast<std::size_t>(j)] = acc;
  }
  return out;
}

}  // namespace parallel

}  // namespace al_ist::kernels
