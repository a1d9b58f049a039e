#include "al_ist/fft.hpp"

#include <fftw3.h>

#include <bit>
#include <mutex>
#include <stdexcept>

namespace al_ist::fft {
namespace {

// The FFTW planner is not thread-safe; fftw_execute is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct Plan {
  fftw_plan plan = nullptr;
  Plan(int n, fftw_complex* in, fftw_complex* out, int sign) {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_1d(n, in, out, sign, FFTW_ESTIMATE);
    if (plan == nullptr) throw std::runtime_error("fftw: plan creation failed");
  }
  ~Plan() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  Plan(const Plan&) = delete;
  Plan& operator=(const Plan&) = delete;
  void run() const { fftw_execute(plan); }
};

fftw_complex* as_fftw(std::complex<double>* p) { return reinterpret_cast<fftw_complex*>(p); }

}  // namespace

std::vector<std::complex<double>> convolve(std::span<const std::complex<double>> a,
                                           std::span<const std::complex<double>> b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t out_len = a.size() + b.size() - 1;
  const std::size_t n = std::bit_ceil(out_len);
  std::vector<std::complex<double>> fa(n), fb(n);
  std::copy(a.begin(), a.end(), fa.begin());
  std::copy(b.begin(), b.end(), fb.begin());
  {
    Plan pa(static_cast<int>(n), as_fftw(fa.data()), as_fftw(fa.data()), FFTW_FORWARD);
    Plan pb(static_cast<int>(n), as_fftw(fb.data()), as_fftw(fb.data()), FFTW_FORWARD);
    pa.run();
    pb.run();
  }
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) fa[i] *= fb[i] * inv_n;
  Plan back(static_cast<int>(n), as_fftw(fa.data()), as_fftw(fa.data()), FFTW_BACKWARD);
  back.run();
  fa.resize(out_len);
  return fa;
}

void sum_positive_exponent(std::vector<std::complex<double>>& x) {
  if (x.size() <= 1) return;
  Plan p(static_cast<int>(x.size()), as_fftw(x.data()), as_fftw(x.data()), FFTW_BACKWARD);
  p.run();
}

}  // namespace al_ist::fft
