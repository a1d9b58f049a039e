#include "al_ist/al_reference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "al_ist/kernels.hpp"

namespace al_ist {
namespace {

constexpr double kModulusGuard = 1.0 - 1e-12;
constexpr double kPicardSubInterval = 1.0 / 12.0;
constexpr double kPicardResidual = 1e-12;
constexpr int kPicardMaxIterations = 500;

using State = std::vector<cplx>;

State lattice_from(const Sequence& q0, int radius) {
  auto [lo, hi] = q0.support();
  if (hi >= lo && (lo < -radius || hi > radius)) {
    throw std::invalid_argument("integrator: data supported outside [-" + std::to_string(radius) + ", " +
                                std::to_string(radius) + "]");
  }
  const auto w = q0.window(-radius, radius);
  return State(w.values().begin(), w.values().end());
}

void guard(const State& y, const char* who) {
  for (cplx v : y) {
    if (!(std::abs(v) < kModulusGuard)) {
      throw NumericalGuardError(std::string(who) + ": modulus guard tripped (|q| >= 1 - 1e-12); reduce the step");
    }
  }
}

void axpy(const State& y, double s, const State& k, State& out) {
  for (std::size_t i = 0; i < y.size(); ++i) out[i] = y[i] + s * k[i];
}

void rk4_step(State& y, double h, bool periodic, State& k1, State& k2, State& k3, State& k4, State& tmp) {
  kernels::parallel::al_rhs(y, periodic, k1);
  axpy(y, h / 2, k1, tmp);
  guard(tmp, "rk4");
  kernels::parallel::al_rhs(tmp, periodic, k2);
  axpy(y, h / 2, k2, tmp);
  guard(tmp, "rk4");
  kernels::parallel::al_rhs(tmp, periodic, k3);
  axpy(y, h, k3, tmp);
  guard(tmp, "rk4");
  kernels::parallel::al_rhs(tmp, periodic, k4);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += h / 6 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  guard(y, "rk4");
}

Sequence to_sequence(int offset, const State& y) { return Sequence(offset, y); }

// Picard iteration on [0, span] starting from y (zero boundary). Returns the
// endpoint value. `max_iterations` == 1 yields the first iterate.
State picard_interval(const State& y, double span, int max_iterations) {
  const int nodes = kPicardMesh + 1;
  const double h = span / kPicardMesh;
  const std::size_t sites = y.size();
  std::vector<State> u(nodes, y), f(nodes, State(sites));
  double previous = std::numeric_limits<double>::infinity();
  int stalled = 0;
  for (int iter = 0; iter < max_iterations; ++iter) {
    for (int i = 0; i < nodes; ++i) kernels::parallel::al_rhs(u[i], false, f[i]);
    double residual = 0.0;
    State prev_even(sites);
    for (int i = 1; i < nodes; ++i) {
      State next(sites);
      for (std::size_t s = 0; s < sites; ++s) {
        if (i % 2 == 0) {
          next[s] = prev_even[s] + h / 3 * (f[i - 2][s] + 4.0 * f[i - 1][s] + f[i][s]);
        } else {
          next[s] = prev_even[s] + h / 12 * (5.0 * f[i - 1][s] + 8.0 * f[i][s] - f[i + 1][s]);
        }
      }
      if (i % 2 == 0) prev_even = next;
      for (std::size_t s = 0; s < sites; ++s) {
        const cplx updated = y[s] + next[s];
        residual = std::max(residual, std::abs(updated - u[i][s]));
        u[i][s] = updated;
      }
    }
    if (max_iterations == 1 || residual <= kPicardResidual) return u.back();
    stalled = residual >= previous ? stalled + 1 : 0;
    if (stalled > 5) throw NumericalGuardError("picard: iteration is not contracting");
    previous = residual;
  }
  throw NumericalGuardError("picard: residual did not reach 1e-12");
}

}  // namespace

std::vector<cplx> al_rhs(const LatticeState& s) {
  std::vector<cplx> out(s.q.size());
  kernels::parallel::al_rhs(s.q.values(), s.boundary == Boundary::periodic, out);
  return out;
}

int default_radius(const Sequence& q0, double t) {
  auto [lo, hi] = q0.support();
  const int support_radius = hi >= lo ? std::max(std::abs(lo), std::abs(hi)) : 0;
  return support_radius + static_cast<int>(std::ceil(10.0 * (1.0 + std::abs(t))));
}

LatticeState rk4_integrate(const Sequence& q0, double t, double h, int radius, Boundary boundary) {
  if (!(h > 0.0)) throw std::invalid_argument("rk4_integrate: step must be positive");
  const bool periodic = boundary == Boundary::periodic;
  if (!periodic && radius < 0) throw std::invalid_argument("rk4_integrate: radius must be nonnegative");
  State y = periodic ? State(q0.values().begin(), q0.values().end()) : lattice_from(q0, radius);
  const int offset = periodic ? q0.offset() : -radius;
  State k1(y.size()), k2(y.size()), k3(y.size()), k4(y.size()), tmp(y.size());

  const double direction = t < 0 ? -1.0 : 1.0;
  const double total = std::abs(t);
  const auto full_steps = static_cast<long long>(std::floor(total / h));
  for (long long s = 0; s < full_steps; ++s) rk4_step(y, direction * h, periodic, k1, k2, k3, k4, tmp);
  const double rest = total - static_cast<double>(full_steps) * h;
  if (rest > 1e-15 * std::max(1.0, total)) rk4_step(y, direction * rest, periodic, k1, k2, k3, k4, tmp);
  return {to_sequence(offset, y), t, boundary};
}

LatticeState picard_solve(const Sequence& q0, double t, int radius) {
  State y = lattice_from(q0, radius);
  const double direction = t < 0 ? -1.0 : 1.0;
  double remaining = std::abs(t);
  while (remaining > 0.0) {
    const double span = std::min(kPicardSubInterval, remaining);
    y = picard_interval(y, direction * span, kPicardMaxIterations);
    guard(y, "picard");
    remaining -= span;
    if (remaining < 1e-15) break;
  }
  return {to_sequence(-radius, y), t, Boundary::zero};
}

std::vector<cplx> picard_first_iterate(const Sequence& q0, double t, int radius) {
  if (std::abs(t) > kPicardSubInterval) {
    throw std::invalid_argument("picard_first_iterate: |t| must not exceed 1/12");
  }
  return picard_interval(lattice_from(q0, radius), t, 1);
}

double conserved_product(const LatticeState& s) { return s.q.log_szego_product(); }

}  // namespace al_ist
