#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "al_ist/al_fast.hpp"
#include "al_ist/al_reference.hpp"
#include "oracles.hpp"

using namespace al_ist;

namespace {

const cplx I{0.0, 1.0};

constexpr int kRing = 16;
constexpr double kAmp = 0.3;

Sequence plane_wave_initial() {
  std::vector<cplx> v(kRing);
  for (int n = 0; n < kRing; ++n) v[n] = std::polar(kAmp, 2 * std::numbers::pi * n / kRing);
  return Sequence(0, v);
}

double plane_wave_error(double h, double t) {
  const double k = 2 * std::numbers::pi / kRing;
  const double omega = 2 * (1 - kAmp * kAmp) * std::cos(k);
  const LatticeState s = rk4_integrate(plane_wave_initial(), t, h, 0, Boundary::periodic);
  double worst = 0.0;
  for (int n = 0; n < kRing; ++n) worst = std::max(worst, std::abs(s.q[n] - std::polar(kAmp, k * n + omega * t)));
  return worst;
}

}  // namespace

TEST(AlRhs, Examples) {
  EXPECT_EQ(al_rhs({Sequence(-2, {0.0, 0.0, 0.0}), 0.0, Boundary::zero}), std::vector<cplx>(3));
  const cplx s{0.2, 0.1};
  const auto d = al_rhs({Sequence(-1, {0.0, s, 0.0}), 0.0, Boundary::zero});
  EXPECT_EQ(d[1], cplx{});
  EXPECT_EQ(d[0], I * s);
  EXPECT_EQ(d[2], I * s);
}

TEST(AlRhs, PlaneWave) {
  const Sequence q = plane_wave_initial();
  const auto d = al_rhs({q, 0.0, Boundary::periodic});
  const double omega = 2 * (1 - kAmp * kAmp) * std::cos(2 * std::numbers::pi / kRing);
  for (int n = 0; n < kRing; ++n) EXPECT_LE(std::abs(d[n] - I * omega * q[n]), 1e-15);
}

TEST(Rk4, ZeroDatumStaysZero) {
  const LatticeState s = rk4_integrate(Sequence(0, {0.0}), 2.0, 0.1, 5);
  EXPECT_TRUE(s.q.all_zero());
  EXPECT_EQ(s.q.size(), 11u);
  EXPECT_EQ(s.t, 2.0);
}

TEST(Rk4, Validation) {
  EXPECT_THROW(rk4_integrate(Sequence(0, {0.1}), 1.0, 0.0, 5), std::invalid_argument);
  EXPECT_THROW(rk4_integrate(Sequence(0, {0.1}), 1.0, 0.1, -1), std::invalid_argument);
  EXPECT_THROW(rk4_integrate(Sequence(4, {0.1}), 1.0, 0.1, 3), std::invalid_argument);
}

TEST(Rk4, PlaneWaveFourthOrder) {
  const double e1 = plane_wave_error(0.1, 1.0);
  const double e2 = plane_wave_error(0.05, 1.0);
  EXPECT_LE(plane_wave_error(1e-3, 1.0), 1e-12);
  EXPECT_GE(std::log2(e1 / e2), 3.9);
}

TEST(Rk4, LandsExactlyOnT) {
  // 0.35 is not a multiple of 0.1; the shortened last step must still
  // reproduce the exact phase.
  const double k = 2 * std::numbers::pi / kRing;
  const double omega = 2 * (1 - kAmp * kAmp) * std::cos(k);
  const LatticeState s = rk4_integrate(plane_wave_initial(), 0.35, 1e-3, 0, Boundary::periodic);
  EXPECT_LE(std::abs(s.q[0] - std::polar(kAmp, omega * 0.35)), 1e-12);
}

TEST(Rk4, Conservation) {
  std::mt19937_64 gen(51);
  const Sequence q0 = oracle::random_sequence(gen, 8, -4, 0.6);
  const LatticeState s = rk4_integrate(q0, 1.0, 1e-3, default_radius(q0, 1.0));
  EXPECT_LE(std::abs(conserved_product(s) - q0.log_szego_product()), 1e-8);
  EXPECT_NEAR(conserved_product({Sequence(0, {0.5}), 0.0, Boundary::zero}), std::log(0.75), 1e-15);
  EXPECT_EQ(conserved_product({Sequence(0, {0.0}), 0.0, Boundary::zero}), 0.0);
}

TEST(Rk4, TimeReversal) {
  std::mt19937_64 gen(52);
  const Sequence q0 = oracle::random_sequence(gen, 5, -2, 0.5);
  const LatticeState fwd = rk4_integrate(q0, 0.5, 1e-3, 30);
  const LatticeState back = rk4_integrate(fwd.q, -0.5, 1e-3, 30);
  for (int n = -30; n <= 30; ++n) EXPECT_LE(std::abs(back.q[n] - q0[n]), 1e-10);
}

TEST(Rk4, ModulusGuard) {
  // A step far too large for this datum pushes a stage outside the disk.
  const Sequence q0(-1, {0.9, 0.0, 0.9});
  EXPECT_THROW(rk4_integrate(q0, 5.0, 5.0, 3), NumericalGuardError);
}

TEST(Picard, ZeroDatum) {
  const LatticeState s = picard_solve(Sequence(0, {0.0}), 0.5, 4);
  EXPECT_TRUE(s.q.all_zero());
}

TEST(Picard, AgreesWithRk4) {
  std::mt19937_64 gen(53);
  const Sequence q0 = oracle::random_sequence(gen, 6, -3, 0.6);
  const int radius = default_radius(q0, 0.5);
  const LatticeState p = picard_solve(q0, 0.5, radius);
  const LatticeState r = rk4_integrate(q0, 0.5, 1e-4, radius);
  double worst = 0.0;
  for (int n = -radius; n <= radius; ++n) worst = std::max(worst, std::abs(p.q[n] - r.q[n]));
  EXPECT_LE(worst, 1e-7);

  const LatticeState back = picard_solve(q0, -0.3, radius);
  const LatticeState back_rk = rk4_integrate(q0, -0.3, 1e-4, radius);
  for (int n = -radius; n <= radius; ++n) EXPECT_LE(std::abs(back.q[n] - back_rk.q[n]), 1e-7);
}

TEST(Picard, FirstIterate) {
  std::mt19937_64 gen(54);
  const Sequence q0 = oracle::random_sequence(gen, 4, -1, 0.6);
  const double t = 1.0 / 24.0;
  const auto first = picard_first_iterate(q0, t, 4);
  const auto f = al_rhs({q0.window(-4, 4), 0.0, Boundary::zero});
  for (int n = -4; n <= 4; ++n) EXPECT_LE(std::abs(first[n + 4] - (q0[n] + t * f[n + 4])), 1e-15);
  EXPECT_THROW(picard_first_iterate(q0, 0.1, 4), std::invalid_argument);
}

TEST(Rk4, WideningTheLatticeIsLocal) {
  std::mt19937_64 gen(55);
  const Sequence q0 = oracle::random_sequence(gen, 11, -5, 0.5);
  const double t = 0.5;
  const cplx wide = rk4_integrate(q0, t, 1e-3, 60).q[0];
  for (int R : {6, 10, 14}) {
    const cplx narrow = rk4_integrate(q0.window(-R, R), t, 1e-3, R).q[0];
    EXPECT_LE(std::abs(narrow - wide), localization_bound_direct(t, 0.5, R, 0) + 1e-12);
  }
}
