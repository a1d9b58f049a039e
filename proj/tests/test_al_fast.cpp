#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "al_ist/al_fast.hpp"
#include "al_ist/al_reference.hpp"
#include "al_ist/multiplier.hpp"
#include "al_ist/schur.hpp"
#include "oracles.hpp"

using namespace al_ist;

namespace {

cplx reference_at(const Sequence& q0, double t, int site, double h = 1e-3, int radius = 60) {
  return rk4_integrate(q0, t, h, radius).q[site];
}

}  // namespace

TEST(SelectParams, Examples) {
  const SolveParams p = select_params(0.0, 0.5, 1.0);
  EXPECT_EQ(p.N, 6);
  EXPECT_EQ(p.n, 12);
  EXPECT_FALSE(p.reflected);

  const SolveParams q = select_params(1.0, 1e-3, 24.0 / 25.0);
  EXPECT_EQ(q.N, 29);
  EXPECT_EQ(q.n, 58);
  EXPECT_LT(delta(q.n, 1.0), 1.0);
  EXPECT_TRUE(select_params(-1.0, 1e-3, 24.0 / 25.0).reflected);
  EXPECT_EQ(select_params(-1.0, 1e-3, 24.0 / 25.0).N, 29);
}

TEST(SelectParams, Errors) {
  EXPECT_THROW(select_params(1.0, 1.0, 1.0), std::invalid_argument);
  EXPECT_THROW(select_params(1.0, 0.0, 1.0), std::invalid_argument);
  EXPECT_THROW(select_params(1.0, 0.1, 0.0), std::invalid_argument);
  EXPECT_THROW(select_params(1.0, 0.1, 1.5), std::invalid_argument);
  try {
    select_params(1.0, 1e-6, 1e-4);
    FAIL() << "expected InfeasibleParameters";
  } catch (const InfeasibleParameters& e) {
    EXPECT_NE(std::string(e.what()).find("eta"), std::string::npos);
  }
  EXPECT_THROW(select_params(1.0, 1e-6, 0.9, 0, 20), InfeasibleParameters);
}

TEST(Bounds, Formulas) {
  EXPECT_NEAR(localization_bound(1.0, 0.5, 0.0, 3, 3), 8.0, 1e-14);
  EXPECT_NEAR(localization_bound(1.0, 0.5, 0.0, 4, 3), 4.0, 1e-14);
  const double c = stability_constant(24.0 / 25.0, 0.5).value;
  EXPECT_NEAR(localization_bound(24.0 / 25.0, 0.5, 1.0, 20, 0), 4 * std::exp(2.0) * c * std::pow(0.5, 20) / 0.5,
              1e-12);
  EXPECT_NEAR(localization_bound_direct(0.0, 0.5, 2, 2), std::sqrt(2.0) * 0.5 / std::sqrt(0.75), 1e-15);
  EXPECT_NEAR(localization_bound_direct(0.0, 0.5, 2, 2), 0.8165, 1e-4);
  EXPECT_EQ(localization_bound_direct(1.0, 0.5, 5, 0, 0.0), 0.0);
  EXPECT_NEAR(localization_bound_direct(0.1, 0.5, 5, 1, 0.2), 0.5 * std::exp(4.0) * 0.2 * std::pow(0.5, 4), 1e-15);
  EXPECT_THROW(localization_bound(1.0, 0.5, 1.0, 2, 3), std::invalid_argument);

  const double expect = 12 * std::exp(5.0) / std::sqrt(60 * std::numbers::pi) * std::pow(2 * std::numbers::e / 30, 30);
  EXPECT_NEAR(t3_bound(1.0, 1.0, 30, 0), expect, 1e-12 * expect);
  EXPECT_NEAR(t3_bound(1.0, 1.0, 30, 5) / t3_bound(1.0, 1.0, 30, 0), 32.0, 1e-10);
  for (int n = 6; n < 60; ++n) EXPECT_LT(t3_bound(0.9, 1.0, n + 1, 0), t3_bound(0.9, 1.0, n, 0));
  EXPECT_EQ(t3_bound(0.9, 0.0, 10, 0), 0.0);
}

TEST(SolvePoint, ZeroDatum) {
  const PointSolution s = solve_point(Sequence(-2, {0.0, 0.0}), 1.0, 0, 1e-6);
  EXPECT_EQ(s.value, cplx{});
  EXPECT_EQ(s.budget.total, 0.0);
  const auto coeffs = evolved_coefficients(Sequence(0, {0.0}), 1.0, 10, 25);
  for (cplx g : coeffs) EXPECT_EQ(g, cplx{});
}

TEST(SolvePoint, TimeZeroReturnsDatum) {
  std::mt19937_64 gen(61);
  const Sequence q0 = oracle::random_sequence(gen, 7, -3, 0.5);
  for (int n0 = -4; n0 <= 4; ++n0) {
    EXPECT_LE(std::abs(solve_point(q0, 0.0, n0, 1e-6).value - q0[n0]), 1e-6) << n0;
  }
}

TEST(SolvePoint, SingleSiteAgainstReference) {
  const Sequence q0(0, {0.4});
  const PointSolution s = solve_point(q0, 1.0, 0, 1e-6);
  const cplx coarse = reference_at(q0, 1.0, 0);
  const double ref_error = std::abs(coarse - reference_at(q0, 1.0, 0, 5e-4));
  EXPECT_LE(std::abs(s.value - coarse), 1e-6 + ref_error);
  EXPECT_LE(s.budget.total, 1e-6);
  EXPECT_NEAR(s.budget.total, s.budget.localization + s.budget.truncation, 0.0);
}

TEST(SolvePoint, BudgetIsSound) {
  std::mt19937_64 gen(62);
  for (int trial = 0; trial < 4; ++trial) {
    const Sequence q0 = oracle::random_sequence(gen, 4, -2, 0.4);
    ASSERT_GE(std::exp(q0.log_szego_product()), 0.5);
    const double t = 0.25 * (trial + 1);
    const PointSolution s = solve_point(q0, t, 1, 1e-6);
    EXPECT_LE(std::abs(s.value - reference_at(q0, t, 1)), s.budget.total + 1e-10);
  }
}

TEST(SolvePoint, TranslationCovariance) {
  std::mt19937_64 gen(63);
  const Sequence q0 = oracle::random_sequence(gen, 6, -2, 0.5);
  const cplx base = solve_point(q0, 0.7, 1, 1e-6).value;
  for (int s : {-5, 3, 40}) {
    // q0(. + s) moves every entry s sites to the left.
    EXPECT_LE(std::abs(solve_point(q0.shifted(-s), 0.7, 1 - s, 1e-6).value - base), 1e-10) << s;
  }
}

TEST(SolvePoint, TimeReflectionIsExact) {
  std::mt19937_64 gen(64);
  const Sequence q0 = oracle::random_sequence(gen, 5, -2, 0.5);
  const cplx backward = solve_point(q0, -0.6, 0, 1e-6).value;
  const cplx forward = solve_point(q0.conjugated(), 0.6, 0, 1e-6).value;
  EXPECT_EQ(backward, std::conj(forward));
  EXPECT_LE(std::abs(backward - reference_at(q0, -0.6, 0)), 1e-6);
}

TEST(SolvePoint, NegatedDataIsNotATimeReversal) {
  // -q(-t) for data -q0 flips the sign of the vector field, so it does not
  // reproduce the backward flow.
  std::mt19937_64 gen(64);
  const Sequence q0 = oracle::random_sequence(gen, 5, -2, 0.5);
  const cplx negated = -solve_point(q0.negated(), 0.6, 0, 1e-6).value;
  EXPECT_GT(std::abs(negated - reference_at(q0, -0.6, 0)), 1e-2);
}

TEST(SolvePoint, QueryIndexIsN) {
  // The window is shifted so that n0 lands on site N; coefficient n + N
  // carries q(t, n0) and n + N + 1 carries the right neighbour.
  std::mt19937_64 gen(65);
  const Sequence q0 = oracle::random_sequence(gen, 7, -3, 0.5);
  const double t = 0.5;
  const SolveParams p = select_params(t, 1e-6, std::exp(q0.log_szego_product()));
  const Sequence shifted = q0.window(-p.N, p.N).shifted(p.N);
  const auto c = evolved_coefficients(shifted, t, p.n, static_cast<std::size_t>(p.n + p.N + 2));
  const cplx at0 = reference_at(q0, t, 0), at1 = reference_at(q0, t, 1);
  EXPECT_LE(std::abs(c[p.n + p.N] - at0), 1e-6);
  EXPECT_LE(std::abs(c[p.n + p.N + 1] - at1), 1e-6);
  EXPECT_GT(std::abs(c[p.n + p.N + 1] - at0), 1e-3);
}

TEST(SolvePoint, ConvergenceInOrder) {
  std::mt19937_64 gen(66);
  const Sequence q0 = oracle::random_sequence(gen, 5, 0, 0.5);
  const double t = 0.5, eta = std::exp(q0.log_szego_product());
  const int j = 3;
  for (int n = 6; n < 20; ++n) {
    const auto a = evolved_coefficients(q0, t, n, static_cast<std::size_t>(n + j + 1));
    const auto b = evolved_coefficients(q0, t, n + 1, static_cast<std::size_t>(n + j + 2));
    EXPECT_LE(std::abs(a[n + j] - b[n + 1 + j]), order_cauchy_bound(eta, t, n, j)) << n;
  }
}

TEST(SolvePoint, RejectsBadArguments) {
  EXPECT_THROW(solve_point(Sequence(0, {0.1}), 1.0, 0, 1.0), std::invalid_argument);
  EXPECT_THROW(solve_point(Sequence(0, {0.1}), 1.0, 0, 1e-6, 0.0), std::invalid_argument);
  EXPECT_THROW(evolved_coefficients(Sequence(-1, {0.1}), 1.0, 10, 5), std::invalid_argument);
  EXPECT_THROW(evolved_coefficients(Sequence(0, {0.1}), -1.0, 10, 5), std::invalid_argument);
}

TEST(SolveWindow, ZeroDatum) {
  const WindowSolution w = solve_window(Sequence(0, {0.0}), 1.0, 3, 1e-6);
  EXPECT_EQ(w.first_site, 3 - w.params.N / 2);
  EXPECT_EQ(w.values.size(), static_cast<std::size_t>(2 * (w.params.N / 2) + 1));
  for (cplx v : w.values) EXPECT_EQ(v, cplx{});
}

TEST(SolveWindow, SymmetricDatumGivesSymmetricWindow) {
  const Sequence q0(-2, {cplx{0.1, 0.2}, 0.3, cplx{0.0, -0.4}, 0.3, cplx{0.1, 0.2}});
  const WindowSolution w = solve_window(q0, 0.8, 0, 1e-6);
  const std::size_t len = w.values.size();
  for (std::size_t i = 0; i < len; ++i) EXPECT_LE(std::abs(w.values[i] - w.values[len - 1 - i]), 1e-9);
}

TEST(SolveWindow, MatchesReferenceAndPoints) {
  std::mt19937_64 gen(67);
  const Sequence q0 = oracle::random_sequence(gen, 5, -2, 0.5);
  const double t = 0.5;
  const WindowSolution w = solve_window(q0, t, 1, 1e-6);
  const LatticeState ref = rk4_integrate(q0, t, 1e-3, 60);
  for (std::size_t i = 0; i < w.values.size(); ++i) {
    const int site = w.first_site + static_cast<int>(i);
    EXPECT_LE(std::abs(w.values[i] - ref.q[site]), 1e-6 + 1e-6) << site;
  }
  const std::size_t mid = w.values.size() / 2;
  EXPECT_EQ(w.values[mid], solve_point(q0, t, 1, 1e-6).value);
}
