// Scattering solver for the Ablowitz-Ladik lattice with certified error
// budgets.
//
// Pipeline for a query (q0, t, n0, eps):
//   1. choose the half-width N and multiplier order n = 2N from eps, t and
//      the Szego lower bound eta;
//   2. cut q0 to [n0 - N, n0 + N] and shift it onto [0, 2N];
//   3. form the Schur function G_{n,t} * conj(b)/a of the shifted data;
//   4. run Schur's algorithm; coefficient n + N is the answer at n0.

#ifndef AL_IST_AL_FAST_HPP
#define AL_IST_AL_FAST_HPP

#include <optional>
#include <vector>

#include "al_ist/errors.hpp"
#include "al_ist/sequence.hpp"

namespace al_ist {

inline constexpr int kDefaultWindowCap = 1'000'000;

struct SolveParams {
  int N = 0;  // window half-width
  int n = 0;  // multiplier order, 2N
  double eps = 0.0;
  double eta = 1.0;
  double t = 0.0;  // as requested; the pipeline runs at |t|
  int n0 = 0;
  bool reflected = false;  // t < 0: q(t) = conj of the solution at -t for data conj(q0)
  double log_stability = 0.0;  // log C(eta, 1/2)
};

struct ErrorBudget {
  double localization = 0.0;
  double truncation = 0.0;
  double total = 0.0;
};

/// N = 5 + floor(4e|t| + log2(C(eta, 1/2) / eps)), n = 2N. Throws
/// std::invalid_argument for eps outside (0, 1) or eta outside (0, 1], and
/// InfeasibleParameters when N would exceed `window_cap`.
SolveParams select_params(double t, double eps, double eta, int n0 = 0,
                          int window_cap = kDefaultWindowCap);

/// 4 e^(t/r) C(eta, r) r^(N - |j|) / (1 - r)
double localization_bound(double eta, double r, double t, int N, int j);
/// sqrt(2) r e^(10t/r^2) r^(N-|j|) / sqrt(1 - r^2), or with the l2 tail of
/// the data outside the window: r e^(10t/r^2) tail r^(N-|j|).
double localization_bound_direct(double t, double r, int N, int j,
                                 std::optional<double> l2tail = std::nullopt);
/// 2^j C(eta, 1/2) 12 e^(5t) / sqrt(2 pi n) (2et/n)^n
double t3_bound(double eta, double t, int n, int j);
/// 6 C(eta, 1/2) delta_{n,t} e^(4t) 2^(n+j+1): bound on |q_n(t,j) - q_{n'}(t,j)|, n' > n.
double order_cauchy_bound(double eta, double t, int n, int j);

/// Recurrence coefficients gamma_0 .. gamma_{count-1} of G_{n,t} conj(b)/a
/// for data supported on sites >= 0; gamma_{n+j} approximates q(t, j).
/// Requires t >= 0.
std::vector<cplx> evolved_coefficients(const Sequence& q_plus, double t, int n, std::size_t count);

struct PointSolution {
  cplx value;
  ErrorBudget budget;
  SolveParams params;
};

/// Throws std::invalid_argument for bad eps/eta, InfeasibleParameters when
/// the window would be too large.
PointSolution solve_point(const Sequence& q0, double t, int n0, double eps,
                          std::optional<double> eta = std::nullopt);

struct WindowSolution {
  int first_site = 0;
  std::vector<cplx> values;  // sites first_site, first_site + 1, ...
  std::vector<ErrorBudget> budgets;
  SolveParams params;
};

/// Approximation on [n0 - N/2, n0 + N/2]; the left half comes from the
/// forward pass, the right half from a second pass on the mirrored data.
WindowSolution solve_window(const Sequence& q0, double t, int n0, double eps,
                            std::optional<double> eta = std::nullopt);

}  // namespace al_ist

#endif  // AL_IST_AL_FAST_HPP
