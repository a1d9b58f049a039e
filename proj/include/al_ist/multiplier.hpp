// Truncated scattering multiplier exp(it(z + 1/z)) and its bounds.
//
//   P_{n,t} = sum_{|k|<=n} i^k J_k(2t) z^k
//   G_{n,t} = (1 - delta) z^n P_{n,t},   delta = t^n e^t / n!

#ifndef AL_IST_MULTIPLIER_HPP
#define AL_IST_MULTIPLIER_HPP

#include "al_ist/laurent.hpp"

namespace al_ist {

/// Bessel function of the first kind by the ascending series, summed in
/// extended precision. Accurate to a few ulps for x up to ~20; past that
/// the alternating series loses digits to cancellation.
double bessel_j(int k, double x);

/// log(t^n e^t / n!), -inf at t = 0.
double log_delta(int n, double t);
double delta(int n, double t);

LaurentPoly p_poly(int n, double t);

struct MultiplierBundle {
  int n;
  double t;
  LaurentPoly g;  // analytic, degree 2n
  double delta;
};

/// Smallest n > t with delta_{n,t} < 1.
int smallest_admissible_order(double t);

/// Throws std::invalid_argument when n <= t or delta_{n,t} >= 1; the
/// message names the smallest admissible order.
MultiplierBundle g_bundle(int n, double t);

/// S_n(t, r) = 6 delta e^(t/r)
double s_bound(int n, double t, double r);
/// 6 delta e^(2t/r) r^-n, a bound on sum_{k>=n} S_k r^-k.
double tail_bound(int n, double t, double r);

}  // namespace al_ist

#endif  // AL_IST_MULTIPLIER_HPP
