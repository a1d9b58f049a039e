// Forward nonlinear Fourier transform of finitely supported lattice data.
//
// The transform of q is the ordered product over increasing k of
//   (1 - |q_k|^2)^(-1/2) [[1, conj(q_k) z^-k], [q_k z^k, 1]]
// which has the form [[a, b], [b*, a*]] with p* = conj_flip(p).

#ifndef AL_IST_NLFT_HPP
#define AL_IST_NLFT_HPP

#include <span>
#include <vector>

#include "al_ist/laurent.hpp"
#include "al_ist/schur.hpp"
#include "al_ist/sequence.hpp"

namespace al_ist {

/// [[a, b], [conj_flip(b), conj_flip(a)]]; only a and b are stored.
struct Transfer2x2 {
  LaurentPoly a = LaurentPoly::constant(1.0);
  LaurentPoly b;

  LaurentPoly a_star() const { return conj_flip(a); }
  LaurentPoly b_star() const { return conj_flip(b); }

  /// max over the grid of | |a|^2 - |b|^2 - 1 |.
  double unitarity_residual(const CircleGrid& grid) const;
  /// 4 * (total span) rounded up to a power of two, at least 64.
  CircleGrid default_grid() const;
};

Transfer2x2 operator*(const Transfer2x2& left, const Transfer2x2& right);

/// Single-site factor. Throws std::domain_error if |qk| >= 1.
Transfer2x2 transfer_factor(cplx qk, int k);

/// Balanced binary product tree, levels parallelized across pairs.
Transfer2x2 nlft_forward(const Sequence& q);
/// Same tree, single-threaded.
Transfer2x2 nlft_forward_serial(const Sequence& q);
/// Left-to-right accumulation; O(n^2), kept as a check on the tree.
Transfer2x2 nlft_forward_naive(const Sequence& q);

/// conj(b)/a = conj_flip(b)/a for data supported on k >= 0.
/// Throws std::invalid_argument on any nonzero entry at a negative site.
RationalSchur fc_plus(const Sequence& q);

/// b/a at the nodes of a unit-circle grid.
std::vector<cplx> reflection_grid(const Sequence& q, const CircleGrid& grid);
std::vector<cplx> reflection_grid(const Transfer2x2& t, const CircleGrid& grid);

struct SzegoIdentity {
  double lhs;         // grid mean of log(1 - |b/a|^2)
  double rhs;         // sum log(1 - |q_k|^2)
  double minus_2_log_a0;
};

SzegoIdentity szego_identity_check(const Sequence& q, const CircleGrid& grid);

/// max over the grid of |r_{q(.-n)}(z) - z^-n r_q(z)|.
double shift_check(const Sequence& q, int n, const CircleGrid& grid);

/// Sylvester-Winebrenner distance between two sets of grid samples.
/// Returns +inf when some pseudo-hyperbolic ratio reaches 1 - 1e-14.
double rho_s(std::span<const cplx> h1, std::span<const cplx> h2);

}  // namespace al_ist

#endif  // AL_IST_NLFT_HPP
