// Data-parallel inner loops of the library.
//
// Each kernel exists twice with identical signatures: `serial` is the
// straightforward reference used by the tests, `parallel` is the OpenMP
// version the library calls. Both must agree to rounding.

#ifndef AL_IST_KERNELS_HPP
#define AL_IST_KERNELS_HPP

#include <complex>
#include <span>
#include <vector>

namespace al_ist::kernels {

using cplx = std::complex<double>;

/// Caps OpenMP worker count from AL_IST_THREADS when it is set to a
/// positive integer. Returns the cap in effect (0 when unset).
int configure_threads_from_env();

namespace serial {

std::vector<cplx> convolve(std::span<const cplx> a, std::span<const cplx> b);

/// One Schur step on coefficient buffers, in place.
///
/// `num` starts at the current constant term and `den` is normalized to
/// den[0] == 1. For i >= 1:
///   num[i] <- (num[i] - gamma * den[i]) * scale
///   den[i] <- (den[i] - conj(gamma) * num[i]) * scale
/// using the old values on the right. Entries past the end of either span
/// read as zero. den[0] is left untouched; num[0] becomes garbage and the
/// caller drops it.
void schur_sweep(std::span<cplx> num, std::span<cplx> den, cplx gamma, double scale);

/// Ablowitz-Ladik vector field i (1 - |q_n|^2)(q_{n-1} + q_{n+1}).
/// Zero boundary treats q outside the span as 0; periodic wraps.
void al_rhs(std::span<const cplx> q, bool periodic, std::span<cplx> out);

/// Folds coefficients c_k of z^(min_deg + k) into M bins by exponent mod M
/// after scaling by radius^exponent.
std::vector<cplx> fold_scaled(std::span<const cplx> coeffs, int min_deg, double radius,
                              std::size_t bins);

}  // namespace serial

namespace parallel {

std::vector<cplx> convolve(std::span<const cplx> a, std::span<const cplx> b);
void schur_sweep(std::span<cplx> num, std::span<cplx> den, cplx gamma, double scale);
void al_rhs(std::span<const cplx> q, bool periodic, std::span<cplx> out);
std::vector<cplx> fold_scaled(std::span<const cplx> coeffs, int min_deg, double radius,
                              std::size_t bins);

}  // namespace parallel

}  // namespace al_ist::kernels

#endif  // AL_IST_KERNELS_HPP
