// Thin wrapper over FFTW for the two transforms the library needs.

#ifndef AL_IST_FFT_HPP
#define AL_IST_FFT_HPP

#include <complex>
#include <span>
#include <vector>

namespace al_ist::fft {

/// Linear convolution of a and b by zero-padded FFT; result has
/// a.size() + b.size() - 1 entries.
std::vector<std::complex<double>> convolve(std::span<const std::complex<double>> a,
                                           std::span<const std::complex<double>> b);

/// In place: x[m] <- sum_k x[k] exp(+2 pi i k m / M). Unnormalized.
void sum_positive_exponent(std::vector<std::complex<double>>& x);

}  // namespace al_ist::fft

#endif  // AL_IST_FFT_HPP
