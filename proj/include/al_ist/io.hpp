// Sequence files, CSV tables and reproducible random data.
//
// Sequence document (JSON):
//   {"offset": -2, "values": [[0.1, 0.0], [0.0, -0.25], ...]}
// Numbers are written with 17 significant digits so a write/read cycle is
// bit-exact. Any other top-level field is rejected.

#ifndef AL_IST_IO_HPP
#define AL_IST_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include "al_ist/laurent.hpp"
#include "al_ist/sequence.hpp"

namespace al_ist::io {

/// printf("%.17g")
std::string format_double(double x);

std::string sequence_to_json(const Sequence& q);
/// Throws std::invalid_argument on malformed documents or out-of-disk values.
Sequence sequence_from_json(const std::string& text);

Sequence read_sequence(const std::string& path);
void write_sequence(const std::string& path, const Sequence& q);

/// {"min_deg": k, "coeffs": [[re, im], ...]}
std::string laurent_to_json(const LaurentPoly& p);

/// Uniform double in [0, 1) from the top 53 bits of a 64-bit word.
double unit_uniform(std::uint64_t word);

/// `sites` entries starting at `offset`, each max_modulus * u1 * exp(2 pi i u2)
/// with u1, u2 drawn in that order from std::mt19937_64 seeded with `seed`
/// and mapped by unit_uniform. std::mt19937_64 is fully specified by the
/// C++ standard, so the stream is the same on every conforming platform.
Sequence random_sequence(std::uint64_t seed, int sites, int offset, double max_modulus);

}  // namespace al_ist::io

#endif  // AL_IST_IO_HPP
