#ifndef AL_IST_ERRORS_HPP
#define AL_IST_ERRORS_HPP

#include <stdexcept>

namespace al_ist {

/// A numerical guard tripped: modulus bound, contraction check, or an
/// unexpected end of the Schur recursion.
class NumericalGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested accuracy cannot be met within the configured window cap.
class InfeasibleParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace al_ist

#endif  // AL_IST_ERRORS_HPP
