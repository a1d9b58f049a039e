// Direct time integration of the defocusing Ablowitz-Ladik lattice
//   dq_n/dt = i (1 - |q_n|^2)(q_{n-1} + q_{n+1})
// on a truncated lattice. This is the independent check on the
// scattering solver.

#ifndef AL_IST_AL_REFERENCE_HPP
#define AL_IST_AL_REFERENCE_HPP

#include <vector>

#include "al_ist/errors.hpp"
#include "al_ist/sequence.hpp"

namespace al_ist {

enum class Boundary { zero, periodic };

/// Zero boundary: q lives on the stored sites, zero elsewhere.
/// Periodic boundary: the stored sites form a ring.
struct LatticeState {
  Sequence q;
  double t = 0.0;
  Boundary boundary = Boundary::zero;
};

std::vector<cplx> al_rhs(const LatticeState& s);

/// Support radius of q0 plus ceil(10 (1 + |t|)).
int default_radius(const Sequence& q0, double t);

/// Classical RK4 to time t with steps of h (the last one shortened).
///
/// With Boundary::zero the lattice is [-radius, radius] and q0 must be
/// supported inside it. With Boundary::periodic the ring is exactly the
/// stored entries of q0 and radius is ignored. Throws NumericalGuardError
/// if any stage reaches |q| >= 1 - 1e-12.
LatticeState rk4_integrate(const Sequence& q0, double t, double h, int radius,
                           Boundary boundary = Boundary::zero);

/// Picard iteration for the integral form on sub-intervals of length at
/// most 1/12, each iterated to a residual of 1e-12. Integrals use a
/// composite Simpson rule on a fixed mesh. Zero boundary on
/// [-radius, radius]; t may be negative.
LatticeState picard_solve(const Sequence& q0, double t, int radius);

/// Mesh intervals per Picard sub-interval.
inline constexpr int kPicardMesh = 64;

/// First Picard iterate from the constant start u = q0 on [0, t]:
/// q0 + t F(q0) at the endpoint.
std::vector<cplx> picard_first_iterate(const Sequence& q0, double t, int radius);

/// sum_n log(1 - |q_n|^2); conserved by the flow.
double conserved_product(const LatticeState& s);

}  // namespace al_ist

#endif  // AL_IST_AL_REFERENCE_HPP
