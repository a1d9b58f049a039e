// Schur's algorithm on rational Schur-class functions.
//
// F_{k+1} is defined by  z F_{k+1} = (F_k - F_k(0)) / (1 - conj(F_k(0)) F_k)
// and the recurrence coefficients are gamma_k = F_k(0).

#ifndef AL_IST_SCHUR_HPP
#define AL_IST_SCHUR_HPP

#include <optional>
#include <vector>

#include "al_ist/laurent.hpp"

namespace al_ist {

/// F = num / den with num analytic and den analytic, den(0) != 0.
struct RationalSchur {
  LaurentPoly num;
  LaurentPoly den = LaurentPoly::constant(1.0);

  RationalSchur() = default;
  /// Throws std::invalid_argument on negative exponents or den(0) == 0.
  RationalSchur(LaurentPoly num, LaurentPoly den);

  cplx at_zero() const { return num.coeff(0) / den.coeff(0); }
  cplx operator()(cplx z) const { return evaluate(num, z) / evaluate(den, z); }
  std::vector<cplx> on_grid(const CircleGrid& grid) const;

  /// max over a unit-circle grid of |num| - |den| - 1e-9 max|den|; the
  /// function is accepted as Schur class when this is <= 0. The grid has
  /// 1024 nodes, or more when the polynomials are longer than that.
  double membership_excess() const;
  /// Throws std::invalid_argument when membership_excess() > 0.
  void require_schur_class() const;
};

/// |gamma| at or above this is treated as a unimodular constant.
inline constexpr double kSchurStopThreshold = 1.0 - 1e-12;

struct SchurStep {
  cplx gamma;
  RationalSchur next;  // equals the input when terminal
  bool terminal = false;
};

/// One step of Schur's algorithm with the result renormalized to den(0) = 1.
SchurStep schur_step(const RationalSchur& f);

struct SchurCoeffs {
  std::vector<cplx> gammas;
  /// Set when the recursion reached a unimodular constant; that value is
  /// not part of `gammas`.
  std::optional<cplx> terminal;
};

SchurCoeffs schur_coeffs(const RationalSchur& f, std::size_t count);

/// F_0, ..., F_count (fewer if the recursion terminates).
std::vector<RationalSchur> schur_iterates(const RationalSchur& f, std::size_t count);

/// Szego quantity prod (1 - |gamma_k|^2), accumulated as a sum of logs.
double eta(const SchurCoeffs& c);
double log_eta(const SchurCoeffs& c);

struct StabilityConstant {
  double value;  // may be +inf
  double log_value;
};

/// C(eta, r) = exp(log(1/eta) (2 + 1/(1 - sqrt(1 - eta))) (4/(1-r)^2 + 1)).
StabilityConstant stability_constant(double eta, double r);

/// (mean over M nodes of r*T of |f|^2)^(1/2).
double l2_norm_circle(const RationalSchur& f, double r, std::size_t grid_size = 1024);

/// ||f - g|| on r*T, same quadrature as l2_norm_circle.
double l2_distance_circle(const RationalSchur& f, const RationalSchur& g, double r,
                          std::size_t grid_size = 1024);

struct BoundCheck {
  double lhs;
  double rhs;
};

/// lhs = sum_{k<m} (max_{r T} |F_k|)^2,  rhs = 4/(1-r)^2 log(1/eta_m).
BoundCheck iterate_energy_bound_check(const RationalSchur& f, double r, std::size_t m);

/// In-place Schur recursion on coefficient buffers for long runs.
///
/// Produces the same recurrence coefficients as repeated schur_step but
/// keeps two flat buffers, grown only when the numerator runs short; steps with gamma == 0
/// are pure index shifts.
class SchurIterator {
 public:
  explicit SchurIterator(const RationalSchur& f, bool parallel = true);

  /// Next recurrence coefficient. After a terminal coefficient has been
  /// returned, terminated() is true and further calls throw.
  cplx next();
  bool terminated() const { return terminated_; }
  std::size_t steps() const { return steps_; }

 private:
  std::vector<cplx> num_;
  std::vector<cplx> den_;
  std::size_t start_ = 0;    // num_[start_] is the current constant term
  std::size_t den_len_ = 0;  // den_ entries past this are zero
  std::size_t steps_ = 0;
  bool terminated_ = false;
  bool parallel_;
};

}  // namespace al_ist

#endif  // AL_IST_SCHUR_HPP
