// Finitely supported complex sequences on the integer lattice.

#ifndef AL_IST_SEQUENCE_HPP
#define AL_IST_SEQUENCE_HPP

#include <complex>
#include <span>
#include <vector>

namespace al_ist {

using cplx = std::complex<double>;

/// values[i] sits at lattice site offset + i; every other site is zero.
/// All stored entries lie strictly inside the unit disk.
class Sequence {
 public:
  Sequence() = default;
  /// Throws std::invalid_argument if any |value| >= 1 or is not finite.
  Sequence(int offset, std::vector<cplx> values);

  int offset() const { return offset_; }
  std::span<const cplx> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  int first_site() const { return offset_; }
  int last_site() const { return offset_ + static_cast<int>(values_.size()) - 1; }

  cplx operator[](int site) const;

  /// Smallest and largest site with a nonzero entry; {0, -1} if none.
  std::pair<int, int> support() const;
  bool all_zero() const;

  /// Entries on [lo, hi], zero-filled outside the stored range.
  Sequence window(int lo, int hi) const;
  /// q(. - by): every entry moves `by` sites to the right.
  Sequence shifted(int by) const;
  /// q(-.)
  Sequence reflected() const;
  Sequence negated() const;
  Sequence conjugated() const;

  /// sum_k log(1 - |q_k|^2)
  double log_szego_product() const;
  /// sqrt(sum_{k outside [lo, hi]} |q_k|^2)
  double l2_outside(int lo, int hi) const;

  friend bool operator==(const Sequence&, const Sequence&) = default;

 private:
  int offset_ = 0;
  std::vector<cplx> values_;
};

}  // namespace al_ist

#endif  // AL_IST_SEQUENCE_HPP
