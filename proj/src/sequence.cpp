#include "al_ist/sequence.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace al_ist {

Sequence::Sequence(int offset, std::vector<cplx> values)
    : offset_(offset), values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const cplx v = values_[i];
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()) || std::abs(v) >= 1.0) {
      throw std::invalid_argument("Sequence: entry at site " +
                                  std::to_string(offset_ + static_cast<int>(i)) +
                                  " is not inside the open unit disk");
    }
  }
}

cplx Sequence::operator[](int site) const {
  if (site < first_site() || site > last_site()) return {};
  return values_[static_cast<std::size_t>(site - offset_)];
}

std::pair<int, int> Sequence::support() const {
  int lo = 0, hi = -1;
  bool found = false;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] == cplx{}) continue;
    const int site = offset_ + static_cast<int>(i);
    if (!found) lo = site;
    hi = site;
    found = true;
  }
  return {lo, hi};
}

bool Sequence::all_zero() const {
  auto [lo, hi] = support();
  return hi < lo;
}

Sequence Sequence::window(int lo, int hi) const {
  Sequence out;
  out.offset_ = lo;
  if (hi >= lo) {
    out.values_.resize(static_cast<std::size_t>(hi - lo + 1));
    for (int k = lo; k <= hi; ++k) out.values_[static_cast<std::size_t>(k - lo)] = (*this)[k];
  }
  return out;
}

Sequence Sequence::shifted(int by) const {
  Sequence out = *this;
  out.offset_ += by;
  return out;
}

Sequence Sequence::reflected() const {
  Sequence out;
  out.offset_ = -last_site();
  out.values_.assign(values_.rbegin(), values_.rend());
  if (values_.empty()) out.offset_ = 0;
  return out;
}

Sequence Sequence::negated() const {
  Sequence out = *this;
  for (cplx& v : out.values_) v = -v;
  return out;
}

Sequence Sequence::conjugated() const {
  Sequence out = *this;
  for (cplx& v : out.values_) v = std::conj(v);
  return out;
}

double Sequence::log_szego_product() const {
  double s = 0.0;
  for (cplx v : values_) s += std::log1p(-std::norm(v));
  return s;
}

double Sequence::l2_outside(int lo, int hi) const {
  double s = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const int site = offset_ + static_cast<int>(i);
    if (site < lo || site > hi) s += std::norm(values_[i]);
  }
  return std::sqrt(s);
}

}  // namespace al_ist
