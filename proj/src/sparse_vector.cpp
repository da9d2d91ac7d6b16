#include "wmod/sparse_vector.hpp"

#include <algorithm>

namespace wmod {

SparseVector SparseVector::unit(int position, bool exact) {
  SparseVector v(exact);
  v.add(position, exact ? Scalar::exact_int(1) : Scalar::flt(1.0));
  return v;
}

void SparseVector::add(int pos, const Scalar& c) {
  if (c.is_exact() != exact_) throw ModeError("coefficient mode does not match vector mode");
  auto it = coeffs_.find(pos);
  if (it == coeffs_.end()) {
    if (!c.is_zero()) coeffs_.emplace(pos, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

SparseVector SparseVector::operator+(const SparseVector& o) const {
  SparseVector r = *this;
  for (const auto& [pos, c] : o.coeffs_) r.add(pos, c);
  r.boundary_mass_ += o.boundary_mass_;
  return r;
}

SparseVector SparseVector::operator-(const SparseVector& o) const {
  SparseVector r = *this;
  for (const auto& [pos, c] : o.coeffs_) r.add(pos, -c);
  r.boundary_mass_ += o.boundary_mass_;
  return r;
}

SparseVector SparseVector::scaled(const Scalar& c) const {
  SparseVector r(exact_);
  if (c.is_zero()) {
    r.boundary_mass_ = boundary_mass_;
    return r;
  }
  for (const auto& [pos, v] : coeffs_) r.add(pos, v * c);
  r.boundary_mass_ = boundary_mass_ * c.abs();
  return r;
}

double SparseVector::max_abs() const {
  double m = 0.0;
  for (const auto& [pos, c] : coeffs_) m = std::max(m, c.abs());
  return m;
}

}  // namespace wmod
