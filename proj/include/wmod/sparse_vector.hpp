#ifndef WMOD_SPARSE_VECTOR_HPP
#define WMOD_SPARSE_VECTOR_HPP

#include <map>

#include "wmod/multi_index.hpp"
#include "wmod/scalar.hpp"

namespace wmod {

/// Finitely supported coefficient vector over window basis positions, plus a
/// running account of magnitude that truncation has discarded. boundary_mass
/// is nonnegative and nondecreasing under repeated operator application;
/// 0 certifies that no component ever left the window.
class SparseVector {
 public:
  SparseVector() = default;
  explicit SparseVector(bool exact) : exact_(exact) {}

  static SparseVector unit(int position, bool exact);

  bool exact_mode() const { return exact_; }
  bool is_zero() const { return coeffs_.empty(); }
  int support_size() const { return static_cast<int>(coeffs_.size()); }

  const std::map<int, Scalar>& coeffs() const { return coeffs_; }

  /// Adds c to the coefficient at pos; exact zeros are dropped.
  void add(int pos, const Scalar& c);
  /// Records magnitude that fell outside the window.
  void drop(const Scalar& c) { boundary_mass_ += c.abs(); }

  double boundary_mass() const { return boundary_mass_; }
  void carry_boundary(double m) { boundary_mass_ += m; }

  SparseVector operator+(const SparseVector& o) const;
  SparseVector operator-(const SparseVector& o) const;
  SparseVector scaled(const Scalar& c) const;

  /// Largest coefficient modulus (0 for the zero vector).
  double max_abs() const;

 private:
  bool exact_ = false;
  std::map<int, Scalar> coeffs_;
  double boundary_mass_ = 0.0;
};

}  // namespace wmod

#endif
