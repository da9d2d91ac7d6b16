#ifndef WMOD_INNER_PRODUCT_HPP
#define WMOD_INNER_PRODUCT_HPP

#include "wmod/realization.hpp"

namespace wmod {

/// Weighted pairing sum_p u_p conj(v_p) ||basis_p||^2, linear in the first slot.
std::complex<double> inner_product(const TruncatedModule& m, const SparseVector& u,
                                   const SparseVector& v);

struct AdjointDefectReport {
  double noncompact_max = 0.0;  // |<F_0 e(k), e(l)> + <e(k), E_0 e(l)>| pairs
  double compact_max = 0.0;     // |<F_j e(k), e(l)> - <e(k), E_j e(l)>|, j >= 1
  double diagonal_max = 0.0;    // |Im| of every H_j eigenvalue
  double max_defect = 0.0;
  double tol = 0.0;
  bool formally_unitary = false;
};

/// Measures how far the action sits from the *-relations of the real form
/// (H_j self-adjoint, E_j adjoint to F_j for j >= 1, E_0 adjoint to -F_0)
/// in the weighted pairing. Zero defect over the window is the computational
/// unitarity certificate; an O(1) defect refutes it.
AdjointDefectReport adjoint_defect(const TruncatedModule& m, double tol = 1e-10);

}  // namespace wmod

#endif
