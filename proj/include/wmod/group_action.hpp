#ifndef WMOD_GROUP_ACTION_HPP
#define WMOD_GROUP_ACTION_HPP

#include <Eigen/Dense>
#include <complex>

#include "wmod/cartan.hpp"
#include "wmod/realization.hpp"

namespace wmod {

/// Matrix of exp(t*A) in the defining (n+1)-dimensional representation, for A
/// one of the real-form generators iH_j, X_j, Y_j.  Coordinates are indexed
/// 0..n, with the noncompact direction sitting in the (0,1) block.
Eigen::MatrixXcd subgroup_matrix(int n, GeneratorId g, double t);

/// Matrix of the induced substitution action on the degree-truncated
/// polynomial window of m: a polynomial P(k) is pulled back along the affine
/// chart map of exp(-t*A) and re-expanded, keeping total degree <= N.
/// Columns are source basis positions, rows are target positions.
Eigen::MatrixXcd mobius_action_matrix(const TruncatedModule& m, GeneratorId g, double t);

/// Matrix of the infinitesimal action of g (an iH/X/Y combination of the
/// module generators) on the window of m.
Eigen::MatrixXcd infinitesimal_matrix(const TruncatedModule& m, GeneratorId g);

struct GlobalInfinitesimalReport {
  GeneratorId g;
  double t = 0;
  int buffer = 0;
  // Max |(global - exp(t * infinitesimal))_{ij}| over rows and columns whose
  // labels have total degree <= N - buffer.
  double max_discrepancy = 0;
  // Max |(rho(t/2)^2 - rho(t))_{ij}| over the same block: the substitution
  // action composes like the group it came from.
  double cocycle_discrepancy = 0;
};

GlobalInfinitesimalReport global_vs_infinitesimal(const TruncatedModule& m, GeneratorId g,
                                                  double t, int buffer);

}  // namespace wmod

#endif
