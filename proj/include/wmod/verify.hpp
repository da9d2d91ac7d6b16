#ifndef WMOD_VERIFY_HPP
#define WMOD_VERIFY_HPP

#include <string>
#include <vector>

#include "wmod/action.hpp"
#include "wmod/realization.hpp"

namespace wmod {

struct WeightSpace {
  std::vector<Scalar> weight;  // (H_0 .. H_{n-1}) eigenvalues
  std::vector<int> positions;  // window positions, ascending
};

struct WeightDecomposition {
  std::vector<WeightSpace> spaces;  // ordered by first occurrence in the window
  int max_multiplicity = 0;
  bool degree_one = false;  // every weight space one-dimensional
};

/// Groups basis vectors by their joint (H_0..H_{n-1}) eigenvalue. Distinct
/// weights of one module differ by integer vectors, so the float merge
/// tolerance (1e-6) sits far below the separation (>= 1).
WeightDecomposition weight_decomposition(const TruncatedModule& m);

enum class OrbitClass { LocallyFinite, Injective, Undetermined };

struct GeneratorOrbitReport {
  GeneratorId g{GenKind::H, 0};
  OrbitClass verdict = OrbitClass::Undetermined;
  int max_steps = 0;  // longest orbit walked before it closed, died, or left
};

struct ActionTypeReport {
  std::vector<GeneratorOrbitReport> generators;
  bool all_locally_finite = false;
};

/// Walks single-generator orbits from every basis vector. An orbit that dies
/// or whose support stops producing new positions (all inside the window) is
/// locally finite; one that exits through the boundary with nonzero
/// coefficients witnesses an injective infinite ladder.
ActionTypeReport action_type(const TruncatedModule& m, int depth = -1);

/// Basis vectors killed by E_i for every i in `raising_js`.
std::vector<int> highest_weight_positions(const TruncatedModule& m,
                                          const std::vector<int>& raising_js);

struct BranchSummand {
  int seed_pos = -1;
  int seed_level = 0;  // |k| of the seed label
  std::vector<int> positions;
  Scalar central_eigenvalue;
  bool central_constant = false;
  int hw_count = 0;  // Levi highest-weight vectors inside the summand
};

struct BranchReport {
  int levi_j = 0;
  std::vector<BranchSummand> summands;
  bool closed = true;          // no summand leaked through the boundary
  bool partition_ok = false;   // summands disjoint and covering
  bool one_per_level = false;  // exactly one summand seeded at each level
  bool distinct_characters = false;
  bool all_simple_profile = false;  // each summand carries exactly one HW vector
};

/// Decomposes the window under the Levi subalgebra obtained by deleting node
/// `levi_j`: finds its highest-weight vectors, closes each under the remaining
/// E_i/F_i, and checks partition, simplicity profile, and the separation of
/// central characters.
BranchReport branch_levi(const TruncatedModule& m, int levi_j);

/// Coefficients c_i of the central element sum_i c_i H_i of the Levi factor
/// obtained by deleting node j: c_i = (i+1)(n-j) for i <= j, (j+1)(n-i) for i >= j.
std::vector<long> central_element_coeffs(int n, int levi_j);

/// Eigenvalue of that central element on the basis vector at pos.
Scalar central_character(const TruncatedModule& m, int levi_j, int pos);

struct FiniteTypeReport {
  int levi_j = 0;
  bool finite_type = false;
  std::vector<int> hw_positions;
  std::string evidence;  // first violated integrality condition, if any
};

/// Necessary finite-type condition: every Levi highest-weight vector must have
/// nonnegative-integer eigenvalues under the H_i of the Levi's semisimple part.
FiniteTypeReport finite_type_check(const TruncatedModule& m, int levi_j);

struct GrowthReport {
  int degree = -1;  // -1 when undetermined
  bool saturated = false;
  double slope = 0.0;
  double fit_residual = 0.0;
  std::vector<long> cumulative_dims;  // of the reachable set, by level
};

/// Growth degree of the cyclic submodule generated from the bottom vector:
/// saturation inside the window certifies degree 0; otherwise a log-log fit of
/// cumulative level dimensions over [N/2, N], rounded to the nearest integer.
GrowthReport gk_growth_degree(const TruncatedModule& m);

}  // namespace wmod

#endif
