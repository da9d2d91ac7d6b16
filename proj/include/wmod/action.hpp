#ifndef WMOD_ACTION_HPP
#define WMOD_ACTION_HPP

#include <string>
#include <vector>

#include "wmod/realization.hpp"

namespace wmod {

/// g.v with truncation loss recorded in the result's boundary_mass.
SparseVector apply(const TruncatedModule& m, GeneratorId g, const SparseVector& v);
SparseVector apply(const TruncatedModule& m, const GeneratorCombo& combo, const SparseVector& v);
/// word.back() acts first.
SparseVector apply_word(const TruncatedModule& m, const std::vector<GeneratorId>& word,
                        const SparseVector& v);

/// max coefficient modulus of ([g1,g2] - expected).v over basis vectors v with
/// |k| <= N - margin; margin 2 keeps every intermediate inside the window.
double commutator_defect(const TruncatedModule& m, GeneratorId g1, GeneratorId g2, int margin = 2);

/// ad(g_i)^2 g_j word defect (adjacent nodes, type A), margin 3.
double serre_defect(const TruncatedModule& m, GenKind kind, int i, int j, int margin = 3);

struct RelationClassResult {
  std::string name;
  int pairs = 0;
  double max_defect = 0.0;
  bool exact_all_zero = false;  // meaningful only in exact mode
};

struct RelationSuiteResult {
  std::vector<RelationClassResult> classes;
  double max_defect = 0.0;
  bool exact_mode = false;
  bool exact_all_zero = false;
  double tol = 0.0;
  bool pass = false;
};

/// Sweeps the defining relations (Cartan commutativity, weights of raising and
/// lowering generators, [E_i,F_j] = delta_ij H_i, commuting non-adjacent pairs,
/// Serre words) over the interior of the window. Requires N >= 4.
RelationSuiteResult verify_relations(const TruncatedModule& m, double tol);

}  // namespace wmod

#endif
