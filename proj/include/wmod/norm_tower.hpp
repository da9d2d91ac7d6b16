#ifndef WMOD_NORM_TOWER_HPP
#define WMOD_NORM_TOWER_HPP

#include <memory>

#include "wmod/action.hpp"
#include "wmod/realization.hpp"

namespace wmod {

struct TowerOptions {
  bool real_form = false;  // use {iH_j, X_j, Y_j} instead of {H_j, E_j, F_j}
};

/// Graded sup-norm tower ||u||_{l+1} = max_{A in S u {Id}} ||A u||_l over the
/// generator set S (all nodes). Throws when a required image leaves the window.
double tower_norm(const TruncatedModule& m, const SparseVector& u, int level,
               TowerOptions opts = {});

/// Tower values on basis vectors for the Chevalley set, computed by dynamic
/// programming (every generator maps a basis vector to at most one other).
/// Positions whose value would depend on vectors beyond the window are marked
/// unavailable rather than extrapolated.
class NormTower {
 public:
  NormTower(std::shared_ptr<const TruncatedModule> m, int max_level);

  int max_level() const { return static_cast<int>(val_.size()) - 1; }
  bool available(int pos, int level) const;
  double value(int pos, int level) const;  // throws if unavailable

 private:
  std::shared_ptr<const TruncatedModule> m_;
  std::vector<std::vector<double>> val_;  // [level][pos], NaN = unavailable
};

/// Size of the deformation relative to the tower: the largest ratio
/// |delta coefficient| * ||target||_l / ||source||_l over |k| <= K - level - 1,
/// where the tower is built on the parameter-free base realization. Bounded in
/// K exactly when the deformed operators stay tower-bounded.
double perturbation_bound(int n, std::complex<double> a, int K, int level);

struct BoundednessProfile {
  std::vector<double> values;  // b(L), L = 1..K
  double global_sup = 0.0;
  double last_half_sup = 0.0;  // sup over L > K/2
  double tail_limit = 0.0;     // (Re a + n)^2 / 4
};

/// Level-0 obstruction profile b(L) = L (L+n-2) (mu(L-1)/mu(L) - 1)^2 whose
/// boundedness in L drives the perturbation argument.
BoundednessProfile boundedness_profile(int n, std::complex<double> a, int K);

}  // namespace wmod

#endif
