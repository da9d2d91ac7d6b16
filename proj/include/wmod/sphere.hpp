#ifndef WMOD_SPHERE_HPP
#define WMOD_SPHERE_HPP

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "wmod/multi_index.hpp"

namespace wmod {

/// Surface area of the unit sphere S^{2n-1} in C^n: 2 pi^n / (n-1)!.
double sphere_surface_area(int n);

/// Normalized-measure monomial pairing on S^{2n-1}:
/// integral of z^k conj(z)^l is delta_{kl} * k! (n-1)! / (|k|+n-1)!.
double sphere_inner_closed(int n, const MultiIndex& k, const MultiIndex& l);

struct SphereMcEstimate {
  std::complex<double> estimate;
  double std_error = 0;  // combined standard error of the two components
  long samples = 0;
};

/// Monte Carlo estimates of the normalized pairings for all requested pairs in
/// one pass over the samples.  Points come from normalizing 2n-dimensional
/// Gaussian draws; the stream splits into 64 independently seeded substreams,
/// so the result depends only on (n, pairs, samples, seed), not thread count.
std::vector<SphereMcEstimate> sphere_inner_mc(
    int n, const std::vector<std::pair<MultiIndex, MultiIndex>>& pairs, long samples,
    std::uint64_t seed);

}  // namespace wmod

#endif
