#include "wmod/sphere.hpp"

#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

#include "wmod/parallel.hpp"

namespace wmod {
namespace {

constexpr int kChunks = 64;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::complex<double> monomial(const std::vector<std::complex<double>>& z, const MultiIndex& k,
                              const MultiIndex& l) {
  std::complex<double> v(1, 0);
  for (std::size_t j = 0; j < z.size(); ++j) {
    for (int e = 0; e < k[j]; ++e) v *= z[j];
    for (int e = 0; e < l[j]; ++e) v *= std::conj(z[j]);
  }
  return v;
}

}  // namespace

double sphere_surface_area(int n) {
  if (n < 1) throw std::invalid_argument("sphere dimension needs n >= 1");
  return 2.0 * std::pow(std::acos(-1.0), n) / std::tgamma(double(n));
}

double sphere_inner_closed(int n, const MultiIndex& k, const MultiIndex& l) {
  if (static_cast<int>(k.size()) != n || static_cast<int>(l.size()) != n)
    throw std::invalid_argument("multi-index length must equal n");
  if (k != l) return 0.0;
  double log_v = std::lgamma(double(n));  // (n-1)!
  for (int kj : k) log_v += std::lgamma(double(kj) + 1);
  log_v -= std::lgamma(double(degree(k) + n));
  return std::exp(log_v);
}

std::vector<SphereMcEstimate> sphere_inner_mc(
    int n, const std::vector<std::pair<MultiIndex, MultiIndex>>& pairs, long samples,
    std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sphere dimension needs n >= 1");
  if (samples < 1000) throw std::invalid_argument("Monte Carlo needs at least 1000 samples");
  for (const auto& [k, l] : pairs)
    if (static_cast<int>(k.size()) != n || static_cast<int>(l.size()) != n)
      throw std::invalid_argument("multi-index length must equal n");

  const std::size_t np = pairs.size();
  // Per chunk and pair: sums of Re, Im, Re^2, Im^2.
  std::vector<std::vector<std::array<double, 4>>> acc(kChunks,
      std::vector<std::array<double, 4>>(np, {0, 0, 0, 0}));

  parallel_for(kChunks, [&](int c) {
    long chunk_samples = samples / kChunks + (c < samples % kChunks ? 1 : 0);
    std::mt19937_64 rng(splitmix64(seed ^ (0x517cc1b727220a95ULL * (c + 1))));
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<std::complex<double>> z(n);
    auto& slot = acc[c];
    for (long s = 0; s < chunk_samples; ++s) {
      double r2 = 0;
      for (int j = 0; j < n; ++j) {
        double re = gauss(rng), im = gauss(rng);
        z[j] = {re, im};
        r2 += re * re + im * im;
      }
      double inv_r = 1.0 / std::sqrt(r2);
      for (int j = 0; j < n; ++j) z[j] *= inv_r;
      for (std::size_t p = 0; p < np; ++p) {
        std::complex<double> v = monomial(z, pairs[p].first, pairs[p].second);
        slot[p][0] += v.real();
        slot[p][1] += v.imag();
        slot[p][2] += v.real() * v.real();
        slot[p][3] += v.imag() * v.imag();
      }
    }
  });

  std::vector<SphereMcEstimate> out(np);
  for (std::size_t p = 0; p < np; ++p) {
    std::array<double, 4> total{0, 0, 0, 0};
    for (int c = 0; c < kChunks; ++c)
      for (int q = 0; q < 4; ++q) total[q] += acc[c][p][q];
    const double M = double(samples);
    SphereMcEstimate& e = out[p];
    e.samples = samples;
    e.estimate = {total[0] / M, total[1] / M};
    double var_re = std::max(0.0, total[2] - total[0] * total[0] / M) / (M - 1);
    double var_im = std::max(0.0, total[3] - total[1] * total[1] / M) / (M - 1);
    e.std_error = std::sqrt((var_re + var_im) / M);
  }
  return out;
}

}  // namespace wmod
