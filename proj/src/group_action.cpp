#include "wmod/group_action.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

namespace wmod {
namespace {

// Sparse polynomial in the chart coordinates, truncated by total degree.
using Poly = std::map<MultiIndex, std::complex<double>>;

Poly poly_mul(const Poly& a, const Poly& b, int cap) {
  Poly out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      if (degree(ka) + degree(kb) > cap) continue;
      MultiIndex k(ka.size());
      for (std::size_t i = 0; i < ka.size(); ++i) k[i] = ka[i] + kb[i];
      out[k] += ca * cb;
    }
  return out;
}

}  // namespace

Eigen::MatrixXcd subgroup_matrix(int n, GeneratorId g, double t) {
  if (g.kind != GenKind::IH && g.kind != GenKind::X && g.kind != GenKind::Y)
    throw std::invalid_argument("one-parameter subgroups are indexed by iH, X, Y generators");
  if (g.j < 0 || g.j >= n) throw std::invalid_argument("generator index out of range");
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Identity(n + 1, n + 1);
  const std::complex<double> I(0, 1);
  int r = g.j;  // the subgroup mixes chart rows (r, r+1); j = 0 is the noncompact pair
  if (g.kind == GenKind::IH) {
    M(r, r) = std::exp(-I * t);
    M(r + 1, r + 1) = std::exp(I * t);
  } else if (g.j == 0) {
    double ch = std::cosh(t), sh = std::sinh(t);
    M(0, 0) = ch;
    M(1, 1) = ch;
    if (g.kind == GenKind::X) {
      M(0, 1) = -sh;
      M(1, 0) = -sh;
    } else {
      M(0, 1) = -I * sh;
      M(1, 0) = I * sh;
    }
  } else {
    double c = std::cos(t), s = std::sin(t);
    M(r, r) = c;
    M(r + 1, r + 1) = c;
    if (g.kind == GenKind::X) {
      M(r, r + 1) = -s;
      M(r + 1, r) = s;
    } else {
      M(r, r + 1) = -I * s;
      M(r + 1, r) = -I * s;
    }
  }
  return M;
}

Eigen::MatrixXcd mobius_action_matrix(const TruncatedModule& m, GeneratorId g, double t) {
  const int n = m.n(), N = m.N();
  // The argument of a pulled-back function moves by the inverse group element.
  Eigen::MatrixXcd Minv = subgroup_matrix(n, g, -t);
  const MultiIndex zero(n, 0);

  // u_r(z) = row r of Minv applied to (1, z_1, ..., z_n).
  std::vector<Poly> u(n + 1);
  for (int r = 0; r <= n; ++r) {
    Poly p;
    if (Minv(r, 0) != 0.0) p[zero] = Minv(r, 0);
    for (int j = 1; j <= n; ++j)
      if (Minv(r, j) != 0.0) {
        MultiIndex e(n, 0);
        e[j - 1] = 1;
        p[e] += Minv(r, j);
      }
    u[r] = p;
  }

  std::complex<double> c0 = Minv(0, 0);
  if (std::abs(c0) < 1e-12) throw std::runtime_error("chart denominator degenerates at this parameter");
  Poly w;  // (u_0 - c0)/c0 has no constant term, so its powers raise total degree
  for (const auto& [k, c] : u[0])
    if (degree(k) > 0) w[k] = c / c0;

  std::vector<std::vector<Poly>> upow(n + 1);
  for (int r = 1; r <= n; ++r) {
    upow[r].resize(N + 1);
    upow[r][0] = Poly{{zero, 1.0}};
    for (int e = 1; e <= N; ++e) upow[r][e] = poly_mul(upow[r][e - 1], u[r], N);
  }
  std::vector<Poly> wpow(N + 1);
  wpow[0] = Poly{{zero, 1.0}};
  for (int s = 1; s <= N; ++s) wpow[s] = poly_mul(wpow[s - 1], w, N);

  // (1 + w)^{-(n+L)} as a binomial series; exact within the window.
  std::vector<Poly> denom_series(N + 1);
  for (int L = 0; L <= N; ++L) {
    const int M = n + L;
    Poly series;
    double b = 1.0;  // binom(-M, s)
    for (int s = 0; s <= N; ++s) {
      if (s > 0) b *= double(-M - (s - 1)) / double(s);
      if (wpow[s].empty()) break;
      for (const auto& [k, c] : wpow[s]) series[k] += b * c;
    }
    denom_series[L] = series;
  }

  const BasisWindow& window = m.window();
  Eigen::MatrixXcd G = Eigen::MatrixXcd::Zero(window.size(), window.size());
  for (int src = 0; src < window.size(); ++src) {
    const MultiIndex& k = window.label(src);
    const int L = degree(k);
    Poly prod = denom_series[L];
    for (int coord = 1; coord <= n; ++coord)
      if (k[coord - 1] > 0) prod = poly_mul(prod, upow[coord][k[coord - 1]], N);
    const std::complex<double> scale = std::pow(c0, std::complex<double>(-(n + L), 0));
    for (const auto& [lab, c] : prod) G(window.position(lab), src) += scale * c;
  }
  return G;
}

Eigen::MatrixXcd infinitesimal_matrix(const TruncatedModule& m, GeneratorId g) {
  GeneratorCombo combo = real_form_combo(g);
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(m.dim(), m.dim());
  for (const auto& [gen, coeff] : combo.parts)
    for (int src = 0; src < m.dim(); ++src)
      for (const ActionTerm& term : m.action(gen, src))
        if (term.target >= 0) A(term.target, src) += coeff * term.coeff.to_complex();
  return A;
}

GlobalInfinitesimalReport global_vs_infinitesimal(const TruncatedModule& m, GeneratorId g,
                                                  double t, int buffer) {
  if (buffer < 1 || buffer > m.N()) throw std::invalid_argument("buffer must be in 1..N");
  Eigen::MatrixXcd G = mobius_action_matrix(m, g, t);
  Eigen::MatrixXcd A = infinitesimal_matrix(m, g);
  Eigen::MatrixXcd E = (t * A).exp();
  Eigen::MatrixXcd Gh = mobius_action_matrix(m, g, t / 2);
  Eigen::MatrixXcd C = Gh * Gh;

  GlobalInfinitesimalReport rep;
  rep.g = g;
  rep.t = t;
  rep.buffer = buffer;
  // Interior block: truncation can only disturb entries whose source or target
  // sits within `buffer` levels of the cut.
  const int cut = m.window().cumulative_dimension(m.N() - buffer);
  for (int i = 0; i < cut; ++i)
    for (int j = 0; j < cut; ++j) {
      rep.max_discrepancy = std::max(rep.max_discrepancy, std::abs(G(i, j) - E(i, j)));
      rep.cocycle_discrepancy = std::max(rep.cocycle_discrepancy, std::abs(C(i, j) - G(i, j)));
    }
  return rep;
}

}  // namespace wmod
