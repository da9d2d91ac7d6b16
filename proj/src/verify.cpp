#include "wmod/verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <unordered_map>

namespace wmod {
namespace {

std::vector<Scalar> weight_of(const TruncatedModule& m, int pos) {
  std::vector<Scalar> w;
  w.reserve(m.n());
  for (int j = 0; j < m.n(); ++j) w.push_back(m.h_eigenvalue(j, pos));
  return w;
}

bool scalar_is_nonneg_integer(const Scalar& s, double tol = 1e-9) {
  if (s.is_exact()) {
    const ExactScalar& e = s.exact();
    return e.is_gaussian() && is_nonneg_integer(e.as_gaussian());
  }
  std::complex<double> z = s.to_complex();
  double r = std::round(z.real());
  return std::abs(z.imag()) <= tol && std::abs(z.real() - r) <= tol && r >= -0.5;
}

bool scalars_equal(const Scalar& x, const Scalar& y, double tol) {
  if (x.is_exact() && y.is_exact()) return (x - y).is_zero();
  return std::abs(x.to_complex() - y.to_complex()) <= tol;
}

}  // namespace

WeightDecomposition weight_decomposition(const TruncatedModule& m) {
  WeightDecomposition out;
  if (m.dim() == 0) return out;

  std::unordered_map<std::string, int> index;
  std::vector<Scalar> w0 = weight_of(m, 0);
  for (int pos = 0; pos < m.dim(); ++pos) {
    std::vector<Scalar> w = weight_of(m, pos);
    std::string key;
    if (m.exact_mode()) {
      for (const Scalar& c : w) key += c.exact().str() + "|";
    } else {
      // Weights of one module differ by integer vectors; key on the rounded
      // offset from the first weight.
      std::ostringstream os;
      for (int j = 0; j < m.n(); ++j) {
        std::complex<double> d = w[j].to_complex() - w0[j].to_complex();
        os << llround(d.real()) << "," << llround(d.imag()) << "|";
      }
      key = os.str();
    }
    auto it = index.find(key);
    if (it == index.end()) {
      index.emplace(key, static_cast<int>(out.spaces.size()));
      out.spaces.push_back(WeightSpace{std::move(w), {pos}});
    } else {
      out.spaces[it->second].positions.push_back(pos);
    }
  }
  for (const WeightSpace& s : out.spaces)
    out.max_multiplicity = std::max(out.max_multiplicity, static_cast<int>(s.positions.size()));
  out.degree_one = (out.max_multiplicity == 1);
  return out;
}

ActionTypeReport action_type(const TruncatedModule& m, int depth) {
  if (depth < 0) depth = m.N() + 1;
  ActionTypeReport rep;
  rep.all_locally_finite = true;
  for (GeneratorId g : chevalley_generators(m.n())) {
    GeneratorOrbitReport gr;
    gr.g = g;
    bool any_injective = false, any_undetermined = false;
    for (int pos = 0; pos < m.dim(); ++pos) {
      std::set<int> visited{pos};
      SparseVector v = SparseVector::unit(pos, m.exact_mode());
      OrbitClass verdict = OrbitClass::Undetermined;
      for (int t = 1; t <= depth; ++t) {
        v = apply(m, g, v);
        if (v.boundary_mass() > 0.0) {
          verdict = OrbitClass::Injective;  // walked out with nonzero coefficient
          gr.max_steps = std::max(gr.max_steps, t);
          break;
        }
        if (v.is_zero()) {
          verdict = OrbitClass::LocallyFinite;
          gr.max_steps = std::max(gr.max_steps, t);
          break;
        }
        bool new_dir = false;
        for (const auto& [p, c] : v.coeffs()) new_dir |= visited.insert(p).second;
        if (!new_dir) {  // span stopped growing inside the window
          verdict = OrbitClass::LocallyFinite;
          gr.max_steps = std::max(gr.max_steps, t);
          break;
        }
      }
      if (verdict == OrbitClass::Injective) any_injective = true;
      if (verdict == OrbitClass::Undetermined) any_undetermined = true;
    }
    gr.verdict = any_injective ? OrbitClass::Injective
                               : (any_undetermined ? OrbitClass::Undetermined
                                                   : OrbitClass::LocallyFinite);
    if (gr.verdict != OrbitClass::LocallyFinite) rep.all_locally_finite = false;
    rep.generators.push_back(gr);
  }
  return rep;
}

std::vector<int> highest_weight_positions(const TruncatedModule& m,
                                          const std::vector<int>& raising_js) {
  std::vector<int> out;
  for (int pos = 0; pos < m.dim(); ++pos) {
    bool killed = true;
    for (int j : raising_js)
      if (!m.action(GeneratorId{GenKind::E, j}, pos).empty()) {
        killed = false;
        break;
      }
    if (killed) out.push_back(pos);
  }
  return out;
}

std::vector<long> central_element_coeffs(int n, int levi_j) {
  std::vector<long> c(n);
  for (int i = 0; i < n; ++i)
    c[i] = (i <= levi_j) ? static_cast<long>(i + 1) * (n - levi_j)
                         : static_cast<long>(levi_j + 1) * (n - i);
  return c;
}

Scalar central_character(const TruncatedModule& m, int levi_j, int pos) {
  std::vector<long> c = central_element_coeffs(m.n(), levi_j);
  Scalar acc = m.scalar_zero();
  for (int i = 0; i < m.n(); ++i) {
    Scalar w = m.exact_mode() ? Scalar::exact_int(c[i])
                              : Scalar::flt(static_cast<double>(c[i]));
    acc = acc + w * m.h_eigenvalue(i, pos);
  }
  return acc;
}

BranchReport branch_levi(const TruncatedModule& m, int levi_j) {
  int n = m.n();
  if (levi_j < 0 || levi_j >= n) throw std::invalid_argument("levi node out of range");
  BranchReport rep;
  rep.levi_j = levi_j;

  std::vector<int> raising, acting;
  for (int i = 0; i < n; ++i)
    if (i != levi_j) {
      raising.push_back(i);
      acting.push_back(i);
    }
  std::vector<int> seeds = highest_weight_positions(m, raising);
  std::set<int> hw_set(seeds.begin(), seeds.end());

  std::vector<int> owner(m.dim(), -1);
  bool overlap = false;
  for (int seed : seeds) {
    BranchSummand s;
    s.seed_pos = seed;
    s.seed_level = degree(m.window().label(seed));
    // close the seed under the Levi's E_i / F_i
    std::vector<int> frontier{seed};
    std::set<int> members{seed};
    while (!frontier.empty()) {
      int p = frontier.back();
      frontier.pop_back();
      for (int i : acting) {
        for (GenKind kind : {GenKind::E, GenKind::F}) {
          for (const ActionTerm& t : m.action(GeneratorId{kind, i}, p)) {
            if (t.target < 0) {
              rep.closed = false;
              continue;
            }
            if (members.insert(t.target).second) frontier.push_back(t.target);
          }
        }
      }
    }
    s.positions.assign(members.begin(), members.end());
    for (int p : s.positions) {
      if (owner[p] != -1) overlap = true;
      owner[p] = static_cast<int>(rep.summands.size());
      if (hw_set.count(p)) ++s.hw_count;
    }
    s.central_eigenvalue = central_character(m, levi_j, seed);
    s.central_constant = true;
    for (int p : s.positions)
      if (!scalars_equal(central_character(m, levi_j, p), s.central_eigenvalue, 1e-9))
        s.central_constant = false;
    rep.summands.push_back(std::move(s));
  }

  bool covered = true;
  for (int p = 0; p < m.dim(); ++p)
    if (owner[p] == -1) covered = false;
  rep.partition_ok = covered && !overlap;

  std::vector<int> per_level(m.N() + 1, 0);
  for (const BranchSummand& s : rep.summands)
    if (s.seed_level <= m.N()) ++per_level[s.seed_level];
  rep.one_per_level = true;
  for (int c : per_level)
    if (c != 1) rep.one_per_level = false;

  rep.distinct_characters = true;
  for (size_t i = 0; i < rep.summands.size(); ++i)
    for (size_t j = i + 1; j < rep.summands.size(); ++j)
      if (scalars_equal(rep.summands[i].central_eigenvalue, rep.summands[j].central_eigenvalue,
                        1e-6))
        rep.distinct_characters = false;

  rep.all_simple_profile = !rep.summands.empty();
  for (const BranchSummand& s : rep.summands)
    if (s.hw_count != 1) rep.all_simple_profile = false;
  return rep;
}

FiniteTypeReport finite_type_check(const TruncatedModule& m, int levi_j) {
  FiniteTypeReport rep;
  rep.levi_j = levi_j;
  std::vector<int> raising;
  for (int i = 0; i < m.n(); ++i)
    if (i != levi_j) raising.push_back(i);
  rep.hw_positions = highest_weight_positions(m, raising);
  if (rep.hw_positions.empty()) {
    rep.finite_type = false;
    rep.evidence = "no highest-weight vector for this Levi inside the window";
    return rep;
  }
  for (int pos : rep.hw_positions) {
    for (int i : raising) {
      Scalar lam = m.h_eigenvalue(i, pos);
      if (!scalar_is_nonneg_integer(lam)) {
        rep.finite_type = false;
        std::ostringstream os;
        os << "H" << i << " acts on the highest-weight vector at "
           << to_string(m.window().label(pos)) << " by " << lam.str()
           << ", which is not a nonnegative integer";
        rep.evidence = os.str();
        return rep;
      }
    }
  }
  rep.finite_type = true;
  return rep;
}

GrowthReport gk_growth_degree(const TruncatedModule& m) {
  GrowthReport rep;
  // Reachable set of the cyclic submodule generated by the bottom vector.
  std::set<int> reached{0};
  std::vector<int> frontier{0};
  bool leaked = false;
  while (!frontier.empty()) {
    int p = frontier.back();
    frontier.pop_back();
    for (int i = 0; i < m.n(); ++i) {
      for (GenKind kind : {GenKind::E, GenKind::F}) {
        for (const ActionTerm& t : m.action(GeneratorId{kind, i}, p)) {
          if (t.target < 0) {
            leaked = true;
            continue;
          }
          if (reached.insert(t.target).second) frontier.push_back(t.target);
        }
      }
    }
  }

  rep.cumulative_dims.assign(m.N() + 1, 0);
  for (int p : reached) ++rep.cumulative_dims[degree(m.window().label(p))];
  for (int L = 1; L <= m.N(); ++L) rep.cumulative_dims[L] += rep.cumulative_dims[L - 1];

  if (!leaked) {  // the submodule closed inside the window: finite-dimensional
    rep.saturated = true;
    rep.degree = 0;
    return rep;
  }

  int lo = std::max(1, m.N() / 2), hi = m.N();
  if (hi - lo + 1 < 3) return rep;  // window too small for a fit
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int cnt = 0;
  for (int L = lo; L <= hi; ++L) {
    double x = std::log(static_cast<double>(L));
    double y = std::log(static_cast<double>(rep.cumulative_dims[L]));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++cnt;
  }
  double denom = cnt * sxx - sx * sx;
  if (denom <= 0) return rep;
  rep.slope = (cnt * sxy - sx * sy) / denom;
  double alpha = (sy - rep.slope * sx) / cnt;
  for (int L = lo; L <= hi; ++L) {
    double x = std::log(static_cast<double>(L));
    double y = std::log(static_cast<double>(rep.cumulative_dims[L]));
    rep.fit_residual = std::max(rep.fit_residual, std::abs(y - (alpha + rep.slope * x)));
  }
  rep.degree = static_cast<int>(std::lround(rep.slope));
  return rep;
}

}  // namespace wmod
