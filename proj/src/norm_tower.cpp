#include "wmod/norm_tower.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace wmod {
namespace {

std::vector<GeneratorId> tower_set(int n, bool real_form) {
  std::vector<GeneratorId> s;
  for (int j = 0; j < n; ++j) {
    if (real_form) {
      s.push_back({GenKind::IH, j});
      s.push_back({GenKind::X, j});
      s.push_back({GenKind::Y, j});
    } else {
      s.push_back({GenKind::H, j});
      s.push_back({GenKind::E, j});
      s.push_back({GenKind::F, j});
    }
  }
  return s;
}

}  // namespace

double tower_norm(const TruncatedModule& m, const SparseVector& u, int level, TowerOptions opts) {
  if (level == 0) return m.norm(u);
  double best = tower_norm(m, u, level - 1, opts);  // A = Id
  for (GeneratorId g : tower_set(m.n(), opts.real_form)) {
    SparseVector v = apply(m, g, u);
    if (v.boundary_mass() > u.boundary_mass())
      throw std::runtime_error("tower norm needs vectors beyond the window; enlarge N");
    best = std::max(best, tower_norm(m, v, level - 1, opts));
  }
  return best;
}

NormTower::NormTower(std::shared_ptr<const TruncatedModule> m, int max_level) : m_(std::move(m)) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  int dim = m_->dim();
  val_.assign(max_level + 1, std::vector<double>(dim, nan));
  for (int pos = 0; pos < dim; ++pos) val_[0][pos] = std::exp(0.5 * m_->log_norm_sq(pos));

  std::vector<GeneratorId> gens = tower_set(m_->n(), false);
  for (int l = 1; l <= max_level; ++l) {
    for (int pos = 0; pos < dim; ++pos) {
      double best = val_[l - 1][pos];
      if (std::isnan(best)) continue;
      bool ok = true;
      for (GeneratorId g : gens) {
        for (const ActionTerm& t : m_->action(g, pos)) {
          if (t.target < 0 || std::isnan(val_[l - 1][t.target])) {
            ok = false;
            break;
          }
          best = std::max(best, t.coeff.abs() * val_[l - 1][t.target]);
        }
        if (!ok) break;
      }
      if (ok) val_[l][pos] = best;
    }
  }
}

bool NormTower::available(int pos, int level) const {
  return level >= 0 && level < static_cast<int>(val_.size()) && !std::isnan(val_[level][pos]);
}

double NormTower::value(int pos, int level) const {
  if (!available(pos, level))
    throw std::runtime_error("tower value unavailable at this level; enlarge the window");
  return val_[level][pos];
}

double perturbation_bound(int n, std::complex<double> a, int K, int level) {
  auto base = build_realization(RealizationKind::BASE_P, ModuleParams::make(n, 0.0, K),
                                ScalarMode::Float);
  NormTower tower(base, level);
  ModuleParams dp = ModuleParams::make(n, a, K);

  double worst = 0.0;
  const BasisWindow& win = base->window();
  for (int pos = 0; pos < win.size(); ++pos) {
    const MultiIndex& k = win.label(pos);
    if (degree(k) > K - level - 1) continue;
    auto [minus, plus] = deform_coeffs(n, dp, k, false);
    double denom = tower.value(pos, level);
    if (k[0] > 0) {
      MultiIndex down = k;
      --down[0];
      worst = std::max(worst, minus.abs() * tower.value(win.position(down), level) / denom);
    }
    MultiIndex up = k;
    ++up[0];
    worst = std::max(worst, plus.abs() * tower.value(win.position(up), level) / denom);
  }
  return worst;
}

BoundednessProfile boundedness_profile(int n, std::complex<double> a, int K) {
  if (std::abs(a.imag()) < 1e-12 && std::abs(a.real() - std::round(a.real())) < 1e-12 &&
      std::round(a.real()) >= -0.5)
    throw std::invalid_argument("profile undefined: a is (within 1e-12 of) a nonnegative integer");
  BoundednessProfile p;
  p.values.reserve(K);
  p.tail_limit = (a.real() + n) * (a.real() + n) / 4.0;
  for (int L = 1; L <= K; ++L) {
    double rdown = std::sqrt(std::abs(std::complex<double>(L - 1, 0) - a) / (L + n - 1));
    double b = static_cast<double>(L) * (L + n - 2) * (rdown - 1.0) * (rdown - 1.0);
    p.values.push_back(b);
    p.global_sup = std::max(p.global_sup, b);
    if (L > K / 2) p.last_half_sup = std::max(p.last_half_sup, b);
  }
  return p;
}

}  // namespace wmod
