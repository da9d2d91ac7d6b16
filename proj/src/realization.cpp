#include "wmod/realization.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wmod {
namespace {

mpq_class abs_q(const mpq_class& v) { return v >= 0 ? v : mpq_class(-v); }

// Nonnegative-integer test with the float tolerance used when a arrives
// without an exact representation.
bool float_is_nonneg_integer(std::complex<double> a, double eps = 1e-12) {
  if (std::abs(a.imag()) >= eps) return false;
  double r = std::round(a.real());
  return r >= -0.5 && std::abs(a.real() - r) < eps;
}

}  // namespace

std::string to_string(RealizationKind k) {
  switch (k) {
    case RealizationKind::BASE_P: return "BASE_P";
    case RealizationKind::GENERIC_X: return "GENERIC_X";
    case RealizationKind::DEFORMED_E: return "DEFORMED_E";
    case RealizationKind::FINITE: return "FINITE";
  }
  return "?";
}

RealizationKind parse_kind(const std::string& s) {
  std::string t;
  for (char c : s) t += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (t == "BASE_P") return RealizationKind::BASE_P;
  if (t == "GENERIC_X") return RealizationKind::GENERIC_X;
  if (t == "DEFORMED_E") return RealizationKind::DEFORMED_E;
  if (t == "FINITE") return RealizationKind::FINITE;
  throw std::invalid_argument("unknown realization kind: " + s);
}

ModuleParams ModuleParams::make(int n, const std::string& a_literal, int N) {
  ModuleParams p;
  p.n = n;
  p.N = N;
  p.a_exact = parse_gaussian(a_literal);
  p.a = p.a_exact->to_complex();
  return p;
}

ModuleParams ModuleParams::make(int n, std::complex<double> a, int N) {
  ModuleParams p;
  p.n = n;
  p.N = N;
  p.a = a;
  return p;
}

double mu_log(int n, std::complex<double> a, int l) {
  if (float_is_nonneg_integer(a))
    throw std::invalid_argument("mu undefined: a is (within 1e-12 of) a nonnegative integer");
  double s = 0.0;
  for (int j = 1; j <= l; ++j)
    s += std::log(static_cast<double>(j + n - 1)) - std::log(std::abs(std::complex<double>(j - 1, 0) - a));
  return 0.5 * s;
}

double mu(int n, std::complex<double> a, int l) { return std::exp(mu_log(n, a, l)); }

mpq_class mu_sq_exact(int n, const GaussianRational& a, int l) {
  if (!a.is_real()) throw std::invalid_argument("mu_sq_exact requires real rational a");
  if (is_nonneg_integer(a)) throw std::invalid_argument("mu undefined for nonnegative integer a");
  mpq_class out(1);
  for (int j = 1; j <= l; ++j) {
    mpq_class den = abs_q(mpq_class(j - 1) - a.re);
    out *= mpq_class(j + n - 1) / den;
  }
  return out;
}

std::pair<Scalar, Scalar> deform_coeffs(int n, const ModuleParams& params, const MultiIndex& k,
                                        bool exact) {
  int L = degree(k);
  int k1 = k.empty() ? 0 : k[0];
  if (exact) {
    if (!params.a_exact || !params.a_exact->is_real())
      throw ModeError("exact deformation coefficients need a real rational a");
    const mpq_class& ar = params.a_exact->re;
    ExactScalar minus;  // zero when k1 == 0
    if (k1 > 0) {
      mpq_class dr = abs_q(mpq_class(L - 1) - ar) / mpq_class(L + n - 1);
      minus = ExactScalar::integer(k1) * (ExactScalar::radical(dr) - ExactScalar::integer(1));
    }
    mpq_class ur = mpq_class(L + n) / abs_q(mpq_class(L) - ar);
    ExactScalar plus = ExactScalar::rational(ar - L) * ExactScalar::radical(ur) +
                       ExactScalar::integer(n + L);
    return {Scalar(minus), Scalar(plus)};
  }
  std::complex<double> a = params.a;
  std::complex<double> minus = 0.0;
  if (k1 > 0) {
    double rdown = std::sqrt(std::abs(std::complex<double>(L - 1, 0) - a) / (L + n - 1));
    minus = static_cast<double>(k1) * (rdown - 1.0);
  }
  double rup = std::sqrt((L + n) / std::abs(std::complex<double>(L, 0) - a));
  std::complex<double> plus = (a - static_cast<double>(L)) * rup + static_cast<double>(n + L);
  return {Scalar::flt(minus), Scalar::flt(plus)};
}

TruncatedModule::TruncatedModule(RealizationKind kind, ModuleParams params, bool exact)
    : kind_(kind), params_(std::move(params)), exact_(exact), window_(params_.n, params_.N) {
  // Norm-square weights, chained one level at a time:
  //   nsq(k)/nsq(k - e_m) = k_m / w_L   with L = |k|,
  //   w_L = L+n-1 for the e(k) basis, |L-a-1| for the x(k) basis.
  bool x_basis = (kind_ == RealizationKind::GENERIC_X || kind_ == RealizationKind::FINITE);
  int n = params_.n;
  log_nsq_.assign(window_.size(), 0.0);
  for (int pos = 1; pos < window_.size(); ++pos) {
    const MultiIndex& k = window_.label(pos);
    int L = degree(k);
    int m = 0;
    while (k[m] == 0) ++m;
    MultiIndex pred = k;
    --pred[m];
    double logw = x_basis ? std::log(std::abs(std::complex<double>(L - 1, 0) - params_.a))
                          : std::log(static_cast<double>(L + n - 1));
    log_nsq_[pos] = log_nsq_[window_.position(pred)] + std::log(static_cast<double>(k[m])) - logw;
  }
}

double TruncatedModule::norm_sq(int pos) const { return std::exp(log_nsq_[pos]); }

double TruncatedModule::norm(const SparseVector& v) const {
  double s = 0.0;
  for (const auto& [pos, c] : v.coeffs()) {
    double m = c.abs();
    s += m * m * norm_sq(pos);
  }
  return std::sqrt(s);
}

Scalar TruncatedModule::coeff_from_gaussian(const GaussianRational& q) const {
  if (exact_) return Scalar(ExactScalar::gaussian(q));
  return Scalar::flt(q.to_complex());
}

// Monomial action of a single Chevalley generator: at most one image term.
ActionTerms TruncatedModule::chevalley_terms(GeneratorId g, const MultiIndex& k) const {
  ActionTerms out;
  int n = params_.n;
  int L = degree(k);
  bool deformed = (kind_ == RealizationKind::DEFORMED_E);
  auto a_ex = [&]() -> GaussianRational { return *params_.a_exact; };

  auto emit = [&](MultiIndex label, Scalar c) {
    int pos = window_.position(label);
    out.push_back(ActionTerm{pos, std::move(label), std::move(c)});
  };

  switch (g.kind) {
    case GenKind::H: {
      if (g.j == 0) {
        // Eigenvalue a - k_1 - |k|; BASE_P stores a = -n, and the deformed
        // operator H_0 + (n+a)Id lands on the same expression.
        if (exact_) {
          GaussianRational c = a_ex() - GaussianRational{mpq_class(k[0] + L), 0};
          if (!c.is_zero()) emit(k, Scalar(ExactScalar::gaussian(c)));
        } else {
          std::complex<double> c = params_.a - static_cast<double>(k[0] + L);
          if (c != 0.0) emit(k, Scalar::flt(c));
        }
      } else {
        int c = k[g.j - 1] - k[g.j];
        if (c != 0) emit(k, exact_ ? Scalar::exact_int(c) : Scalar::flt(c));
      }
      break;
    }
    case GenKind::E: {
      if (g.j == 0) {
        int k1 = k[0];
        if (k1 == 0) break;
        MultiIndex t = k;
        --t[0];
        if (!deformed) {
          emit(std::move(t), exact_ ? Scalar::exact_int(k1) : Scalar::flt(k1));
        } else if (exact_) {
          mpq_class dr = abs_q(mpq_class(L - 1) - a_ex().re) / mpq_class(L + n - 1);
          emit(std::move(t), Scalar(ExactScalar::integer(k1) * ExactScalar::radical(dr)));
        } else {
          double r = std::sqrt(std::abs(std::complex<double>(L - 1, 0) - params_.a) / (L + n - 1));
          emit(std::move(t), Scalar::flt(static_cast<double>(k1) * r));
        }
      } else {
        int c = k[g.j];
        if (c == 0) break;
        MultiIndex t = k;
        --t[g.j];
        ++t[g.j - 1];
        emit(std::move(t), exact_ ? Scalar::exact_int(c) : Scalar::flt(c));
      }
      break;
    }
    case GenKind::F: {
      if (g.j == 0) {
        MultiIndex t = k;
        ++t[0];
        if (!deformed) {
          if (exact_) {
            GaussianRational c = a_ex() - GaussianRational{mpq_class(L), 0};
            if (!c.is_zero()) emit(std::move(t), Scalar(ExactScalar::gaussian(c)));
          } else {
            std::complex<double> c = params_.a - static_cast<double>(L);
            if (c != 0.0) emit(std::move(t), Scalar::flt(c));
          }
        } else if (exact_) {
          mpq_class ur = mpq_class(L + n) / abs_q(mpq_class(L) - a_ex().re);
          emit(std::move(t),
               Scalar(ExactScalar::rational(a_ex().re - L) * ExactScalar::radical(ur)));
        } else {
          double r = std::sqrt((L + n) / std::abs(std::complex<double>(L, 0) - params_.a));
          emit(std::move(t), Scalar::flt((params_.a - static_cast<double>(L)) * r));
        }
      } else {
        int c = k[g.j - 1];
        if (c == 0) break;
        MultiIndex t = k;
        --t[g.j - 1];
        ++t[g.j];
        emit(std::move(t), exact_ ? Scalar::exact_int(c) : Scalar::flt(c));
      }
      break;
    }
    default:
      throw std::logic_error("chevalley_terms expects H/E/F");
  }
  return out;
}

ActionTerms TruncatedModule::compute_terms(GeneratorId g, int pos) const {
  const MultiIndex& k = window_.label(pos);
  if (g.kind == GenKind::H || g.kind == GenKind::E || g.kind == GenKind::F)
    return chevalley_terms(g, k);

  // Real-form element: accumulate the defining combination over H/E/F.
  GeneratorCombo combo = real_form_combo(g);
  std::map<MultiIndex, Scalar> acc;
  for (const auto& [cg, z] : combo.parts) {
    // Combo coefficients are Gaussian integers; mpq_class(double) is exact.
    Scalar w = exact_ ? Scalar(ExactScalar::gaussian({mpq_class(z.real()), mpq_class(z.imag())}))
                      : Scalar::flt(z);
    for (const ActionTerm& t : chevalley_terms(cg, k)) {
      Scalar v = w * t.coeff;
      auto it = acc.find(t.target_label);
      if (it == acc.end())
        acc.emplace(t.target_label, std::move(v));
      else
        it->second = it->second + v;
    }
  }
  ActionTerms out;
  for (auto& [label, c] : acc) {
    if (exact_ && c.is_zero()) continue;
    out.push_back(ActionTerm{window_.position(label), label, std::move(c)});
  }
  return out;
}

const ActionTerms& TruncatedModule::action(GeneratorId g, int pos) const {
  int key = static_cast<int>(g.kind) * 64 + g.j;
  std::shared_ptr<std::vector<ActionTerms>> table;
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) table = it->second;
  }
  if (!table) {
    auto fresh = std::make_shared<std::vector<ActionTerms>>();
    fresh->reserve(window_.size());
    for (int p = 0; p < window_.size(); ++p) fresh->push_back(compute_terms(g, p));
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto [it, inserted] = cache_.emplace(key, fresh);
    table = it->second;  // first publisher wins
  }
  return (*table)[pos];
}

Scalar TruncatedModule::h_eigenvalue(int j, int pos) const {
  ActionTerms t = chevalley_terms(GeneratorId{GenKind::H, j}, window_.label(pos));
  if (t.empty()) return scalar_zero();
  return t[0].coeff;
}

std::shared_ptr<TruncatedModule> build_realization(RealizationKind kind, ModuleParams params,
                                                   ScalarMode mode) {
  if (params.n < 1) throw std::invalid_argument("rank parameter n must be >= 1");
  if (params.N < 0) throw std::invalid_argument("window size N must be >= 0");

  switch (kind) {
    case RealizationKind::BASE_P:
      params.a_exact = GaussianRational{mpq_class(-params.n), 0};
      params.a = std::complex<double>(-params.n, 0);
      break;
    case RealizationKind::FINITE: {
      if (!params.a_exact || !is_nonneg_integer(*params.a_exact))
        throw std::invalid_argument(
            "FINITE realization requires a given exactly as an integer m >= 0");
      long m = mpz_class(params.a_exact->re.get_num()).get_si();
      if (params.N != m)
        throw std::invalid_argument("FINITE realization requires window N == a (= " +
                                    std::to_string(m) + ")");
      break;
    }
    case RealizationKind::GENERIC_X:
    case RealizationKind::DEFORMED_E: {
      if (params.a_exact) {
        if (is_nonneg_integer(*params.a_exact))
          throw std::invalid_argument(
              "a is a nonnegative integer: this family closes on |k| <= a; use FINITE");
      } else if (float_is_nonneg_integer(params.a)) {
        throw std::invalid_argument(
            "a lies within 1e-12 of a nonnegative integer; give it exactly (FINITE) or move it");
      }
      break;
    }
  }

  bool exact_possible =
      params.a_exact.has_value() &&
      (kind != RealizationKind::DEFORMED_E || params.a_exact->is_real());
  bool exact;
  switch (mode) {
    case ScalarMode::Auto: exact = exact_possible; break;
    case ScalarMode::Exact:
      if (!exact_possible)
        throw ModeError(params.a_exact
                            ? "exact mode unavailable: deformed coefficients at non-real a need "
                              "nested radicals outside the supported scalar field"
                            : "exact mode unavailable: a was not given exactly");
      exact = true;
      break;
    case ScalarMode::Float: exact = false; break;
    default: exact = exact_possible;
  }
  return std::make_shared<TruncatedModule>(kind, std::move(params), exact);
}

ChangeOfBasisResult change_of_basis_defect(ModuleParams params, ScalarMode mode) {
  auto dm = build_realization(RealizationKind::DEFORMED_E, params, mode);
  auto bm = build_realization(RealizationKind::GENERIC_X, params,
                              dm->exact_mode() ? ScalarMode::Exact : ScalarMode::Float);
  bool exact = dm->exact_mode();
  int n = params.n, N = params.N;

  ChangeOfBasisResult res;
  res.exact_zero = exact;
  const BasisWindow& win = dm->window();

  for (int pos = 0; pos < win.size(); ++pos) {
    const MultiIndex& k = win.label(pos);
    int Lsrc = degree(k);
    if (Lsrc > N - 1) continue;  // keep every image inside the window
    for (GeneratorId g : chevalley_generators(n)) {
      std::map<MultiIndex, Scalar> bmap;
      for (const ActionTerm& t : bm->action(g, pos)) bmap.emplace(t.target_label, t.coeff);

      std::map<MultiIndex, Scalar> dmap;
      for (const ActionTerm& t : dm->action(g, pos)) {
        // Transport through x(k) = mu(|k|) e(k): the coefficient picks up
        // mu(|source|)/mu(|target|).
        int Ltgt = degree(t.target_label);
        Scalar transported;
        if (exact) {
          mpq_class ratio_sq = mu_sq_exact(n, *dm->params().a_exact, Lsrc) /
                               mu_sq_exact(n, *dm->params().a_exact, Ltgt);
          transported = t.coeff * Scalar(ExactScalar::radical(ratio_sq));
        } else {
          double r = std::exp(mu_log(n, params.a, Lsrc) - mu_log(n, params.a, Ltgt));
          transported = t.coeff * Scalar::flt(r);
        }
        dmap.emplace(t.target_label, std::move(transported));
      }

      auto consider = [&](const MultiIndex& label, const Scalar* dv, const Scalar* bv) {
        double ref = bv ? bv->abs() : 0.0;
        double diff;
        if (dv && bv) {
          Scalar d = *dv - *bv;
          if (exact && d.is_zero()) return;
          diff = d.abs();
        } else {
          diff = dv ? dv->abs() : ref;
          if (diff == 0.0) return;
        }
        if (exact) res.exact_zero = false;
        double rel = diff / std::max(1.0, ref);
        if (rel > res.max_defect) {
          res.max_defect = rel;
          res.worst_generator = g;
          res.worst_label = k;
        }
      };
      for (const auto& [label, dv] : dmap) {
        auto it = bmap.find(label);
        consider(label, &dv, it == bmap.end() ? nullptr : &it->second);
      }
      for (const auto& [label, bv] : bmap)
        if (!dmap.count(label)) consider(label, nullptr, &bv);
    }
  }
  return res;
}

ActionTableCoo action_table_coo(const TruncatedModule& m, GeneratorId g) {
  ActionTableCoo coo;
  for (int pos = 0; pos < m.dim(); ++pos) {
    for (const ActionTerm& t : m.action(g, pos)) {
      if (t.target < 0)
        ++coo.dropped;
      else
        coo.entries.emplace_back(t.target, pos, t.coeff.to_complex());
    }
  }
  return coo;
}

}  // namespace wmod
