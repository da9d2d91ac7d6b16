#ifndef WMOD_REALIZATION_HPP
#define WMOD_REALIZATION_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>

#include "wmod/cartan.hpp"
#include "wmod/multi_index.hpp"
#include "wmod/scalar.hpp"
#include "wmod/sparse_vector.hpp"

namespace wmod {

/// Families realized on a truncated basis:
///   BASE_P     - monomial basis P(k), parameter-free (equals GENERIC_X at a=-n)
///   GENERIC_X      - x(k) basis with free parameter a (not a nonnegative integer)
///   DEFORMED_E - e(k) basis carrying the mu-deformed operators for the same a
///   FINITE     - x(k) with a = m in Z_{>=0}, closed window |k| <= m
enum class RealizationKind { BASE_P, GENERIC_X, DEFORMED_E, FINITE };

std::string to_string(RealizationKind k);
RealizationKind parse_kind(const std::string& s);

enum class ScalarMode { Auto, Exact, Float };

struct ModuleParams {
  int n = 1;
  int N = 0;
  std::complex<double> a{0.0, 0.0};
  std::optional<GaussianRational> a_exact;  // set when a was given exactly

  static ModuleParams make(int n, const std::string& a_literal, int N);
  static ModuleParams make(int n, std::complex<double> a, int N);
};

struct ActionTerm {
  int target = -1;  // window position, -1 when the image fell outside
  MultiIndex target_label;
  Scalar coeff;
};
using ActionTerms = std::vector<ActionTerm>;

/// One realized module on the window {|k| <= N}: basis order, norm weights
/// (stored as log||.||^2), and the generator action. Arithmetic mode (exact or
/// float) is fixed at construction.
class TruncatedModule {
 public:
  TruncatedModule(RealizationKind kind, ModuleParams params, bool exact);

  RealizationKind kind() const { return kind_; }
  const ModuleParams& params() const { return params_; }
  int n() const { return params_.n; }
  int N() const { return params_.N; }
  bool exact_mode() const { return exact_; }
  const BasisWindow& window() const { return window_; }
  int dim() const { return window_.size(); }

  double log_norm_sq(int pos) const { return log_nsq_[pos]; }
  double norm_sq(int pos) const;

  /// Action of g on basis vector at pos (cached per generator).
  const ActionTerms& action(GeneratorId g, int pos) const;

  /// Diagonal eigenvalue of H_j on the basis vector at pos.
  Scalar h_eigenvalue(int j, int pos) const;

  /// Weighted Hilbert norm sqrt(sum |v_k|^2 ||basis_k||^2).
  double norm(const SparseVector& v) const;

  Scalar scalar_zero() const { return exact_ ? Scalar(ExactScalar{}) : Scalar::flt(0.0); }

 private:
  ActionTerms compute_terms(GeneratorId g, int pos) const;
  ActionTerms chevalley_terms(GeneratorId g, const MultiIndex& k) const;
  Scalar coeff_from_gaussian(const GaussianRational& q) const;

  RealizationKind kind_;
  ModuleParams params_;
  bool exact_;
  BasisWindow window_;
  std::vector<double> log_nsq_;

  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<int, std::shared_ptr<std::vector<ActionTerms>>> cache_;
};

/// Builds a realization, selecting exact arithmetic when the parameter allows
/// it (Gaussian-rational a; real rational for DEFORMED_E) unless overridden.
std::shared_ptr<TruncatedModule> build_realization(RealizationKind kind, ModuleParams params,
                                                   ScalarMode mode = ScalarMode::Auto);

/// mu(l) = sqrt(prod_{j=1..l} (j+n-1)/|j-a-1|); requires a not in Z_{>=0}.
double mu(int n, std::complex<double> a, int l);
double mu_log(int n, std::complex<double> a, int l);
/// mu(l)^2 as an exact rational, for real rational a.
mpq_class mu_sq_exact(int n, const GaussianRational& a, int l);

/// Deformation deltas (m^-, m^+) at k: the coefficients of e(k-e_1) and
/// e(k+e_1) in (E_0(a)-E_0)e(k) and (F_0(a)-F_0)e(k).
std::pair<Scalar, Scalar> deform_coeffs(int n, const ModuleParams& params, const MultiIndex& k,
                                        bool exact);

struct ChangeOfBasisResult {
  double max_defect = 0.0;       // relative, over all generators and interior k
  bool exact_zero = false;       // exact path confirmed identical
  GeneratorId worst_generator{GenKind::H, 0};
  MultiIndex worst_label;
};

/// Transports the DEFORMED_E action through x(k) = mu(|k|)e(k) and compares
/// against GENERIC_X coefficient by coefficient.
ChangeOfBasisResult change_of_basis_defect(ModuleParams params, ScalarMode mode = ScalarMode::Auto);

/// Sparse matrix entries (target, source, value) of g on the window; images
/// outside the window are not representable and are counted separately.
struct ActionTableCoo {
  std::vector<std::tuple<int, int, std::complex<double>>> entries;
  int dropped = 0;  // images outside the window
};
ActionTableCoo action_table_coo(const TruncatedModule& m, GeneratorId g);

}  // namespace wmod

#endif
