#ifndef WMOD_CLASSIFY_HPP
#define WMOD_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "wmod/scalar.hpp"

namespace wmod {

enum class RealFormKind { SU_PQ, SL_N_R, SP_N_R, SP_PQ };

struct RealFormId {
  RealFormKind kind = RealFormKind::SU_PQ;
  int p = 0, q = 0;  // SU(p,q), Sp(p,q)
  int m = 0;         // SL(m,R), Sp(m,R)
  int rank() const;  // rank of the complexified algebra = label length
  std::string str() const;
};

/// Accepts "SU(1,2)", "SL(4,R)", "Sp(2,R)", "Sp(1,1)" and the like.
RealFormId parse_real_form(const std::string& s);

struct LabelEntry {
  enum class Kind { Value, SymA, SymM, NegOneMinusA, NegOneMinusM };
  Kind kind = Kind::Value;
  GaussianRational value;  // meaningful for Kind::Value
  bool is_value(long v) const;
  bool symbolic() const { return kind != Kind::Value; }
  std::string str() const;
};

struct ModuleLabel {
  char family = 'N';            // 'N': type A towers, 'M': type C towers
  std::vector<LabelEntry> entries;
  bool contragredient = false;  // trailing ^*
  std::string str() const;
};

/// Grammar: N(e1,...,ek) or M(e1,...,ek), optional trailing ^*.  Entries are
/// Gaussian-rational literals or the symbols a, m, -1-a, -1-m.
ModuleLabel parse_label(const std::string& s);

/// Highest weights of the degree-one towers in fundamental-weight coordinates:
/// shape 1 is a*w_1, shape 2 is a*w_i - (1+a)*w_{i+1} with 1 <= i <= rank-1,
/// shape 3 is a*w_rank.  Rank 1 collapses shapes 1 and 3 (canonicalized to 1).
struct HwShape {
  int shape = 1;
  int i = 1;  // shape 2 only
  LabelEntry a;
};

std::optional<HwShape> label_to_hw(const ModuleLabel& label, int rank);
ModuleLabel hw_to_label(const HwShape& s, int rank);
/// Contragredient at the highest-weight level: the Dynkin-diagram flip sends
/// shape 1 <-> shape 3 keeping a, and shape 2 (i, a) to (rank - i, -1-a).
HwShape hw_dual(const HwShape& s, int rank);
std::string hw_string(const HwShape& s, int rank);

/// Parse "hw: 2*w1 - 1/2*w2" into fundamental-weight coordinates.
std::vector<GaussianRational> parse_highest_weight(const std::string& s, int rank);
/// Recognize a coordinate vector as one of the three tower shapes.
std::optional<HwShape> hw_from_coords(const std::vector<GaussianRational>& coords);

enum class Tri { Yes, No, Conditional };

struct DimensionInfo {
  Tri finite = Tri::No;
  double dim = -1;  // set when finite with a concrete parameter
  std::string note;
};
DimensionInfo finite_dimensional_info(const HwShape& s, int rank);

enum class Verdict { Yes, No, Conditional, NotApplicable };
std::string to_string(Verdict v);

struct ClassifyReport {
  RealFormId form;
  ModuleLabel label;
  std::string hw_text;  // empty when the label has no tower shape
  Verdict integrable = Verdict::No;
  Verdict unitary = Verdict::No;
  std::string integrable_reason;
  std::string unitary_reason;
  std::string claim_key;    // stable identifier of the decision clause
  bool matched_dual = false;  // decided through the contragredient label
  Tri finite_dimensional = Tri::No;
  std::string dimension_note;
};

/// Integrability and unitarity of the simple weight module named by the label,
/// for the simply connected group of the given real form.
ClassifyReport classify(const RealFormId& form, const ModuleLabel& label);

struct LabelFiniteType {
  int levi_j = 0;
  bool finite_type = false;
  std::string evidence;
  std::vector<GaussianRational> hw_on_h;  // highest-weight values on H_0..H_{rank-1}
};

/// Label-level necessary condition for the Levi subalgebra dropping node
/// levi_j to act locally finitely: every retained node must evaluate the
/// highest weight to a nonnegative integer.
LabelFiniteType label_finite_type(const ModuleLabel& label, int rank, int levi_j);

}  // namespace wmod

#endif
