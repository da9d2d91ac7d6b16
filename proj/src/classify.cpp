#include "wmod/classify.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "wmod/multi_index.hpp"

namespace wmod {
namespace {

std::string despace(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

bool is_neg_integer(const GaussianRational& q) { return is_integer(q) && q.re < 0; }

long as_long(const GaussianRational& q) { return q.re.get_num().get_si(); }

LabelEntry value_entry(long v) {
  LabelEntry e;
  e.kind = LabelEntry::Kind::Value;
  e.value = GaussianRational{mpq_class(v), mpq_class(0)};
  return e;
}

// -1 - e, staying within the symbol alphabet.
LabelEntry neg_one_minus(const LabelEntry& e) {
  LabelEntry out;
  switch (e.kind) {
    case LabelEntry::Kind::Value:
      out.kind = LabelEntry::Kind::Value;
      out.value = GaussianRational{mpq_class(-1), mpq_class(0)} - e.value;
      break;
    case LabelEntry::Kind::SymA: out.kind = LabelEntry::Kind::NegOneMinusA; break;
    case LabelEntry::Kind::SymM: out.kind = LabelEntry::Kind::NegOneMinusM; break;
    case LabelEntry::Kind::NegOneMinusA: out.kind = LabelEntry::Kind::SymA; break;
    case LabelEntry::Kind::NegOneMinusM: out.kind = LabelEntry::Kind::SymM; break;
  }
  return out;
}

}  // namespace

int RealFormId::rank() const {
  switch (kind) {
    case RealFormKind::SU_PQ: return p + q - 1;
    case RealFormKind::SL_N_R: return m - 1;
    case RealFormKind::SP_N_R: return m;
    case RealFormKind::SP_PQ: return p + q;
  }
  return 0;
}

std::string RealFormId::str() const {
  std::ostringstream os;
  switch (kind) {
    case RealFormKind::SU_PQ: os << "SU(" << p << "," << q << ")"; break;
    case RealFormKind::SL_N_R: os << "SL(" << m << ",R)"; break;
    case RealFormKind::SP_N_R: os << "Sp(" << m << ",R)"; break;
    case RealFormKind::SP_PQ: os << "Sp(" << p << "," << q << ")"; break;
  }
  return os.str();
}

RealFormId parse_real_form(const std::string& raw) {
  const std::string s = despace(raw);
  auto open = s.find('(');
  auto close = s.find(')');
  if (open == std::string::npos || close == std::string::npos || close < open || close + 1 != s.size())
    throw std::invalid_argument("unrecognized real form: " + raw);
  const std::string name = s.substr(0, open);
  const std::string inside = s.substr(open + 1, close - open - 1);
  auto comma = inside.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("unrecognized real form: " + raw);
  const std::string a1 = inside.substr(0, comma), a2 = inside.substr(comma + 1);
  auto to_int = [&](const std::string& t) {
    if (t.empty() || !std::all_of(t.begin(), t.end(),
                                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw std::invalid_argument("unrecognized real form: " + raw);
    return std::stoi(t);
  };

  RealFormId id;
  if (name == "SU") {
    id.kind = RealFormKind::SU_PQ;
    id.p = to_int(a1);
    id.q = to_int(a2);
    if (id.p < 1 || id.q < 1) throw std::invalid_argument("SU(p,q) needs p,q >= 1");
    if (id.p + id.q < 3)
      throw std::invalid_argument("SU(1,1) has rank 1 and sits outside these tables");
  } else if (name == "SL" && a2 == "R") {
    id.kind = RealFormKind::SL_N_R;
    id.m = to_int(a1);
    if (id.m < 3) throw std::invalid_argument("the split classification here needs SL(m,R) with m >= 3");
  } else if (name == "Sp" && a2 == "R") {
    id.kind = RealFormKind::SP_N_R;
    id.m = to_int(a1);
    if (id.m < 1) throw std::invalid_argument("Sp(m,R) needs m >= 1");
  } else if (name == "Sp") {
    id.kind = RealFormKind::SP_PQ;
    id.p = to_int(a1);
    id.q = to_int(a2);
    if (id.p < 1 || id.q < 1) throw std::invalid_argument("Sp(p,q) needs p,q >= 1");
  } else {
    throw std::invalid_argument("unrecognized real form: " + raw);
  }
  return id;
}

bool LabelEntry::is_value(long v) const {
  return kind == Kind::Value && value.is_real() && value.re == v;
}

std::string LabelEntry::str() const {
  switch (kind) {
    case Kind::Value: return value.str();
    case Kind::SymA: return "a";
    case Kind::SymM: return "m";
    case Kind::NegOneMinusA: return "-1-a";
    case Kind::NegOneMinusM: return "-1-m";
  }
  return "?";
}

std::string ModuleLabel::str() const {
  std::string out(1, family);
  out += '(';
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ',';
    out += entries[i].str();
  }
  out += ')';
  if (contragredient) out += "^*";
  return out;
}

ModuleLabel parse_label(const std::string& raw) {
  const std::string s = despace(raw);
  if (s.empty() || (s[0] != 'N' && s[0] != 'M') || s.size() < 4 || s[1] != '(')
    throw std::invalid_argument("label must look like N(...) or M(...): " + raw);
  auto close = s.find(')');
  if (close == std::string::npos) throw std::invalid_argument("unterminated label: " + raw);
  ModuleLabel lab;
  lab.family = s[0];
  const std::string tail = s.substr(close + 1);
  if (tail == "^*")
    lab.contragredient = true;
  else if (!tail.empty())
    throw std::invalid_argument("trailing characters after label: " + raw);

  std::string inside = s.substr(2, close - 2);
  if (inside.empty()) throw std::invalid_argument("label needs at least one entry: " + raw);
  std::size_t start = 0;
  while (true) {
    auto comma = inside.find(',', start);
    std::string tok = inside.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    LabelEntry e;
    if (tok == "a")
      e.kind = LabelEntry::Kind::SymA;
    else if (tok == "m")
      e.kind = LabelEntry::Kind::SymM;
    else if (tok == "-1-a")
      e.kind = LabelEntry::Kind::NegOneMinusA;
    else if (tok == "-1-m")
      e.kind = LabelEntry::Kind::NegOneMinusM;
    else {
      e.kind = LabelEntry::Kind::Value;
      e.value = parse_gaussian(tok);
    }
    lab.entries.push_back(e);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return lab;
}

std::optional<HwShape> label_to_hw(const ModuleLabel& label, int rank) {
  if (label.family != 'N') return std::nullopt;
  if (static_cast<int>(label.entries.size()) != rank)
    throw std::invalid_argument("label length must equal the rank");
  int lead = 0;
  while (lead < rank && label.entries[lead].is_value(-1)) ++lead;
  HwShape s;
  if (lead == rank) {  // all -1: the trivial tower, weight 0
    s.shape = rank == 1 ? 1 : 3;
    s.a = value_entry(0);
    return s;
  }
  for (int i = lead + 1; i < rank; ++i)
    if (!label.entries[i].is_value(0)) return std::nullopt;
  const LabelEntry& slot = label.entries[lead];
  if (lead == 0) {
    s.shape = 1;
    s.a = slot;
  } else if (lead == rank - 1) {
    // A trailing slot after rank-1 leading -1 entries reads as a w_rank weight.
    s.shape = 3;
    s.a = neg_one_minus(slot);
  } else {
    s.shape = 2;
    s.i = lead;
    s.a = neg_one_minus(slot);
  }
  return s;
}

ModuleLabel hw_to_label(const HwShape& s, int rank) {
  ModuleLabel lab;
  lab.family = 'N';
  if (s.shape == 1) {
    lab.entries.push_back(s.a);
    for (int i = 1; i < rank; ++i) lab.entries.push_back(value_entry(0));
  } else if (s.shape == 3) {
    if (rank == 1) {
      lab.entries.push_back(s.a);
    } else {
      for (int i = 0; i < rank - 1; ++i) lab.entries.push_back(value_entry(-1));
      lab.entries.push_back(neg_one_minus(s.a));
    }
  } else {
    if (s.i < 1 || s.i > rank - 1) throw std::invalid_argument("two-node shape index out of range");
    for (int i = 0; i < s.i; ++i) lab.entries.push_back(value_entry(-1));
    lab.entries.push_back(neg_one_minus(s.a));
    for (int i = s.i + 1; i < rank; ++i) lab.entries.push_back(value_entry(0));
  }
  return lab;
}

HwShape hw_dual(const HwShape& s, int rank) {
  HwShape d = s;
  if (s.shape == 1) {
    d.shape = 3;
  } else if (s.shape == 3) {
    d.shape = 1;
  } else {
    d.i = rank - s.i;
    d.a = neg_one_minus(s.a);
  }
  if (rank == 1 && d.shape == 3) d.shape = 1;
  return d;
}

std::string hw_string(const HwShape& s, int rank) {
  std::ostringstream os;
  if (s.shape == 1) {
    os << "(" << s.a.str() << ")*w1";
  } else if (s.shape == 3) {
    os << "(" << s.a.str() << ")*w" << rank;
  } else {
    os << "(" << s.a.str() << ")*w" << s.i << " + (" << neg_one_minus(s.a).str() << ")*w"
       << (s.i + 1);
  }
  return os.str();
}

std::vector<GaussianRational> parse_highest_weight(const std::string& raw, int rank) {
  std::string s = despace(raw);
  if (s.rfind("hw:", 0) == 0) s = s.substr(3);
  if (s.empty()) throw std::invalid_argument("empty highest weight");
  std::vector<GaussianRational> coords(rank);
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = pos + 1;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string term = s.substr(pos, end - pos);
    auto w = term.rfind('w');
    if (w == std::string::npos) throw std::invalid_argument("bad highest-weight term: " + term);
    std::string coef = term.substr(0, w);
    if (!coef.empty() && coef.back() == '*') coef.pop_back();
    GaussianRational c;
    if (coef.empty() || coef == "+")
      c = GaussianRational{mpq_class(1), mpq_class(0)};
    else if (coef == "-")
      c = GaussianRational{mpq_class(-1), mpq_class(0)};
    else
      c = parse_gaussian(coef);
    int idx = std::stoi(term.substr(w + 1));
    if (idx < 1 || idx > rank) throw std::invalid_argument("fundamental-weight index out of range: " + term);
    coords[idx - 1] = coords[idx - 1] + c;
    pos = end;
  }
  return coords;
}

std::optional<HwShape> hw_from_coords(const std::vector<GaussianRational>& coords) {
  const int rank = static_cast<int>(coords.size());
  std::vector<int> support;
  for (int i = 0; i < rank; ++i)
    if (!coords[i].is_zero()) support.push_back(i);
  HwShape s;
  if (support.empty()) {
    s.shape = 1;
    s.a = value_entry(0);
    return s;
  }
  if (support.size() == 1) {
    const int i = support[0];
    LabelEntry a;
    a.kind = LabelEntry::Kind::Value;
    a.value = coords[i];
    if (i == 0) {
      s.shape = 1;
    } else if (i == rank - 1) {
      s.shape = 3;
    } else {
      return std::nullopt;
    }
    s.a = a;
    return s;
  }
  if (support.size() == 2 && support[1] == support[0] + 1) {
    // needs c_{i+1} = -1 - c_i
    const GaussianRational sum = coords[support[0]] + coords[support[1]];
    if (sum == GaussianRational{mpq_class(-1), mpq_class(0)}) {
      s.shape = 2;
      s.i = support[0] + 1;
      s.a.kind = LabelEntry::Kind::Value;
      s.a.value = coords[support[0]];
      return s;
    }
  }
  return std::nullopt;
}

DimensionInfo finite_dimensional_info(const HwShape& s, int rank) {
  DimensionInfo di;
  if (s.shape == 2) {
    di.finite = Tri::No;
    di.note = "a two-node tower weight is never dominant, so no member is finite dimensional";
    return di;
  }
  switch (s.a.kind) {
    case LabelEntry::Kind::Value:
      if (is_nonneg_integer(s.a.value)) {
        di.finite = Tri::Yes;
        di.dim = binomial(static_cast<int>(as_long(s.a.value)) + rank, rank);
        std::ostringstream os;
        os << "finite dimensional of dimension " << static_cast<long long>(di.dim + 0.5);
        di.note = os.str();
      } else {
        di.finite = Tri::No;
        di.note = "the tower parameter is not a nonnegative integer, so the module is infinite dimensional";
      }
      break;
    case LabelEntry::Kind::SymM:
      di.finite = Tri::Yes;
      di.note = "finite dimensional for every nonnegative integer m, of dimension C(m+rank, rank)";
      break;
    case LabelEntry::Kind::NegOneMinusM:
      di.finite = Tri::No;
      di.note = "-1-m is negative for every nonnegative integer m, so the module is infinite dimensional";
      break;
    case LabelEntry::Kind::SymA:
      di.finite = Tri::Conditional;
      di.note = "finite dimensional exactly when a is a nonnegative integer";
      break;
    case LabelEntry::Kind::NegOneMinusA:
      di.finite = Tri::Conditional;
      di.note = "finite dimensional exactly when -1-a is a nonnegative integer";
      break;
  }
  return di;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Conditional: return "conditional";
    case Verdict::NotApplicable: return "not-applicable";
  }
  return "?";
}

namespace {

struct SuRow {
  int lead = 0, trail = 0;
  enum class Slot { FreeA, M, NegOneMinusM } slot = Slot::FreeA;
  enum class ICond { NotNonnegInt, NotNegInt, None } icond = ICond::None;
  enum class UCond { NegReal, PosReal, Always } ucond = UCond::Always;
  std::string claim_key;
  std::string clause;
};

std::vector<SuRow> su_rows(int p, int n) {
  std::vector<SuRow> rows;
  if (p == 1) {
    rows.push_back({0, n - 1, SuRow::Slot::FreeA, SuRow::ICond::NotNonnegInt,
                    SuRow::UCond::NegReal, "su-principal-tower",
                    "the tower N(a,0,...,0) with a outside the nonnegative integers restricts "
                    "finitely to the compact Levi at node 0 and integrates"});
    rows.push_back({1, n - 2, SuRow::Slot::M, SuRow::ICond::None, SuRow::UCond::Always,
                    "su-holomorphic-series",
                    "N(-1,m,0,...,0) with m a nonnegative integer is the highest-weight module "
                    "with weight (-1-m,m,0,...,0): a holomorphic discrete-series family, always "
                    "unitary"});
  } else if (p == n) {
    rows.push_back({n - 1, 0, SuRow::Slot::FreeA, SuRow::ICond::NotNegInt, SuRow::UCond::PosReal,
                    "su-antiholomorphic-tower",
                    "the tower N(-1,...,-1,a) with a outside the negative integers restricts "
                    "finitely to the compact Levi at the last node and integrates"});
    rows.push_back({n - 2, 1, SuRow::Slot::NegOneMinusM, SuRow::ICond::None, SuRow::UCond::Always,
                    "su-antiholomorphic-series",
                    "N(-1,...,-1,-1-m,0) with m a nonnegative integer is a discrete-series-type "
                    "family, always unitary"});
  } else {
    rows.push_back({p, n - p - 1, SuRow::Slot::M, SuRow::ICond::None, SuRow::UCond::Always,
                    "su-intermediate-series-upper",
                    "N(-1 repeated p times, m, 0,...,0) with m a nonnegative integer corresponds "
                    "to a holomorphic discrete series and is always unitary"});
    rows.push_back({p - 1, n - p, SuRow::Slot::NegOneMinusM, SuRow::ICond::None,
                    SuRow::UCond::Always, "su-intermediate-series-lower",
                    "N(-1 repeated p-1 times, -1-m, 0,...,0) with m a nonnegative integer "
                    "corresponds to a holomorphic discrete series and is always unitary"});
  }
  return rows;
}

struct RowOutcome {
  bool structural = false;
  Tri integrable = Tri::No;
  Tri unitary = Tri::No;
  std::string int_cond, unit_cond;
};

RowOutcome match_su_row(const ModuleLabel& lab, const SuRow& row) {
  RowOutcome out;
  const int n = static_cast<int>(lab.entries.size());
  if (row.lead + 1 + row.trail != n) return out;
  for (int i = 0; i < row.lead; ++i)
    if (!lab.entries[i].is_value(-1)) return out;
  for (int t = 0; t < row.trail; ++t)
    if (!lab.entries[row.lead + 1 + t].is_value(0)) return out;
  const LabelEntry& e = lab.entries[row.lead];

  switch (row.slot) {
    case SuRow::Slot::M:
      if (e.kind == LabelEntry::Kind::SymM ||
          (e.kind == LabelEntry::Kind::Value && is_nonneg_integer(e.value))) {
        out.structural = true;
        out.integrable = Tri::Yes;
        out.unitary = Tri::Yes;
      }
      return out;
    case SuRow::Slot::NegOneMinusM:
      if (e.kind == LabelEntry::Kind::NegOneMinusM ||
          (e.kind == LabelEntry::Kind::Value && is_neg_integer(e.value))) {
        out.structural = true;
        out.integrable = Tri::Yes;
        out.unitary = Tri::Yes;
      }
      return out;
    case SuRow::Slot::FreeA:
      break;
  }

  out.structural = true;
  // Integrability condition of the free-parameter row.
  switch (e.kind) {
    case LabelEntry::Kind::Value:
      if (row.icond == SuRow::ICond::NotNonnegInt)
        out.integrable = is_nonneg_integer(e.value) ? Tri::No : Tri::Yes;
      else
        out.integrable = is_neg_integer(e.value) ? Tri::No : Tri::Yes;
      break;
    case LabelEntry::Kind::SymA:
    case LabelEntry::Kind::NegOneMinusA: {
      const std::string sym = e.str();
      out.integrable = Tri::Conditional;
      out.int_cond = sym + (row.icond == SuRow::ICond::NotNonnegInt
                                ? " is not a nonnegative integer"
                                : " is not a negative integer");
      break;
    }
    case LabelEntry::Kind::SymM:
      out.integrable = row.icond == SuRow::ICond::NotNonnegInt ? Tri::No : Tri::Yes;
      break;
    case LabelEntry::Kind::NegOneMinusM:
      out.integrable = row.icond == SuRow::ICond::NotNonnegInt ? Tri::Yes : Tri::No;
      break;
  }
  if (out.integrable == Tri::No) return out;

  // Unitarity condition.
  switch (e.kind) {
    case LabelEntry::Kind::Value:
      if (row.ucond == SuRow::UCond::NegReal)
        out.unitary = (e.value.is_real() && e.value.re < 0) ? Tri::Yes : Tri::No;
      else
        out.unitary = (e.value.is_real() && e.value.re > 0) ? Tri::Yes : Tri::No;
      break;
    case LabelEntry::Kind::SymA:
    case LabelEntry::Kind::NegOneMinusA:
      out.unitary = Tri::Conditional;
      out.unit_cond = e.str() + (row.ucond == SuRow::UCond::NegReal ? " is a negative real number"
                                                                    : " is a positive real number");
      break;
    case LabelEntry::Kind::SymM:
      if (row.ucond == SuRow::UCond::PosReal) {
        out.unitary = Tri::Conditional;
        out.unit_cond = "m >= 1";
      } else {
        out.unitary = Tri::No;
      }
      break;
    case LabelEntry::Kind::NegOneMinusM:
      out.unitary = row.ucond == SuRow::UCond::NegReal ? Tri::Yes : Tri::No;
      break;
  }
  return out;
}

Verdict tri_to_verdict(Tri t) {
  switch (t) {
    case Tri::Yes: return Verdict::Yes;
    case Tri::Conditional: return Verdict::Conditional;
    case Tri::No: return Verdict::No;
  }
  return Verdict::No;
}

int tri_rank(Tri t) { return t == Tri::Yes ? 2 : (t == Tri::Conditional ? 1 : 0); }

}  // namespace

ClassifyReport classify(const RealFormId& form, const ModuleLabel& label) {
  const int r = form.rank();
  ClassifyReport rep;
  rep.form = form;
  rep.label = label;
  const bool type_a = form.kind == RealFormKind::SU_PQ || form.kind == RealFormKind::SL_N_R;
  if (type_a && label.family != 'N')
    throw std::invalid_argument("special linear and unitary forms take N(...) labels");
  if (!type_a && label.family != 'M')
    throw std::invalid_argument("symplectic forms take M(...) labels");
  if (static_cast<int>(label.entries.size()) != r) {
    std::ostringstream os;
    os << "label for " << form.str() << " needs " << r << " entries";
    throw std::invalid_argument(os.str());
  }

  if (!type_a) {
    for (const LabelEntry& e : label.entries)
      if (e.symbolic())
        throw std::invalid_argument("symplectic labels take concrete entries only");
    rep.finite_dimensional = Tri::No;
    rep.dimension_note = "the label names an infinite-dimensional simple module";
    if (form.kind == RealFormKind::SP_PQ) {
      rep.integrable = Verdict::No;
      rep.unitary = Verdict::No;
      rep.claim_key = "sp-quaternionic-none";
      rep.integrable_reason =
          "no simple infinite-dimensional weight module of degree one integrates for the "
          "quaternionic symplectic form: finite restriction to the compact Levi forces a "
          "highest- or lowest-weight tower, and neither candidate tower restricts finitely";
      rep.unitary_reason = "not integrable, hence not unitarizable";
      return rep;
    }
    bool even = true;
    for (const LabelEntry& e : label.entries) even = even && e.is_value(-1);
    bool odd = r >= 1 && label.entries[r - 1].is_value(-2);
    for (int i = 0; i + 1 < r && odd; ++i) odd = label.entries[i].is_value(-1);
    if (even || odd) {
      rep.integrable = Verdict::Yes;
      rep.unitary = Verdict::Yes;
      rep.claim_key = even ? "sp-metaplectic-even" : "sp-metaplectic-odd";
      std::ostringstream hw;
      if (even)
        hw << "(-1/2)*w" << r;
      else
        hw << "w" << (r - 1 > 0 ? r - 1 : r) << " + (-3/2)*w" << r;
      rep.hw_text = hw.str();
      rep.integrable_reason = even
          ? "the label matches M(-1,...,-1): the even half of the metaplectic representation, "
            "which integrates to the metaplectic cover"
          : "the label matches M(-1,...,-1,-2): the odd half of the metaplectic representation, "
            "which integrates to the metaplectic cover";
      rep.unitary_reason = "both halves of the metaplectic representation are unitary";
    } else {
      rep.integrable = Verdict::No;
      rep.unitary = Verdict::No;
      rep.claim_key = "sp-metaplectic-no-match";
      rep.integrable_reason =
          "among simple infinite-dimensional weight modules of degree one, only the two "
          "metaplectic halves M(-1,...,-1) and M(-1,...,-1,-2) integrate for the real "
          "symplectic form, and this label matches neither";
      rep.unitary_reason = "not integrable, hence not unitarizable";
    }
    return rep;
  }

  // Type A: resolve the highest-weight shape and the contragredient label.
  auto shape = label_to_hw(label, r);
  std::optional<ModuleLabel> dual_label;
  double fin_dim = -1;
  if (shape) {
    rep.hw_text = hw_string(*shape, r);
    dual_label = hw_to_label(hw_dual(*shape, r), r);
    DimensionInfo di = finite_dimensional_info(*shape, r);
    rep.finite_dimensional = di.finite;
    rep.dimension_note = di.note;
    fin_dim = di.dim;
  } else {
    rep.finite_dimensional = Tri::No;
    rep.dimension_note = "the label is outside the highest-weight dictionary";
  }

  if (form.kind == RealFormKind::SL_N_R) {
    switch (rep.finite_dimensional) {
      case Tri::Yes:
        rep.integrable = Verdict::Yes;
        rep.claim_key = "sl-split-finite-dimensional";
        rep.integrable_reason =
            "for the split form a simple weight module integrates exactly when finite "
            "dimensional, and this one is (" + rep.dimension_note + ")";
        if (fin_dim == 1) {
          rep.unitary = Verdict::Yes;
          rep.unitary_reason = "the trivial representation is unitary";
        } else if (fin_dim > 1) {
          rep.unitary = Verdict::No;
          rep.unitary_reason =
              "a nontrivial finite-dimensional representation of a noncompact simple group "
              "admits no invariant inner product";
        } else {
          rep.unitary = Verdict::Conditional;
          rep.unitary_reason = "unitary only for the trivial member m = 0";
        }
        break;
      case Tri::Conditional:
        rep.integrable = Verdict::Conditional;
        rep.claim_key = "sl-split-conditional";
        rep.integrable_reason = "integrates exactly when finite dimensional: " + rep.dimension_note;
        rep.unitary = Verdict::Conditional;
        rep.unitary_reason = "unitary only for the trivial member";
        break;
      case Tri::No:
        rep.integrable = Verdict::No;
        rep.claim_key = "sl-split-infinite";
        rep.integrable_reason =
            "for the split form every compact-direction pair must act locally finitely, which "
            "forces finite dimension; this module is infinite dimensional";
        rep.unitary = Verdict::No;
        rep.unitary_reason = "not integrable, hence not unitarizable";
        break;
    }
    return rep;
  }

  // SU(p,q): test the label and its contragredient against the published rows.
  const std::vector<SuRow> rows = su_rows(form.p, r);
  Tri best_i = Tri::No, best_u = Tri::No;
  std::string reason_i, reason_u, cond_i, cond_u, key, u_note;
  bool dual_i = false, dual_u = false;
  for (int cand = 0; cand < 2; ++cand) {
    if (cand == 1 && !dual_label) break;
    const ModuleLabel& lab = cand == 0 ? label : *dual_label;
    for (const SuRow& row : rows) {
      RowOutcome o = match_su_row(lab, row);
      if (!o.structural) continue;
      if (tri_rank(o.integrable) > tri_rank(best_i)) {
        best_i = o.integrable;
        cond_i = o.int_cond;
        reason_i = row.clause;
        key = row.claim_key;
        dual_i = cand == 1;
      }
      if (tri_rank(o.unitary) > tri_rank(best_u)) {
        best_u = o.unitary;
        cond_u = o.unit_cond;
        reason_u = row.clause;
        dual_u = cand == 1;
        u_note.clear();
        if (row.slot == SuRow::Slot::FreeA && o.unitary == Tri::Yes)
          u_note = row.ucond == SuRow::UCond::NegReal
                       ? "the parameter is a negative real number"
                       : "the parameter is a positive real number";
      }
    }
  }

  auto with_dual_note = [&](const std::string& base, bool via_dual) {
    if (!via_dual) return base;
    return "the contragredient label " + dual_label->str() + " matches: " + base;
  };

  // Finite-dimensional members integrate regardless of the infinite-dimensional rows.
  if (rep.finite_dimensional == Tri::Yes) {
    rep.integrable = Verdict::Yes;
    rep.claim_key = "su-finite-dimensional";
    rep.integrable_reason =
        "the module is " + rep.dimension_note +
        ", and every finite-dimensional module integrates for a simply connected group";
    if (fin_dim == 1) {
      rep.unitary = Verdict::Yes;
      rep.unitary_reason = "the trivial representation is unitary";
    } else if (fin_dim > 1) {
      rep.unitary = Verdict::No;
      rep.unitary_reason =
          "a nontrivial finite-dimensional representation of a noncompact simple group admits "
          "no invariant inner product";
    } else {
      rep.unitary = Verdict::Conditional;
      rep.unitary_reason = "unitary only for the trivial member m = 0";
    }
    return rep;
  }

  rep.integrable = tri_to_verdict(best_i);
  rep.unitary = tri_to_verdict(best_u);
  rep.matched_dual = best_i != Tri::No && dual_i;
  switch (best_i) {
    case Tri::Yes:
      rep.claim_key = key;
      rep.integrable_reason = with_dual_note(reason_i, dual_i);
      break;
    case Tri::Conditional:
      rep.claim_key = key;
      rep.integrable_reason = with_dual_note(reason_i, dual_i) + "; requires " + cond_i;
      if (rep.finite_dimensional == Tri::Conditional)
        rep.integrable_reason += "; separately, " + rep.dimension_note + " and such members integrate";
      break;
    case Tri::No:
      rep.claim_key = "su-no-match";
      if (rep.finite_dimensional == Tri::Conditional) {
        rep.integrable = Verdict::Conditional;
        rep.integrable_reason = "no infinite-dimensional family matches; " + rep.dimension_note +
                                " and such members integrate";
      } else if (dual_label) {
        rep.integrable_reason = "neither the label nor its contragredient " + dual_label->str() +
                                " matches any family in the integrable list for " + form.str();
      } else {
        rep.integrable_reason =
            "the label does not name a highest-weight tower, so neither it nor its "
            "contragredient can match the integrable families for " + form.str();
      }
      break;
  }
  switch (best_u) {
    case Tri::Yes:
      rep.unitary_reason = with_dual_note(reason_u, dual_u);
      if (!u_note.empty()) rep.unitary_reason += "; unitary since " + u_note;
      break;
    case Tri::Conditional:
      rep.unitary_reason = with_dual_note(reason_u, dual_u) + "; requires " + cond_u;
      break;
    case Tri::No:
      if (rep.integrable == Verdict::No) {
        rep.unitary_reason = "not integrable, hence not unitarizable";
      } else {
        rep.unitary_reason = "the matched family requires " +
                             std::string(rows[0].ucond == SuRow::UCond::NegReal
                                             ? "a negative real parameter"
                                             : "a positive real parameter") +
                             " for unitarity, and the label parameter fails it";
        if (dual_label)
          rep.unitary_reason += "; the contragredient label " + dual_label->str() +
                                " matches no always-unitary family";
      }
      break;
  }
  return rep;
}

LabelFiniteType label_finite_type(const ModuleLabel& label, int rank, int levi_j) {
  if (levi_j < 0 || levi_j >= rank) throw std::invalid_argument("Levi node out of range");
  if (label.family != 'N')
    throw std::invalid_argument("the finite-type label check applies to N(...) labels");
  auto shape = label_to_hw(label, rank);
  if (!shape) throw std::invalid_argument("the label is outside the highest-weight dictionary");
  if (shape->a.symbolic())
    throw std::invalid_argument("the finite-type label check needs concrete entries");

  LabelFiniteType out;
  out.levi_j = levi_j;
  out.hw_on_h.assign(rank, GaussianRational{});
  const GaussianRational a = shape->a.value;
  const GaussianRational minus_one{mpq_class(-1), mpq_class(0)};
  if (shape->shape == 1) {
    out.hw_on_h[0] = a;
  } else if (shape->shape == 3) {
    out.hw_on_h[rank - 1] = a;
  } else {
    out.hw_on_h[shape->i - 1] = a;
    out.hw_on_h[shape->i] = minus_one - a;
  }
  for (int i = 0; i < rank; ++i) {
    if (i == levi_j) continue;
    if (!is_nonneg_integer(out.hw_on_h[i])) {
      out.finite_type = false;
      std::ostringstream os;
      os << "H" << i << " acts on the highest-weight vector by " << out.hw_on_h[i].str()
         << ", which is not a nonnegative integer";
      out.evidence = os.str();
      return out;
    }
  }
  out.finite_type = true;
  out.evidence =
      "every node away from the Levi cut acts on the highest-weight vector by a nonnegative "
      "integer";
  return out;
}

}  // namespace wmod
