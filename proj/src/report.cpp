#include "wmod/report.hpp"

#include <iomanip>
#include <sstream>

namespace wmod {
namespace {

std::string tri_str(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    case Tri::Conditional: return "conditional";
  }
  return "?";
}

std::string orbit_str(OrbitClass c) {
  switch (c) {
    case OrbitClass::LocallyFinite: return "locally-finite";
    case OrbitClass::Injective: return "injective";
    case OrbitClass::Undetermined: return "undetermined";
  }
  return "?";
}

// One-sentence statement of the claim each report kind checks, embedded in
// the report so a stored file stays self-explanatory.
std::string claim_for(const std::string& kind) {
  if (kind == "verify")
    return "the window operators satisfy the Chevalley-Serre presentation of sl(n+1) away from "
           "the truncation boundary, and every weight space is one dimensional";
  if (kind == "weights")
    return "the window is the direct sum of joint Cartan eigenspaces, each of dimension one";
  if (kind == "branch")
    return "under the Levi subalgebra dropping one node, the window splits into one simple "
           "summand per level, with seed vector, dimension, and a distinct central character "
           "per summand";
  if (kind == "unitarity")
    return "with respect to the weighted pairing, E_j and F_j are mutual adjoints and the "
           "compact pairs are skew-symmetric exactly when the parameter is a negative real "
           "number";
  if (kind == "norms")
    return "the graded norm tower ||u||_{l+1} = max over generators of ||A u||_l is finite at "
           "each level, and the deformation stays small relative to it, uniformly in the window";
  if (kind == "bound")
    return "the level-0 obstruction profile b(L) = L(L+n-2)(mu(L-1)/mu(L)-1)^2 stays bounded "
           "and stabilizes at the tail limit (Re a + n)^2/4";
  if (kind == "global-check")
    return "on interior coefficients the integrated one-parameter subgroup action agrees with "
           "the exponential of the truncated generator matrix, with high-order decay in the "
           "step";
  if (kind == "sphere")
    return "normalized monomial moments over the unit sphere equal k!(n-1)!/(|k|+n-1)! on the "
           "diagonal and vanish off it";
  if (kind == "classify")
    return "the integrability and unitarity verdicts for the labeled module reproduce the "
           "classification tables for the chosen real form";
  if (kind == "suite")
    return "all twelve pinned acceptance criteria hold";
  return {};
}

}  // namespace

Json json_complex(std::complex<double> z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json wrap_report(const std::string& kind, Json body) {
  Json out;
  out["schema"] = "wmod-report/1";
  out["kind"] = kind;
  const std::string claim = claim_for(kind);
  if (!claim.empty() && !body.contains("claim")) out["claim"] = claim;
  for (auto& [k, v] : body.items()) out[k] = std::move(v);
  return out;
}

std::string dump_report(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(RealizationKind kind, const ModuleParams& p, bool exact) {
  Json out;
  out["realization"] = to_string(kind);
  out["n"] = p.n;
  out["N"] = p.N;
  if (kind == RealizationKind::BASE_P)
    out["a"] = nullptr;
  else
    out["a"] = json_complex(p.a);
  out["mode"] = exact ? "exact" : "float";
  return out;
}

Json to_json(const RelationSuiteResult& r) {
  Json classes = Json::array();
  for (const auto& c : r.classes) {
    classes.push_back(Json{{"name", c.name},
                           {"pairs", c.pairs},
                           {"max_defect", c.max_defect},
                           {"exact_all_zero", c.exact_all_zero}});
  }
  return Json{{"classes", classes},
              {"max_defect", r.max_defect},
              {"exact_mode", r.exact_mode},
              {"exact_all_zero", r.exact_all_zero},
              {"tol", r.tol},
              {"pass", r.pass}};
}

Json to_json(const WeightDecomposition& d) {
  Json spaces = Json::array();
  for (const auto& s : d.spaces) {
    Json weight = Json::array();
    for (const auto& w : s.weight) weight.push_back(w.str());
    spaces.push_back(Json{{"weight", weight}, {"dim", static_cast<int>(s.positions.size())}});
  }
  return Json{{"space_count", static_cast<int>(d.spaces.size())},
              {"max_multiplicity", d.max_multiplicity},
              {"degree_one", d.degree_one},
              {"spaces", spaces}};
}

Json to_json(const ActionTypeReport& r) {
  Json gens = Json::array();
  for (const auto& g : r.generators) {
    gens.push_back(Json{{"generator", to_string(g.g)},
                        {"verdict", orbit_str(g.verdict)},
                        {"max_steps", g.max_steps}});
  }
  return Json{{"generators", gens}, {"all_locally_finite", r.all_locally_finite}};
}

Json to_json(const BranchReport& r, const TruncatedModule& m) {
  Json summands = Json::array();
  for (const auto& s : r.summands) {
    summands.push_back(Json{{"seed", to_string(m.window().label(s.seed_pos))},
                            {"seed_level", s.seed_level},
                            {"dim", static_cast<int>(s.positions.size())},
                            {"central_eigenvalue", s.central_eigenvalue.str()},
                            {"central_constant", s.central_constant},
                            {"hw_count", s.hw_count}});
  }
  return Json{{"levi_node", r.levi_j},
              {"summands", summands},
              {"closed", r.closed},
              {"partition_ok", r.partition_ok},
              {"one_per_level", r.one_per_level},
              {"distinct_characters", r.distinct_characters},
              {"all_simple_profile", r.all_simple_profile}};
}

Json to_json(const FiniteTypeReport& r) {
  return Json{{"levi_node", r.levi_j},
              {"finite_type", r.finite_type},
              {"hw_vector_count", static_cast<int>(r.hw_positions.size())},
              {"evidence", r.evidence}};
}

Json to_json(const GrowthReport& r) {
  Json dims = Json::array();
  for (long d : r.cumulative_dims) dims.push_back(d);
  return Json{{"degree", r.degree},
              {"saturated", r.saturated},
              {"slope", r.slope},
              {"fit_residual", r.fit_residual},
              {"cumulative_dims", dims}};
}

Json to_json(const AdjointDefectReport& r) {
  return Json{{"noncompact_max", r.noncompact_max},
              {"compact_max", r.compact_max},
              {"diagonal_max", r.diagonal_max},
              {"max_defect", r.max_defect},
              {"tol", r.tol},
              {"formally_unitary", r.formally_unitary}};
}

Json to_json(const ChangeOfBasisResult& r) {
  return Json{{"max_defect", r.max_defect},
              {"exact_zero", r.exact_zero},
              {"worst_generator", to_string(r.worst_generator)},
              {"worst_label", to_string(r.worst_label)}};
}

Json to_json(const BoundednessProfile& p) {
  return Json{{"K", static_cast<int>(p.values.size())},
              {"global_sup", p.global_sup},
              {"last_half_sup", p.last_half_sup},
              {"tail_limit", p.tail_limit}};
}

Json to_json(const GlobalInfinitesimalReport& r) {
  return Json{{"generator", to_string(r.g)},
              {"t", r.t},
              {"buffer", r.buffer},
              {"max_discrepancy", r.max_discrepancy},
              {"cocycle_discrepancy", r.cocycle_discrepancy}};
}

Json to_json(const ClassifyReport& r) {
  return Json{{"form", r.form.str()},
              {"label", r.label.str()},
              {"highest_weight", r.hw_text.empty() ? Json(nullptr) : Json(r.hw_text)},
              {"integrable", to_string(r.integrable)},
              {"integrable_reason", r.integrable_reason},
              {"unitary", to_string(r.unitary)},
              {"unitary_reason", r.unitary_reason},
              {"claim", r.claim_key},
              {"matched_contragredient", r.matched_dual},
              {"finite_dimensional", tri_str(r.finite_dimensional)},
              {"dimension_note", r.dimension_note}};
}

Json to_json(const LabelFiniteType& r) {
  Json hw = Json::array();
  for (const auto& v : r.hw_on_h) hw.push_back(v.str());
  return Json{{"levi_node", r.levi_j},
              {"finite_type", r.finite_type},
              {"hw_on_h", hw},
              {"evidence", r.evidence}};
}

std::string profile_csv(const BoundednessProfile& p) {
  std::ostringstream os;
  os << "L,b\n" << std::setprecision(17);
  for (std::size_t i = 0; i < p.values.size(); ++i) os << (i + 1) << "," << p.values[i] << "\n";
  return os.str();
}

}  // namespace wmod
