#include <cctype>
#include <complex>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "wmod/action.hpp"
#include "wmod/classify.hpp"
#include "wmod/group_action.hpp"
#include "wmod/inner_product.hpp"
#include "wmod/norm_tower.hpp"
#include "wmod/report.hpp"
#include "wmod/sparse_vector.hpp"
#include "wmod/sphere.hpp"
#include "wmod/suite.hpp"
#include "wmod/verify.hpp"

namespace {

using namespace wmod;

struct RunConfig {
  std::string subcommand;
  int n = 1;
  std::string a = "-0.5";
  int cutoff = 12;
  std::string kind = "generic";
  std::string mode = "auto";
  double tol = 1e-9;
  std::uint64_t seed = 20260822;
  long samples = 1000000;
  std::string output;  // empty: stdout
  std::string format = "text";
};

RealizationKind resolve_kind(const std::string& s) {
  std::string t;
  for (char c : s) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "generic" || t == "x") return RealizationKind::GENERIC_X;
  if (t == "deformed" || t == "e") return RealizationKind::DEFORMED_E;
  if (t == "base" || t == "p") return RealizationKind::BASE_P;
  if (t == "finite") return RealizationKind::FINITE;
  return parse_kind(s);
}

ScalarMode resolve_mode(const std::string& s) {
  if (s == "auto") return ScalarMode::Auto;
  if (s == "exact") return ScalarMode::Exact;
  if (s == "float") return ScalarMode::Float;
  throw std::invalid_argument("mode must be auto, exact, or float");
}

Json config_json(const RunConfig& c) {
  Json j;
  j["subcommand"] = c.subcommand;
  j["n"] = c.n;
  j["a"] = c.a;
  j["cutoff"] = c.cutoff;
  j["kind"] = c.kind;
  j["mode"] = c.mode;
  j["tol"] = c.tol;
  j["seed"] = c.seed;
  j["samples"] = c.samples;
  j["format"] = c.format;
  return j;
}

std::shared_ptr<TruncatedModule> build_from(const RunConfig& c) {
  return build_realization(resolve_kind(c.kind), ModuleParams::make(c.n, c.a, c.cutoff),
                           resolve_mode(c.mode));
}

void emit(const RunConfig& c, const std::string& body) {
  if (c.output.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(c.output, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + c.output);
  f << body;
}

[[noreturn]] void usage_error(const std::string& message);

int finish(const RunConfig& c, const std::string& kind, Json body, bool pass,
           const std::string& text) {
  if (c.format == "csv") usage_error("csv output is not available for the " + kind + " subcommand");
  body["pass"] = pass;
  if (c.format == "json") {
    Json rep = wrap_report(kind, Json{{"config", config_json(c)}});
    for (auto& [k, v] : body.items()) rep[k] = std::move(v);
    emit(c, dump_report(rep));
  } else {
    emit(c, text);
  }
  return pass ? 0 : 1;
}

[[noreturn]] void usage_error(const std::string& message) {
  Json err;
  err["schema"] = "wmod-report/1";
  err["kind"] = "error";
  err["message"] = message;
  std::cerr << err.dump() << "\n";
  std::exit(2);
}

int cmd_verify(const RunConfig& c) {
  auto m = build_from(c);
  RelationSuiteResult rel = verify_relations(*m, c.tol);
  WeightDecomposition wd = weight_decomposition(*m);
  const bool pass = rel.pass && wd.degree_one;
  Json body;
  body["module"] = to_json(m->kind(), m->params(), m->exact_mode());
  body["relations"] = to_json(rel);
  body["weights"] = Json{{"space_count", static_cast<int>(wd.spaces.size())},
                         {"max_multiplicity", wd.max_multiplicity},
                         {"degree_one", wd.degree_one}};
  std::ostringstream t;
  t << "relations: max defect " << rel.max_defect << (rel.exact_mode ? " (exact)" : " (float)")
    << ", " << (rel.pass ? "ok" : "FAILED") << "\n"
    << "weights: " << wd.spaces.size() << " spaces, degree one "
    << (wd.degree_one ? "ok" : "FAILED") << "\n";
  return finish(c, "verify", std::move(body), pass, t.str());
}

int cmd_weights(const RunConfig& c) {
  auto m = build_from(c);
  WeightDecomposition wd = weight_decomposition(*m);
  Json body;
  body["module"] = to_json(m->kind(), m->params(), m->exact_mode());
  body["weights"] = to_json(wd);
  std::ostringstream t;
  t << wd.spaces.size() << " weight spaces, max multiplicity " << wd.max_multiplicity
    << ", degree one " << (wd.degree_one ? "yes" : "NO") << "\n";
  return finish(c, "weights", std::move(body), wd.degree_one, t.str());
}

int cmd_branch(const RunConfig& c, int levi) {
  auto m = build_from(c);
  BranchReport br = branch_levi(*m, levi);
  FiniteTypeReport ft = finite_type_check(*m, levi);
  const bool pass = br.closed && br.partition_ok && br.one_per_level && br.distinct_characters &&
                    br.all_simple_profile;
  Json body;
  body["module"] = to_json(m->kind(), m->params(), m->exact_mode());
  body["branching"] = to_json(br, *m);
  body["finite_type"] = to_json(ft);
  std::ostringstream t;
  t << br.summands.size() << " summands at node " << levi << ": partition "
    << (br.partition_ok ? "ok" : "FAILED") << ", one per level "
    << (br.one_per_level ? "ok" : "FAILED") << ", characters "
    << (br.distinct_characters ? "separated" : "COLLIDE") << ", finite type "
    << (ft.finite_type ? "yes" : "no") << "\n";
  return finish(c, "branch", std::move(body), pass, t.str());
}

int cmd_unitarity(const RunConfig& c) {
  auto m = build_from(c);
  AdjointDefectReport r = adjoint_defect(*m, c.tol);
  Json body;
  body["module"] = to_json(m->kind(), m->params(), m->exact_mode());
  body["adjoint"] = to_json(r);
  std::ostringstream t;
  t << (r.formally_unitary ? "formally unitary" : "not unitary") << ": max adjoint defect "
    << r.max_defect << " (tol " << r.tol << ")\n";
  return finish(c, "unitarity", std::move(body), r.formally_unitary, t.str());
}

int cmd_norms(const RunConfig& c, int levels, bool real_form) {
  auto m = build_from(c);
  SparseVector bottom = SparseVector::unit(0, m->exact_mode());
  TowerOptions opts;
  opts.real_form = real_form;
  Json tower = Json::array();
  std::ostringstream t;
  for (int l = 0; l <= levels; ++l) {
    const double v = tower_norm(*m, bottom, l, opts);
    tower.push_back(Json{{"level", l}, {"norm", v}});
    t << "||e(0)||_" << l << " = " << v << "\n";
  }
  Json bounds = Json::array();
  for (int l = 0; l <= levels; ++l) {
    const double b = perturbation_bound(c.n, m->params().a, c.cutoff, l);
    bounds.push_back(Json{{"level", l}, {"bound", b}});
    t << "perturbation bound, level " << l << ": " << b << "\n";
  }
  Json body;
  body["module"] = to_json(m->kind(), m->params(), m->exact_mode());
  body["tower"] = std::move(tower);
  body["perturbation_bounds"] = std::move(bounds);
  return finish(c, "norms", std::move(body), true, t.str());
}

int cmd_bound(const RunConfig& c) {
  const auto params = ModuleParams::make(c.n, c.a, c.cutoff);
  BoundednessProfile p = boundedness_profile(c.n, params.a, c.cutoff);
  if (c.format == "csv") {
    emit(c, profile_csv(p));
    return 0;
  }
  Json body;
  body["a"] = json_complex(params.a);
  body["n"] = c.n;
  body["profile"] = to_json(p);
  std::ostringstream t;
  t << "b(L) over L <= " << c.cutoff << ": global sup " << p.global_sup << ", last-half sup "
    << p.last_half_sup << ", tail limit " << p.tail_limit << "\n";
  return finish(c, "bound", std::move(body), true, t.str());
}

int cmd_global_check(const RunConfig& c, const std::string& gen, double t_param, int buffer) {
  auto m = build_realization(RealizationKind::BASE_P,
                             ModuleParams::make(c.n, std::complex<double>(-c.n, 0.0), c.cutoff),
                             ScalarMode::Float);
  std::vector<GeneratorId> ids;
  if (gen.empty()) {
    for (int j = 0; j < c.n; ++j) {
      ids.push_back({GenKind::IH, j});
      ids.push_back({GenKind::X, j});
      ids.push_back({GenKind::Y, j});
    }
  } else {
    ids.push_back(parse_generator(gen, c.n));
  }
  bool pass = true;
  Json checks = Json::array();
  std::ostringstream t;
  for (GeneratorId g : ids) {
    GlobalInfinitesimalReport r = global_vs_infinitesimal(*m, g, t_param, buffer);
    pass = pass && r.max_discrepancy <= c.tol && r.cocycle_discrepancy <= c.tol;
    checks.push_back(to_json(r));
    t << to_string(g) << ": discrepancy " << r.max_discrepancy << ", cocycle "
      << r.cocycle_discrepancy << "\n";
  }
  Json body;
  body["n"] = c.n;
  body["t"] = t_param;
  body["buffer"] = buffer;
  body["checks"] = std::move(checks);
  return finish(c, "global-check", std::move(body), pass, t.str());
}

int cmd_sphere(const RunConfig& c, int max_degree) {
  std::vector<std::pair<MultiIndex, MultiIndex>> pairs;
  BasisWindow low(c.n, max_degree);
  for (int pos = 0; pos < low.size(); ++pos) pairs.emplace_back(low.label(pos), low.label(pos));
  std::vector<SphereMcEstimate> est = sphere_inner_mc(c.n, pairs, c.samples, c.seed);
  bool pass = true;
  Json rows = Json::array();
  std::ostringstream t, csv;
  csv << "k,closed,estimate_re,estimate_im,std_error,z\n";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const double closed = sphere_inner_closed(c.n, pairs[i].first, pairs[i].second);
    const double diff = std::abs(est[i].estimate - std::complex<double>(closed, 0.0));
    const double z = diff / est[i].std_error;  // nan for an exact zero-variance match
    pass = pass && diff <= 3.0 * est[i].std_error;
    rows.push_back(Json{{"k", to_string(pairs[i].first)},
                        {"closed", closed},
                        {"estimate", json_complex(est[i].estimate)},
                        {"std_error", est[i].std_error},
                        {"z", z}});
    t << to_string(pairs[i].first) << ": closed " << closed << ", mc "
      << est[i].estimate.real() << " +- " << est[i].std_error << " (z=" << z << ")\n";
    csv << to_string(pairs[i].first) << "," << closed << "," << est[i].estimate.real() << ","
        << est[i].estimate.imag() << "," << est[i].std_error << "," << z << "\n";
  }
  if (c.format == "csv") {
    emit(c, csv.str());
    return pass ? 0 : 1;
  }
  Json body;
  body["n"] = c.n;
  body["samples"] = c.samples;
  body["seed"] = c.seed;
  body["surface_area"] = sphere_surface_area(c.n);
  body["moments"] = std::move(rows);
  return finish(c, "sphere", std::move(body), pass, t.str());
}

int cmd_classify(const RunConfig& c, const std::string& form_str, int p, int q, int mm,
                 const std::string& label_str, const std::string& hw_str, int finite_type_node) {
  RealFormId form;
  if (form_str.find('(') != std::string::npos) {
    form = parse_real_form(form_str);
  } else {
    std::string f;
    for (char ch : form_str) f += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    std::ostringstream spec;
    if (f == "su")
      spec << "SU(" << p << "," << q << ")";
    else if (f == "sl")
      spec << "SL(" << mm << ",R)";
    else if (f == "sp" && p > 0 && q > 0)
      spec << "Sp(" << p << "," << q << ")";
    else if (f == "sp")
      spec << "Sp(" << mm << ",R)";
    else
      throw std::invalid_argument("unknown form name: " + form_str);
    form = parse_real_form(spec.str());
  }

  ModuleLabel label;
  if (!label_str.empty()) {
    label = parse_label(label_str);
  } else if (!hw_str.empty()) {
    auto coords = parse_highest_weight(hw_str, form.rank());
    auto shape = hw_from_coords(coords);
    if (!shape)
      throw std::invalid_argument(
          "the highest weight is not of degree-one shape (single node, or adjacent nodes with "
          "coefficients summing to -1)");
    label = hw_to_label(*shape, form.rank());
  } else {
    throw std::invalid_argument("classify needs --label or --hw");
  }

  ClassifyReport rep = classify(form, label);
  Json body;
  body["result"] = to_json(rep);
  std::ostringstream t;
  t << form.str() << " " << label.str() << ":\n"
    << "  integrable: " << to_string(rep.integrable) << " -- " << rep.integrable_reason << "\n"
    << "  unitary: " << to_string(rep.unitary) << " -- " << rep.unitary_reason << "\n";
  if (!rep.hw_text.empty()) t << "  highest weight: " << rep.hw_text << "\n";
  if (finite_type_node >= 0) {
    LabelFiniteType ft = label_finite_type(label, form.rank(), finite_type_node);
    body["finite_type"] = to_json(ft);
    t << "  finite type over node-" << finite_type_node << " Levi: "
      << (ft.finite_type ? "yes" : "no") << " (" << ft.evidence << ")\n";
  }
  return finish(c, "classify", std::move(body), true, t.str());
}

int cmd_suite(const RunConfig& c) {
  std::vector<CriterionResult> results = run_acceptance_suite();
  bool pass = true;
  Json rows = Json::array();
  std::ostringstream t;
  for (const auto& r : results) {
    pass = pass && r.pass;
    rows.push_back(Json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    t << (r.pass ? "PASS" : "FAIL") << "  " << r.id << ". " << r.name << ": " << r.detail << "\n";
  }
  t << (pass ? "all criteria passed" : "SUITE FAILED") << "\n";
  Json body;
  body["criteria"] = std::move(rows);
  return finish(c, "suite", std::move(body), pass, t.str());
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Degree-one weight module workbench"};
  app.require_subcommand(1);

  int levi = 0, levels = 2, buffer = 4, max_degree = 3;
  int p = 0, q = 0, mm = 0, finite_type_node = -1;
  double t_param = 0.1;
  bool real_form = false;
  std::string gen, form_str, label_str, hw_str;

  auto add_common = [&](CLI::App* sub, bool with_module) {
    sub->add_option("--output", cfg.output, "write the report to this file instead of stdout");
    sub->add_option("--format", cfg.format, "text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    if (with_module) {
      sub->add_option("--n", cfg.n, "number of variables")->check(CLI::PositiveNumber);
      sub->add_option("--a", cfg.a, "parameter a (decimal, p/q, or re+imi)");
      sub->add_option("--cutoff", cfg.cutoff, "window cutoff N")->check(CLI::NonNegativeNumber);
      sub->add_option("--kind", cfg.kind, "generic, deformed, base, or finite");
      sub->add_option("--mode", cfg.mode, "auto, exact, or float")
          ->check(CLI::IsMember({"auto", "exact", "float"}));
      sub->add_option("--tol", cfg.tol, "defect tolerance");
    }
  };

  CLI::App* verify = app.add_subcommand("verify", "defining relations and weight degree");
  add_common(verify, true);

  CLI::App* weights = app.add_subcommand("weights", "weight-space decomposition");
  add_common(weights, true);

  CLI::App* branch = app.add_subcommand("branch", "Levi branching at one node");
  add_common(branch, true);
  branch->add_option("--levi", levi, "deleted node (default 0)");

  CLI::App* unitarity = app.add_subcommand("unitarity", "adjoint defect of the weighted pairing");
  add_common(unitarity, true);

  CLI::App* norms = app.add_subcommand("norms", "graded norm tower and perturbation bounds");
  add_common(norms, true);
  norms->add_option("--levels", levels, "top tower level (default 2)");
  norms->add_flag("--real-form", real_form, "tower over the real-form generator set");

  CLI::App* bound = app.add_subcommand("bound", "level-0 boundedness profile b(L)");
  add_common(bound, true);

  CLI::App* global = app.add_subcommand("global-check", "subgroup action vs exponential");
  add_common(global, true);
  global->add_option("--t", t_param, "subgroup parameter (default 0.1)");
  global->add_option("--buffer", buffer, "interior buffer (default 4)");
  global->add_option("--gen", gen, "single generator (e.g. X0); default all");

  CLI::App* sphere = app.add_subcommand("sphere", "monomial sphere integrals, MC vs closed form");
  add_common(sphere, true);
  sphere->add_option("--samples", cfg.samples, "Monte Carlo samples");
  sphere->add_option("--seed", cfg.seed, "RNG seed");
  sphere->add_option("--max-degree", max_degree, "check all |k| up to this degree");

  CLI::App* classify_cmd = app.add_subcommand("classify", "integrability/unitarity tables");
  add_common(classify_cmd, false);
  classify_cmd->add_option("--form", form_str, "SU(p,q), SL(m,R), Sp(m,R), Sp(p,q) or a name with --p/--q/--m");
  classify_cmd->add_option("--p", p, "p for su/sp");
  classify_cmd->add_option("--q", q, "q for su/sp");
  classify_cmd->add_option("--m", mm, "m for sl/sp");
  classify_cmd->add_option("--label", label_str, "module label, e.g. \"N(-1/2,0)\"");
  classify_cmd->add_option("--hw", hw_str, "highest weight, e.g. \"hw: -1/2*w1 + 2*w2\"");
  classify_cmd->add_option("--finite-type-node", finite_type_node,
                           "also test finite restriction over this Levi node");

  CLI::App* suite = app.add_subcommand("suite", "the full acceptance battery");
  add_common(suite, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    usage_error(e.what());
  }

  // Subcommand-specific tolerance defaults when --tol was not given explicitly:
  // the adjoint certificate is pinned at 1e-10, the global comparison at 1e-6.
  if (unitarity->parsed() && unitarity->count("--tol") == 0) cfg.tol = 1e-10;
  if (global->parsed() && global->count("--tol") == 0) cfg.tol = 1e-6;

  try {
    if (verify->parsed()) { cfg.subcommand = "verify"; return cmd_verify(cfg); }
    if (weights->parsed()) { cfg.subcommand = "weights"; return cmd_weights(cfg); }
    if (branch->parsed()) { cfg.subcommand = "branch"; return cmd_branch(cfg, levi); }
    if (unitarity->parsed()) { cfg.subcommand = "unitarity"; return cmd_unitarity(cfg); }
    if (norms->parsed()) { cfg.subcommand = "norms"; return cmd_norms(cfg, levels, real_form); }
    if (bound->parsed()) { cfg.subcommand = "bound"; return cmd_bound(cfg); }
    if (global->parsed()) {
      cfg.subcommand = "global-check";
      return cmd_global_check(cfg, gen, t_param, buffer);
    }
    if (sphere->parsed()) { cfg.subcommand = "sphere"; return cmd_sphere(cfg, max_degree); }
    if (classify_cmd->parsed()) {
      cfg.subcommand = "classify";
      return cmd_classify(cfg, form_str, p, q, mm, label_str, hw_str, finite_type_node);
    }
    if (suite->parsed()) { cfg.subcommand = "suite"; return cmd_suite(cfg); }
  } catch (const std::invalid_argument& e) {
    usage_error(e.what());
  } catch (const std::exception& e) {
    Json err;
    err["schema"] = "wmod-report/1";
    err["kind"] = "error";
    err["message"] = e.what();
    std::cerr << err.dump() << "\n";
    return 1;
  }
  usage_error("no subcommand");
}
