#include "wmod/action.hpp"

#include <stdexcept>

namespace wmod {

SparseVector apply(const TruncatedModule& m, GeneratorId g, const SparseVector& v) {
  SparseVector out(m.exact_mode());
  out.carry_boundary(v.boundary_mass());
  for (const auto& [pos, c] : v.coeffs()) {
    for (const ActionTerm& t : m.action(g, pos)) {
      Scalar w = c * t.coeff;
      if (t.target >= 0)
        out.add(t.target, w);
      else
        out.drop(w);
    }
  }
  return out;
}

SparseVector apply(const TruncatedModule& m, const GeneratorCombo& combo, const SparseVector& v) {
  SparseVector out(m.exact_mode());
  for (const auto& [g, z] : combo.parts) {
    Scalar w = m.exact_mode()
                   ? Scalar(ExactScalar::gaussian({mpq_class(z.real()), mpq_class(z.imag())}))
                   : Scalar::flt(z);
    out = out + apply(m, g, v).scaled(w);
  }
  out.carry_boundary(v.boundary_mass());
  return out;
}

SparseVector apply_word(const TruncatedModule& m, const std::vector<GeneratorId>& word,
                        const SparseVector& v) {
  SparseVector cur = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = apply(m, *it, cur);
  return cur;
}

namespace {

// Interior sweep shared by the relation checks: apply `defect_of` to every
// basis vector whose level leaves `margin` levels of headroom.
template <typename Fn>
double sweep_interior(const TruncatedModule& m, int margin, bool* all_exact_zero, Fn defect_of) {
  double worst = 0.0;
  const BasisWindow& win = m.window();
  for (int pos = 0; pos < win.size(); ++pos) {
    if (degree(win.label(pos)) > m.N() - margin) continue;
    SparseVector d = defect_of(SparseVector::unit(pos, m.exact_mode()));
    if (d.boundary_mass() != 0.0)
      throw std::logic_error("relation sweep left the window; margin too small");
    if (all_exact_zero && !d.is_zero()) *all_exact_zero = false;
    worst = std::max(worst, d.max_abs());
  }
  return worst;
}

}  // namespace

double commutator_defect(const TruncatedModule& m, GeneratorId g1, GeneratorId g2, int margin) {
  CartanData cartan(LieType::A, m.n());
  ExpectedBracket eb = expected_bracket(cartan, g1, g2);
  if (!eb.defined) throw std::invalid_argument("bracket not governed by a pairwise relation");
  return sweep_interior(m, margin, nullptr, [&](const SparseVector& v) {
    SparseVector lhs = apply(m, g1, apply(m, g2, v)) - apply(m, g2, apply(m, g1, v));
    return lhs - apply(m, eb.value, v);
  });
}

double serre_defect(const TruncatedModule& m, GenKind kind, int i, int j, int margin) {
  GeneratorId gi{kind, i}, gj{kind, j};
  return sweep_interior(m, margin, nullptr, [&](const SparseVector& v) {
    SparseVector w1 = apply_word(m, {gi, gi, gj}, v);
    SparseVector w2 = apply_word(m, {gi, gj, gi}, v);
    SparseVector w3 = apply_word(m, {gj, gi, gi}, v);
    Scalar two = m.exact_mode() ? Scalar::exact_int(2) : Scalar::flt(2.0);
    return w1 - w2.scaled(two) + w3;
  });
}

RelationSuiteResult verify_relations(const TruncatedModule& m, double tol) {
  if (m.N() < 4)
    throw std::invalid_argument("relation verification needs N >= 4 for a nonempty interior");
  int n = m.n();
  CartanData cartan(LieType::A, n);

  RelationSuiteResult res;
  res.exact_mode = m.exact_mode();
  res.tol = tol;

  auto run_class = [&](const std::string& name,
                       const std::vector<std::pair<GeneratorId, GeneratorId>>& pairs) {
    RelationClassResult rc;
    rc.name = name;
    rc.pairs = static_cast<int>(pairs.size());
    rc.exact_all_zero = m.exact_mode();
    for (const auto& [g1, g2] : pairs) {
      ExpectedBracket eb = expected_bracket(cartan, g1, g2);
      bool zero = true;
      double d = sweep_interior(m, 2, m.exact_mode() ? &zero : nullptr, [&](const SparseVector& v) {
        SparseVector lhs = apply(m, g1, apply(m, g2, v)) - apply(m, g2, apply(m, g1, v));
        return lhs - apply(m, eb.value, v);
      });
      rc.max_defect = std::max(rc.max_defect, d);
      if (!zero) rc.exact_all_zero = false;
    }
    res.classes.push_back(rc);
  };

  std::vector<std::pair<GeneratorId, GeneratorId>> hh, he, hf, ef, far;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      GeneratorId Hi{GenKind::H, i}, Ej{GenKind::E, j}, Fj{GenKind::F, j};
      if (i < j) hh.emplace_back(Hi, GeneratorId{GenKind::H, j});
      he.emplace_back(Hi, Ej);
      hf.emplace_back(Hi, Fj);
      ef.emplace_back(GeneratorId{GenKind::E, i}, Fj);
      if (i < j && !cartan.adjacent(i, j)) {
        far.emplace_back(GeneratorId{GenKind::E, i}, Ej);
        far.emplace_back(GeneratorId{GenKind::F, i}, Fj);
      }
    }
  }
  run_class("cartan-cartan", hh);
  run_class("cartan-raising", he);
  run_class("cartan-lowering", hf);
  run_class("raising-lowering", ef);
  run_class("nonadjacent-same-type", far);

  RelationClassResult serre;
  serre.name = "serre";
  serre.exact_all_zero = m.exact_mode();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || !cartan.adjacent(i, j)) continue;
      for (GenKind kind : {GenKind::E, GenKind::F}) {
        GeneratorId gi{kind, i}, gj{kind, j};
        bool zero = true;
        double d =
            sweep_interior(m, 3, m.exact_mode() ? &zero : nullptr, [&](const SparseVector& v) {
              SparseVector w1 = apply_word(m, {gi, gi, gj}, v);
              SparseVector w2 = apply_word(m, {gi, gj, gi}, v);
              SparseVector w3 = apply_word(m, {gj, gi, gi}, v);
              Scalar two = m.exact_mode() ? Scalar::exact_int(2) : Scalar::flt(2.0);
              return w1 - w2.scaled(two) + w3;
            });
        ++serre.pairs;
        serre.max_defect = std::max(serre.max_defect, d);
        if (!zero) serre.exact_all_zero = false;
      }
    }
  }
  res.classes.push_back(serre);

  for (const RelationClassResult& rc : res.classes) res.max_defect = std::max(res.max_defect, rc.max_defect);
  res.exact_all_zero = m.exact_mode();
  for (const RelationClassResult& rc : res.classes)
    if (!rc.exact_all_zero) res.exact_all_zero = false;
  res.pass = m.exact_mode() ? res.exact_all_zero : (res.max_defect <= tol);
  return res;
}

}  // namespace wmod
