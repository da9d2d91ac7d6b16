#include <doctest.h>

#include "wmod/action.hpp"

using namespace wmod;

namespace {

void expect_all_relations(const std::shared_ptr<TruncatedModule>& m, double tol) {
  RelationSuiteResult r = verify_relations(*m, tol);
  INFO("kind ", to_string(m->kind()), " max defect ", r.max_defect);
  CHECK(r.pass);
  if (m->exact_mode()) CHECK(r.exact_all_zero);
  CHECK(r.max_defect <= (m->exact_mode() ? 0.0 : tol));
}

}  // namespace

TEST_CASE("defining relations hold exactly in exact mode") {
  expect_all_relations(
      build_realization(RealizationKind::GENERIC_X, ModuleParams::make(2, "-1/2", 5)), 0.0);
  expect_all_relations(
      build_realization(RealizationKind::DEFORMED_E, ModuleParams::make(2, "-1/2", 5)), 0.0);
  expect_all_relations(build_realization(RealizationKind::BASE_P, ModuleParams::make(3, "0", 5)),
                       0.0);
  expect_all_relations(build_realization(RealizationKind::FINITE, ModuleParams::make(2, "5", 5)),
                       0.0);
  // complex parameter, still Gaussian-rational: exact on the x-basis
  expect_all_relations(
      build_realization(RealizationKind::GENERIC_X, ModuleParams::make(2, "-1+0.5i", 5)), 0.0);
}

TEST_CASE("defining relations hold to rounding in float mode") {
  expect_all_relations(build_realization(RealizationKind::DEFORMED_E,
                                         ModuleParams::make(2, "-1+0.5i", 6)),
                       1e-9);
  expect_all_relations(build_realization(RealizationKind::GENERIC_X,
                                         ModuleParams::make(3, std::complex<double>(1.7, 0.0), 5)),
                       1e-9);
}

TEST_CASE("rank one has no same-type or Serre relations but the rest hold") {
  auto m = build_realization(RealizationKind::GENERIC_X, ModuleParams::make(1, "-1/2", 5));
  RelationSuiteResult r = verify_relations(*m, 0.0);
  CHECK(r.pass);
  for (const RelationClassResult& rc : r.classes)
    if (rc.name == "serre" || rc.name == "nonadjacent-same-type") CHECK(rc.pairs == 0);
}

TEST_CASE("interior precondition") {
  auto m = build_realization(RealizationKind::GENERIC_X, ModuleParams::make(2, "-1/2", 3));
  CHECK_THROWS(verify_relations(*m, 0.0));
}

TEST_CASE("single commutators and Serre words directly") {
  auto m = build_realization(RealizationKind::DEFORMED_E, ModuleParams::make(3, "-2/3", 6));
  CHECK(commutator_defect(*m, {GenKind::E, 0}, {GenKind::F, 0}) == 0.0);
  CHECK(commutator_defect(*m, {GenKind::H, 1}, {GenKind::E, 2}) == 0.0);
  CHECK(serre_defect(*m, GenKind::F, 0, 1) == 0.0);
  CHECK(serre_defect(*m, GenKind::E, 2, 1) == 0.0);
  CHECK_THROWS(commutator_defect(*m, {GenKind::E, 0}, {GenKind::E, 1}));  // Serre territory
}

TEST_CASE("boundary accounting: operators that leave the window report mass") {
  auto m = build_realization(RealizationKind::GENERIC_X, ModuleParams::make(2, "-1/2", 4));
  int top = m->window().position({4, 0});
  SparseVector u = SparseVector::unit(top, m->exact_mode());
  SparseVector v = apply(*m, GeneratorId{GenKind::F, 0}, u);
  CHECK(v.is_zero());
  CHECK(v.boundary_mass() == doctest::Approx(4.5));  // |a - |k|| = |-1/2 - 4|
  // level-preserving operators never leak
  SparseVector w = apply(*m, GeneratorId{GenKind::F, 1}, u);
  CHECK(w.boundary_mass() == 0.0);
  CHECK(w.support_size() == 1);
}
