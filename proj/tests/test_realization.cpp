#include <doctest.h>

#include <cmath>

#include "wmod/realization.hpp"

using namespace wmod;

TEST_CASE("mu oracle values") {
  // mu(l)^2 = prod_{j=1..l} (j+n-1)/|j-a-1|
  CHECK(mu(2, {-1.0, 0.0}, 0) == doctest::Approx(1.0));
  CHECK(mu(2, {-1.0, 0.0}, 1) == doctest::Approx(std::sqrt(2.0)));  // 2/|1-(-1)-1| = 2
  CHECK(mu(2, {-1.0, 0.0}, 2) == doctest::Approx(std::sqrt(3.0)));  // * 3/2
  CHECK(mu_sq_exact(2, parse_gaussian("-1"), 2) == mpq_class(3));
  // a = -n makes every factor 1
  for (int l = 0; l <= 5; ++l) CHECK(mu(3, {-3.0, 0.0}, l) == doctest::Approx(1.0));
  CHECK_THROWS(mu(2, {1.0, 0.0}, 3));
}

TEST_CASE("deformation delta oracle values at n=2, a=-1") {
  ModuleParams p = ModuleParams::make(2, "-1", 4);
  // k = (1,0): m^- = k_1 (mu(0)/mu(1) - 1) = 1/sqrt(2) - 1
  auto [minus, plus] = deform_coeffs(2, p, {1, 0}, true);
  CHECK(minus.to_complex().real() == doctest::Approx(1.0 / std::sqrt(2.0) - 1.0));
  // k = (1,0): m^+ = (a-1) mu(2)/mu(1) + 3 = -2 sqrt(3/2) + 3
  CHECK(plus.to_complex().real() == doctest::Approx(3.0 - 2.0 * std::sqrt(1.5)));
  // k = (0,0): m^+ = -sqrt(2) + 2
  auto [m0, p0] = deform_coeffs(2, p, {0, 0}, true);
  CHECK(m0.is_zero());
  CHECK(p0.to_complex().real() == doctest::Approx(2.0 - std::sqrt(2.0)));
  // float path agrees with the exact one
  auto [fm, fp] = deform_coeffs(2, p, {1, 0}, false);
  CHECK(fm.to_complex().real() == doctest::Approx(minus.to_complex().real()));
  CHECK(fp.to_complex().real() == doctest::Approx(plus.to_complex().real()));
}

TEST_CASE("diagonal eigenvalues across realizations") {
  // H_0 acts by a - k_1 - |k| in every realized family (a = -n for BASE_P)
  auto gx = build_realization(RealizationKind::GENERIC_X, ModuleParams::make(2, "-1.5", 4));
  int pos = gx->window().position({1, 1});
  CHECK(gx->h_eigenvalue(0, pos).to_complex().real() == doctest::Approx(-4.5));
  CHECK(gx->h_eigenvalue(1, pos).is_zero());

  auto base = build_realization(RealizationKind::BASE_P, ModuleParams::make(2, "0", 4));
  CHECK(base->h_eigenvalue(0, pos).to_complex().real() == doctest::Approx(-5.0));
  int pos2 = base->window().position({2, 0});
  CHECK(base->h_eigenvalue(1, pos2).to_complex().real() == doctest::Approx(2.0));
}

TEST_CASE("norm-square ratio identities") {
  // e-basis: nsq(k+e_1)/nsq(k) = (k_1+1)/(|k|+n)
  auto base = build_realization(RealizationKind::BASE_P, ModuleParams::make(2, "0", 5));
  const BasisWindow& w = base->window();
  auto ratio = [&](const TruncatedModule& m, MultiIndex k) {
    MultiIndex up = k;
    ++up[0];
    return m.norm_sq(w.position(up)) / m.norm_sq(w.position(k));
  };
  CHECK(ratio(*base, {1, 0}) == doctest::Approx(2.0 / 3.0));
  CHECK(ratio(*base, {1, 2}) == doctest::Approx(2.0 / 5.0));
  CHECK(base->norm_sq(w.position({1, 1})) == doctest::Approx(1.0 / 6.0));

  // x-basis: nsq(k+e_1)/nsq(k) = (k_1+1)/||k|-a|
  auto gx = build_realization(RealizationKind::GENERIC_X, ModuleParams::make(2, "-1.5", 5));
  CHECK(ratio(*gx, {1, 0}) == doctest::Approx(2.0 / 2.5));
  // ||x(k)||^2 = prod k_j! / prod_{j<=|k|} |j-a-1|
  CHECK(gx->norm_sq(w.position({1, 1})) == doctest::Approx(1.0 / (1.5 * 2.5)));
}

TEST_CASE("build guards") {
  CHECK_THROWS(build_realization(RealizationKind::GENERIC_X, ModuleParams::make(2, "3", 4)));
  CHECK_THROWS(build_realization(RealizationKind::DEFORMED_E, ModuleParams::make(2, "0", 4)));
  // float parameter too close to a pole
  CHECK_THROWS(
      build_realization(RealizationKind::GENERIC_X, ModuleParams::make(2, std::complex<double>(2.0 + 1e-14, 0.0), 4)));
  // FINITE needs an exact nonnegative integer and the matching window
  CHECK_THROWS(build_realization(RealizationKind::FINITE, ModuleParams::make(2, "-2", 2)));
  CHECK_THROWS(build_realization(RealizationKind::FINITE, ModuleParams::make(2, "3", 4)));
  CHECK_NOTHROW(build_realization(RealizationKind::FINITE, ModuleParams::make(2, "3", 3)));
  // negative integers are fine for the x-basis families
  CHECK_NOTHROW(build_realization(RealizationKind::GENERIC_X, ModuleParams::make(2, "-2", 4)));
}

TEST_CASE("mode selection") {
  auto m1 = build_realization(RealizationKind::GENERIC_X, ModuleParams::make(2, "-1+0.5i", 4));
  CHECK(m1->exact_mode());  // Gaussian-rational parameter
  auto m2 = build_realization(RealizationKind::DEFORMED_E, ModuleParams::make(2, "-1+0.5i", 4));
  CHECK(!m2->exact_mode());  // radicals of complex moduli: float only
  CHECK_THROWS_AS(build_realization(RealizationKind::DEFORMED_E,
                                    ModuleParams::make(2, "-1+0.5i", 4), ScalarMode::Exact),
                  ModeError);
  auto m3 = build_realization(RealizationKind::DEFORMED_E, ModuleParams::make(2, "-0.5", 4));
  CHECK(m3->exact_mode());
  auto m4 = build_realization(RealizationKind::GENERIC_X, ModuleParams::make(2, std::complex<double>(-1.37, 0.0), 4));
  CHECK(!m4->exact_mode());  // parameter not given exactly
}

TEST_CASE("deformed action at a=-n is entry-identical to the base family") {
  auto def = build_realization(RealizationKind::DEFORMED_E, ModuleParams::make(2, "-2", 5));
  auto base = build_realization(RealizationKind::BASE_P, ModuleParams::make(2, "0", 5));
  REQUIRE(def->exact_mode());
  REQUIRE(base->exact_mode());
  for (int pos = 0; pos < def->dim(); ++pos) {
    for (GeneratorId g : chevalley_generators(2)) {
      const ActionTerms& dt = def->action(g, pos);
      const ActionTerms& bt = base->action(g, pos);
      REQUIRE(dt.size() == bt.size());
      for (size_t i = 0; i < dt.size(); ++i) {
        CHECK(dt[i].target_label == bt[i].target_label);
        CHECK((dt[i].coeff - bt[i].coeff).is_zero());
      }
    }
  }
}

TEST_CASE("change of basis transports the deformed family onto the x-basis one") {
  ChangeOfBasisResult exact = change_of_basis_defect(ModuleParams::make(2, "-1/2", 6));
  CHECK(exact.exact_zero);
  CHECK(exact.max_defect == 0.0);

  ChangeOfBasisResult f = change_of_basis_defect(ModuleParams::make(2, "-1+0.5i", 6));
  CHECK(!f.exact_zero);
  CHECK(f.max_defect <= 1e-10);

  ChangeOfBasisResult f2 = change_of_basis_defect(ModuleParams::make(3, "1.7", 5));
  CHECK(f2.max_defect <= 1e-10);
}

TEST_CASE("action tables in sparse triplet form") {
  auto base = build_realization(RealizationKind::BASE_P, ModuleParams::make(1, "0", 3));
  ActionTableCoo coo = action_table_coo(*base, GeneratorId{GenKind::F, 0});
  // F_0 maps each of the 4 basis vectors up one level; the top one leaves
  CHECK(coo.entries.size() == 3);
  CHECK(coo.dropped == 1);
  auto [r, c, v] = coo.entries[0];
  CHECK(r == 1);
  CHECK(c == 0);
  CHECK(v == std::complex<double>(-1.0, 0.0));  // a - |k| = -1 - 0
}
