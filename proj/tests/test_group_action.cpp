#include <doctest.h>

#include <cmath>
#include <complex>

#include "wmod/group_action.hpp"

using namespace wmod;

namespace {
const std::complex<double> I(0.0, 1.0);
}

TEST_CASE("subgroup matrices: block shapes and unit determinant") {
  const double t = 0.3;
  auto X0 = subgroup_matrix(1, {GenKind::X, 0}, t);
  CHECK(X0(0, 0).real() == doctest::Approx(std::cosh(t)));
  CHECK(X0(0, 1).real() == doctest::Approx(-std::sinh(t)));
  CHECK(X0(1, 0).real() == doctest::Approx(-std::sinh(t)));

  auto Y0 = subgroup_matrix(1, {GenKind::Y, 0}, t);
  CHECK(std::abs(Y0(0, 1) - (-I * std::sinh(t))) < 1e-15);
  CHECK(std::abs(Y0(1, 0) - (I * std::sinh(t))) < 1e-15);

  auto H0 = subgroup_matrix(2, {GenKind::IH, 0}, t);
  CHECK(std::abs(H0(0, 0) - std::exp(-I * t)) < 1e-15);
  CHECK(std::abs(H0(1, 1) - std::exp(I * t)) < 1e-15);
  CHECK(std::abs(H0(2, 2) - 1.0) < 1e-15);

  auto X1 = subgroup_matrix(2, {GenKind::X, 1}, t);
  CHECK(X1(1, 1).real() == doctest::Approx(std::cos(t)));
  CHECK(X1(1, 2).real() == doctest::Approx(-std::sin(t)));
  CHECK(X1(2, 1).real() == doctest::Approx(std::sin(t)));
  CHECK(std::abs(X1(0, 0) - 1.0) < 1e-15);

  for (GenKind kind : {GenKind::IH, GenKind::X, GenKind::Y})
    for (int j : {0, 1})
      CHECK(std::abs(subgroup_matrix(2, {kind, j}, 0.7).determinant() - 1.0) < 1e-12);

  CHECK_THROWS(subgroup_matrix(2, {GenKind::E, 0}, t));
  CHECK_THROWS(subgroup_matrix(2, {GenKind::X, 2}, t));
}

TEST_CASE("coefficient action is the identity at t=0") {
  auto m = build_realization(RealizationKind::BASE_P, ModuleParams::make(2, "-2", 6),
                             ScalarMode::Float);
  for (GenKind kind : {GenKind::X, GenKind::Y, GenKind::IH}) {
    auto G = mobius_action_matrix(*m, {kind, 0}, 0.0);
    CHECK((G - Eigen::MatrixXcd::Identity(m->dim(), m->dim())).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("derivative of the coefficient action is the infinitesimal action") {
  // central-difference quotient at h=1e-5 on the interior block, against the
  // matrix of the real-form generator; truncation ~4e-8, roundoff ~1e-9
  auto m = build_realization(RealizationKind::BASE_P, ModuleParams::make(1, "-1", 8),
                             ScalarMode::Float);
  const double h = 1e-5;
  for (GenKind kind : {GenKind::X, GenKind::Y, GenKind::IH}) {
    GeneratorId g{kind, 0};
    auto Gp = mobius_action_matrix(*m, g, h);
    auto Gm = mobius_action_matrix(*m, g, -h);
    auto D = ((Gp - Gm) / (2.0 * h)).eval();
    auto A = infinitesimal_matrix(*m, g);
    const int cut = m->window().cumulative_dimension(6);
    double worst = 0.0;
    for (int i = 0; i < cut; ++i)
      for (int j = 0; j < cut; ++j) worst = std::max(worst, std::abs(D(i, j) - A(i, j)));
    CHECK(worst < 1e-6);
  }
}

TEST_CASE("first-order action on low monomials, n=1: X0 sends 1 to -z and z to 1-2z^2") {
  auto m = build_realization(RealizationKind::BASE_P, ModuleParams::make(1, "-1", 8),
                             ScalarMode::Float);
  auto A = infinitesimal_matrix(*m, {GenKind::X, 0});
  const int p0 = m->window().position({0});
  const int p1 = m->window().position({1});
  const int p2 = m->window().position({2});
  CHECK(std::abs(A(p1, p0) - (-1.0)) < 1e-14);   // X0 . 1 = -z
  CHECK(std::abs(A(p0, p1) - 1.0) < 1e-14);      // X0 . z = 1 - 2 z^2
  CHECK(std::abs(A(p2, p1) - (-2.0)) < 1e-14);
  // and the coefficient action reproduces it to first order
  const double h = 1e-5;
  auto G = mobius_action_matrix(*m, {GenKind::X, 0}, h);
  CHECK(std::abs((G(p0, p1) - 0.0) / h - 1.0) < 1e-4);
  CHECK(std::abs((G(p2, p1) - 0.0) / h + 2.0) < 1e-4);
}

TEST_CASE("global vs infinitesimal: interior agreement and cocycle, n=2") {
  auto m = build_realization(RealizationKind::BASE_P, ModuleParams::make(2, "-2", 10),
                             ScalarMode::Float);
  for (GenKind kind : {GenKind::IH, GenKind::X, GenKind::Y}) {
    for (int j : {0, 1}) {
      auto r = global_vs_infinitesimal(*m, {kind, j}, 0.1, 4);
      CHECK(r.max_discrepancy <= 1e-6);
      CHECK(r.cocycle_discrepancy <= 1e-6);
      if (j >= 1) CHECK(r.max_discrepancy <= 1e-12);  // compact directions are level-preserving
    }
  }
}

TEST_CASE("truncation discrepancy of the noncompact subgroups decays fast in t") {
  auto m = build_realization(RealizationKind::BASE_P, ModuleParams::make(2, "-2", 10),
                             ScalarMode::Float);
  for (GenKind kind : {GenKind::X, GenKind::Y}) {
    auto full = global_vs_infinitesimal(*m, {kind, 0}, 0.1, 4);
    auto half = global_vs_infinitesimal(*m, {kind, 0}, 0.05, 4);
    CHECK(full.max_discrepancy / half.max_discrepancy >= 8.0);
  }
}

TEST_CASE("buffer guard") {
  auto m = build_realization(RealizationKind::BASE_P, ModuleParams::make(2, "-2", 6),
                             ScalarMode::Float);
  CHECK_THROWS(global_vs_infinitesimal(*m, {GenKind::X, 0}, 0.1, 0));
  CHECK_THROWS(global_vs_infinitesimal(*m, {GenKind::X, 0}, 0.1, 7));
}
