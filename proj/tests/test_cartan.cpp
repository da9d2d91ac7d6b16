#include <doctest.h>

#include "wmod/cartan.hpp"

using namespace wmod;

TEST_CASE("type A cartan matrix") {
  CartanData c(LieType::A, 3);
  CHECK(c.entry(0, 0) == 2);
  CHECK(c.entry(0, 1) == -1);
  CHECK(c.entry(1, 0) == -1);
  CHECK(c.entry(0, 2) == 0);
  CHECK(c.adjacent(1, 2));
  CHECK(!c.adjacent(0, 2));
}

TEST_CASE("type C cartan matrix, long root last") {
  CartanData c(LieType::C, 3);
  // alpha_2 is the long root: alpha_2(H_1) = -2, alpha_1(H_2) = -1
  CHECK(c.entry(1, 2) == -2);
  CHECK(c.entry(2, 1) == -1);
  CHECK(c.entry(0, 1) == -1);
}

TEST_CASE("expected brackets, type A") {
  CartanData c(LieType::A, 2);
  GeneratorId H0{GenKind::H, 0}, H1{GenKind::H, 1};
  GeneratorId E0{GenKind::E, 0}, E1{GenKind::E, 1};
  GeneratorId F0{GenKind::F, 0}, F1{GenKind::F, 1};

  ExpectedBracket hh = expected_bracket(c, H0, H1);
  CHECK(hh.defined);
  CHECK(hh.value.parts.empty());

  ExpectedBracket he = expected_bracket(c, H0, E0);  // [H_0,E_0] = 2 E_0
  REQUIRE(he.defined);
  REQUIRE(he.value.parts.size() == 1);
  CHECK(he.value.parts[0].first == E0);
  CHECK(he.value.parts[0].second == std::complex<double>(2.0, 0.0));

  ExpectedBracket he2 = expected_bracket(c, H1, E0);  // [H_1,E_0] = -E_0
  REQUIRE(he2.defined);
  CHECK(he2.value.parts[0].second == std::complex<double>(-1.0, 0.0));

  ExpectedBracket ef = expected_bracket(c, E0, F0);  // [E_0,F_0] = H_0
  REQUIRE(ef.defined);
  REQUIRE(ef.value.parts.size() == 1);
  CHECK(ef.value.parts[0].first == H0);

  ExpectedBracket ef2 = expected_bracket(c, E0, F1);  // commute
  CHECK(ef2.defined);
  CHECK(ef2.value.parts.empty());

  ExpectedBracket ee = expected_bracket(c, E0, E1);  // adjacent: Serre territory
  CHECK(!ee.defined);

  ExpectedBracket hf = expected_bracket(c, H0, F0);  // [H_0,F_0] = -2 F_0
  REQUIRE(hf.defined);
  CHECK(hf.value.parts[0].second == std::complex<double>(-2.0, 0.0));
}

TEST_CASE("nonadjacent raising generators commute") {
  CartanData c(LieType::A, 3);
  ExpectedBracket ee = expected_bracket(c, {GenKind::E, 0}, {GenKind::E, 2});
  CHECK(ee.defined);
  CHECK(ee.value.parts.empty());
}

TEST_CASE("generator names parse and print") {
  CHECK(to_string(GeneratorId{GenKind::IH, 2}) == "iH2");
  CHECK(to_string(GeneratorId{GenKind::E, 0}) == "E0");
  CHECK(parse_generator("X1", 3) == GeneratorId{GenKind::X, 1});
  CHECK(parse_generator("iH0", 3) == GeneratorId{GenKind::IH, 0});
  CHECK_THROWS(parse_generator("E5", 3));
}

TEST_CASE("real-form dictionary round trips") {
  // X_0 = E_0 + F_0 and back: E_0 = (X_0 + i Y_0)/2
  GeneratorCombo x0 = real_form_combo(GeneratorId{GenKind::X, 0});
  REQUIRE(x0.parts.size() == 2);
  GeneratorCombo e0 = chevalley_from_real(GeneratorId{GenKind::E, 0});
  REQUIRE(e0.parts.size() == 2);
  CHECK(e0.parts[0].second == std::complex<double>(0.5, 0.0));
  CHECK(e0.parts[1].second == std::complex<double>(0.0, 0.5));
  // for j >= 1 the compact convention flips the sign on X
  GeneratorCombo e1 = chevalley_from_real(GeneratorId{GenKind::E, 1});
  CHECK(e1.parts[0].second == std::complex<double>(-0.5, 0.0));
}
