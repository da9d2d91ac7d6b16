#include <doctest.h>

#include <stdexcept>

#include "wmod/classify.hpp"

using namespace wmod;

TEST_CASE("real-form parsing and rank") {
  RealFormId su = parse_real_form("SU(1,2)");
  CHECK(su.kind == RealFormKind::SU_PQ);
  CHECK(su.p == 1);
  CHECK(su.q == 2);
  CHECK(su.rank() == 2);
  CHECK(su.str() == "SU(1,2)");
  CHECK(parse_real_form("SL(4,R)").rank() == 3);
  CHECK(parse_real_form("Sp(2,R)").rank() == 2);
  CHECK(parse_real_form("Sp(1,1)").rank() == 2);
  CHECK(parse_real_form(" SU( 2 , 2 ) ").rank() == 3);
  // rank-1 and degenerate forms sit outside the tables
  CHECK_THROWS_AS(parse_real_form("SU(1,1)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_real_form("SL(2,R)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_real_form("SU(0,2)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_real_form("E8"), std::invalid_argument);
  CHECK_THROWS_AS(parse_real_form("SU(1,2)x"), std::invalid_argument);
}

TEST_CASE("label parsing round trips") {
  CHECK(parse_label("N(-1/2,0)").str() == "N(-1/2,0)");
  CHECK(parse_label("N(-0.5,0)").str() == "N(-1/2,0)");
  CHECK(parse_label("N(-1,3)^*").str() == "N(-1,3)^*");
  CHECK(parse_label("N(-1,3)^*").contragredient);
  CHECK(parse_label("M(-1,-2)").family == 'M');
  CHECK(parse_label("N(a,0)").entries[0].kind == LabelEntry::Kind::SymA);
  CHECK(parse_label("N(-1,-1-m,0)").entries[1].kind == LabelEntry::Kind::NegOneMinusM);
  CHECK(parse_label("N(m,0)").str() == "N(m,0)");
  CHECK(parse_label("N(-1,-1)").entries[1].is_value(-1));
  CHECK_THROWS_AS(parse_label("Q(1,0)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_label("N()"), std::invalid_argument);
  CHECK_THROWS_AS(parse_label("N(1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_label("N(1,2)x"), std::invalid_argument);
}

TEST_CASE("label-to-weight dictionary") {
  auto s = label_to_hw(parse_label("N(-1/2,0)"), 2);
  REQUIRE(s.has_value());
  CHECK(s->shape == 1);
  CHECK(s->a.str() == "-1/2");

  // the trailing slot after a run of -1 entries reads off the w_rank coefficient
  s = label_to_hw(parse_label("N(-1,3)"), 2);
  REQUIRE(s.has_value());
  CHECK(s->shape == 3);
  CHECK(s->a.str() == "-4");
  CHECK(hw_string(*s, 2) == "(-4)*w2");

  s = label_to_hw(parse_label("N(-1,-1)"), 2);  // trivial tower
  REQUIRE(s.has_value());
  CHECK(s->shape == 3);
  CHECK(s->a.is_value(0));

  s = label_to_hw(parse_label("N(-1,2,0)"), 3);
  REQUIRE(s.has_value());
  CHECK(s->shape == 2);
  CHECK(s->i == 1);
  CHECK(s->a.str() == "-3");
  CHECK(hw_string(*s, 3) == "(-3)*w1 + (2)*w2");

  CHECK(label_to_hw(parse_label("N(5)"), 1)->shape == 1);
  CHECK(label_to_hw(parse_label("N(-1)"), 1)->a.is_value(0));
  CHECK(!label_to_hw(parse_label("N(1,1)"), 2).has_value());
  CHECK(!label_to_hw(parse_label("M(-1,-1)"), 2).has_value());
  CHECK_THROWS_AS(label_to_hw(parse_label("N(1,0)"), 3), std::invalid_argument);
}

TEST_CASE("weight-to-label inverts the dictionary") {
  for (const char* text : {"N(-1/2,0)", "N(-1,3)", "N(-1,-1)"}) {
    auto s = label_to_hw(parse_label(text), 2);
    REQUIRE(s.has_value());
    CHECK(hw_to_label(*s, 2).str() == parse_label(text).str());
  }
  auto s2 = label_to_hw(parse_label("N(-1,2,0)"), 3);
  CHECK(hw_to_label(*s2, 3).str() == "N(-1,2,0)");
  HwShape bad;
  bad.shape = 2;
  bad.i = 2;
  CHECK_THROWS_AS(hw_to_label(bad, 2), std::invalid_argument);
}

TEST_CASE("contragredient flips the diagram") {
  HwShape s;
  s.shape = 1;
  s.a = label_to_hw(parse_label("N(-1/2,0)"), 2)->a;
  HwShape d = hw_dual(s, 2);
  CHECK(d.shape == 3);
  CHECK(d.a.str() == "-1/2");
  CHECK(hw_dual(d, 2).shape == 1);

  auto mid = label_to_hw(parse_label("N(-1,2,0)"), 3);  // shape 2, i=1, a=-3
  HwShape dm = hw_dual(*mid, 3);
  CHECK(dm.shape == 2);
  CHECK(dm.i == 2);
  CHECK(dm.a.str() == "2");
  HwShape back = hw_dual(dm, 3);
  CHECK(back.i == mid->i);
  CHECK(back.a.str() == mid->a.str());

  // rank 1 canonicalizes the dual back to shape 1
  HwShape r1 = *label_to_hw(parse_label("N(5)"), 1);
  CHECK(hw_dual(r1, 1).shape == 1);
  CHECK(hw_dual(r1, 1).a.is_value(5));
}

TEST_CASE("highest-weight parsing and shape recognition") {
  auto c = parse_highest_weight("hw: -1/2*w1 + 2*w2", 2);
  CHECK(c[0].str() == "-1/2");
  CHECK(c[1].str() == "2");
  c = parse_highest_weight("-w1", 2);
  CHECK(c[0].str() == "-1");
  CHECK(c[1].is_zero());
  CHECK(parse_highest_weight("w2", 2)[1].str() == "1");
  CHECK_THROWS_AS(parse_highest_weight("2*w3", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_highest_weight("3*x1", 2), std::invalid_argument);

  auto shape = hw_from_coords(parse_highest_weight("-1/2*w1", 2));
  REQUIRE(shape.has_value());
  CHECK(shape->shape == 1);
  shape = hw_from_coords(parse_highest_weight("-4*w2", 2));
  CHECK(shape->shape == 3);
  shape = hw_from_coords(parse_highest_weight("-3*w1+2*w2", 3));
  REQUIRE(shape.has_value());
  CHECK(shape->shape == 2);
  CHECK(shape->i == 1);
  // adjacent coefficients must sum to -1 to name a two-node tower
  CHECK(!hw_from_coords(parse_highest_weight("-3*w1+1*w2", 3)).has_value());
  CHECK(!hw_from_coords(parse_highest_weight("5*w2", 3)).has_value());
  CHECK(hw_from_coords(parse_highest_weight("0*w1", 2))->a.is_value(0));
}

TEST_CASE("finite-dimensionality of the tower members") {
  auto s = label_to_hw(parse_label("N(3,0)"), 2);
  DimensionInfo di = finite_dimensional_info(*s, 2);
  CHECK(di.finite == Tri::Yes);
  CHECK(di.dim == 10);  // C(5,2)
  di = finite_dimensional_info(*label_to_hw(parse_label("N(-1,-1)"), 2), 2);
  CHECK(di.finite == Tri::Yes);
  CHECK(di.dim == 1);
  di = finite_dimensional_info(*label_to_hw(parse_label("N(-1/2,0)"), 2), 2);
  CHECK(di.finite == Tri::No);
  di = finite_dimensional_info(*label_to_hw(parse_label("N(-1,2,0)"), 3), 3);
  CHECK(di.finite == Tri::No);  // two-node weights are never dominant
  di = finite_dimensional_info(*label_to_hw(parse_label("N(m,0)"), 2), 2);
  CHECK(di.finite == Tri::Yes);
  // N(-1,-1-m) reads as the weight m*w2: the finite family, not its partner
  di = finite_dimensional_info(*label_to_hw(parse_label("N(-1,-1-m)"), 2), 2);
  CHECK(di.finite == Tri::Yes);
  di = finite_dimensional_info(*label_to_hw(parse_label("N(-1,m)"), 2), 2);
  CHECK(di.finite == Tri::No);
  di = finite_dimensional_info(*label_to_hw(parse_label("N(a,0)"), 2), 2);
  CHECK(di.finite == Tri::Conditional);
}

namespace {
ClassifyReport run(const char* form, const char* label) {
  return classify(parse_real_form(form), parse_label(label));
}
}  // namespace

TEST_CASE("integrability and unitarity: concrete queries") {
  ClassifyReport r = run("SU(1,2)", "N(-1/2,0)");
  CHECK(r.integrable == Verdict::Yes);
  CHECK(r.unitary == Verdict::Yes);
  CHECK(r.claim_key == "su-principal-tower");
  CHECK(r.unitary_reason.find("negative real") != std::string::npos);
  CHECK(!r.matched_dual);

  r = run("SU(1,2)", "N(1.7,0)");
  CHECK(r.integrable == Verdict::Yes);
  CHECK(r.unitary == Verdict::No);
  CHECK(r.unitary_reason.find("fails") != std::string::npos);

  r = run("SU(3,1)", "N(-1,-1,2.5)");
  CHECK(r.integrable == Verdict::Yes);
  CHECK(r.unitary == Verdict::Yes);
  CHECK(r.claim_key == "su-antiholomorphic-tower");
  CHECK(r.unitary_reason.find("positive real") != std::string::npos);

  r = run("SU(3,1)", "N(-1,-1,-0.5)");
  CHECK(r.integrable == Verdict::Yes);
  CHECK(r.unitary == Verdict::No);

  r = run("SU(3,1)", "N(-1,-2,0)");
  CHECK(r.integrable == Verdict::Yes);
  CHECK(r.unitary == Verdict::Yes);
  CHECK(r.claim_key == "su-antiholomorphic-series");

  r = run("SU(2,2)", "N(-1,-1,2)");
  CHECK(r.claim_key == "su-intermediate-series-upper");
  CHECK(r.unitary == Verdict::Yes);
  r = run("SU(2,2)", "N(-1,-2,0)");
  CHECK(r.claim_key == "su-intermediate-series-lower");
  CHECK(r.unitary == Verdict::Yes);

  r = run("SU(2,2)", "N(-0.5,0,0)");
  CHECK(r.integrable == Verdict::No);
  CHECK(r.unitary == Verdict::No);
  CHECK(r.claim_key == "su-no-match");
  CHECK(r.integrable_reason.find("N(-1,-1,-1/2)") != std::string::npos);
}

TEST_CASE("a label can match through its contragredient") {
  ClassifyReport r = run("SU(1,2)", "N(-1,1.5)");
  CHECK(r.integrable == Verdict::Yes);
  CHECK(r.unitary == Verdict::Yes);
  CHECK(r.matched_dual);
  CHECK(r.claim_key == "su-principal-tower");
  CHECK(r.integrable_reason.find("N(-5/2,0)") != std::string::npos);
}

TEST_CASE("symbolic family queries") {
  ClassifyReport r = run("SU(1,2)", "N(a,0)");
  CHECK(r.integrable == Verdict::Conditional);
  CHECK(r.unitary == Verdict::Conditional);
  CHECK(r.integrable_reason.find("not a nonnegative integer") != std::string::npos);
  CHECK(r.unitary_reason.find("negative real") != std::string::npos);
  CHECK(r.finite_dimensional == Tri::Conditional);

  r = run("SU(1,2)", "N(-1,m)");
  CHECK(r.integrable == Verdict::Yes);
  CHECK(r.unitary == Verdict::Yes);
  CHECK(r.claim_key == "su-holomorphic-series");

  r = run("SU(3,1)", "N(-1,-1,a)");
  CHECK(r.integrable == Verdict::Conditional);
  CHECK(r.integrable_reason.find("not a negative integer") != std::string::npos);
  CHECK(r.unitary_reason.find("positive real") != std::string::npos);
}

TEST_CASE("finite-dimensional members integrate but are almost never unitary") {
  ClassifyReport r = run("SU(1,2)", "N(2,0)");
  CHECK(r.integrable == Verdict::Yes);
  CHECK(r.claim_key == "su-finite-dimensional");
  CHECK(r.finite_dimensional == Tri::Yes);
  CHECK(r.unitary == Verdict::No);

  r = run("SU(1,2)", "N(0,0)");  // trivial member
  CHECK(r.integrable == Verdict::Yes);
  CHECK(r.unitary == Verdict::Yes);

  r = run("SU(1,2)", "N(-1,-4)");  // reads as 3*w2, dimension C(5,2)
  CHECK(r.integrable == Verdict::Yes);
  CHECK(r.unitary == Verdict::No);
  CHECK(r.dimension_note.find("10") != std::string::npos);
}

TEST_CASE("split form: integrable exactly when finite dimensional") {
  ClassifyReport r = run("SL(4,R)", "N(3,0,0)");
  CHECK(r.integrable == Verdict::Yes);
  CHECK(r.unitary == Verdict::No);
  CHECK(r.claim_key == "sl-split-finite-dimensional");
  r = run("SL(4,R)", "N(0,0,0)");
  CHECK(r.unitary == Verdict::Yes);
  r = run("SL(4,R)", "N(a,0,0)");
  CHECK(r.integrable == Verdict::Conditional);
  CHECK(r.claim_key == "sl-split-conditional");
  r = run("SL(4,R)", "N(-0.5,0,0)");
  CHECK(r.integrable == Verdict::No);
  CHECK(r.claim_key == "sl-split-infinite");
}

TEST_CASE("symplectic forms") {
  ClassifyReport r = run("Sp(2,R)", "M(-1,-1)");
  CHECK(r.integrable == Verdict::Yes);
  CHECK(r.unitary == Verdict::Yes);
  CHECK(r.claim_key == "sp-metaplectic-even");
  CHECK(r.hw_text == "(-1/2)*w2");

  r = run("Sp(2,R)", "M(-1,-2)");
  CHECK(r.claim_key == "sp-metaplectic-odd");
  CHECK(r.hw_text == "w1 + (-3/2)*w2");

  r = run("Sp(2,R)", "M(-2,-1)");
  CHECK(r.integrable == Verdict::No);
  CHECK(r.claim_key == "sp-metaplectic-no-match");

  r = run("Sp(1,1)", "M(-1,-1)");
  CHECK(r.integrable == Verdict::No);
  CHECK(r.unitary == Verdict::No);
  CHECK(r.claim_key == "sp-quaternionic-none");

  CHECK_THROWS_AS(run("Sp(2,R)", "M(m,-1)"), std::invalid_argument);
  CHECK_THROWS_AS(run("Sp(2,R)", "N(-1,-1)"), std::invalid_argument);
  CHECK_THROWS_AS(run("Sp(2,R)", "M(-1)"), std::invalid_argument);
  CHECK_THROWS_AS(run("SU(1,2)", "M(-1,-1)"), std::invalid_argument);
}

TEST_CASE("label-level finite-type check") {
  LabelFiniteType ft = label_finite_type(parse_label("N(-0.5,0,0)"), 3, 0);
  CHECK(ft.finite_type);
  CHECK(ft.evidence.find("every node") != std::string::npos);

  ft = label_finite_type(parse_label("N(-1,-1,-0.5)"), 3, 0);
  CHECK(!ft.finite_type);
  CHECK(ft.evidence.find("H2") != std::string::npos);
  CHECK(ft.evidence.find("not a nonnegative integer") != std::string::npos);

  // two-node weight: dropping node 0 keeps H1, which acts by 2
  ft = label_finite_type(parse_label("N(-1,2,0)"), 3, 0);
  CHECK(ft.finite_type);
  ft = label_finite_type(parse_label("N(-1,2,0)"), 3, 1);
  CHECK(!ft.finite_type);
  CHECK(ft.evidence.find("H0") != std::string::npos);

  CHECK_THROWS_AS(label_finite_type(parse_label("N(a,0)"), 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(label_finite_type(parse_label("M(-1,-1)"), 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(label_finite_type(parse_label("N(1,1)"), 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(label_finite_type(parse_label("N(3,0)"), 2, 5), std::invalid_argument);
}
