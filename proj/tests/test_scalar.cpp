#include <doctest.h>

#include "wmod/scalar.hpp"

using namespace wmod;

TEST_CASE("radical arithmetic merges square-equivalent radicands") {
  ExactScalar r2 = ExactScalar::radical(mpq_class(2));
  ExactScalar r8 = ExactScalar::radical(mpq_class(8));  // = 2*sqrt(2)

  ExactScalar s = r2 + r8;
  REQUIRE(s.terms().size() == 1);  // merged into 3*sqrt(2)
  CHECK((s * s) == ExactScalar::integer(18));

  CHECK((r2 * r2) == ExactScalar::integer(2));
  CHECK((r2 * r8) == ExactScalar::integer(4));  // sqrt(16)
  CHECK((r2 - r2).is_zero());
}

TEST_CASE("independent radicands make an exact zero test") {
  ExactScalar v = ExactScalar::radical(mpq_class(2)) + ExactScalar::radical(mpq_class(3));
  CHECK(!v.is_zero());
  CHECK(!v.is_gaussian());
  ExactScalar w = v - ExactScalar::radical(mpq_class(3));
  REQUIRE(w.terms().size() == 1);
  CHECK((w * w) == ExactScalar::integer(2));
}

TEST_CASE("perfect-square radicands fold into the rational part") {
  ExactScalar r = ExactScalar::radical(mpq_class(9, 4));
  CHECK(r.is_gaussian());
  CHECK(r.as_gaussian() == GaussianRational{mpq_class(3, 2), 0});
}

TEST_CASE("single-term inverse") {
  ExactScalar v = ExactScalar::rational(mpq_class(3)) * ExactScalar::radical(mpq_class(2));
  CHECK((v * v.inverse()) == ExactScalar::integer(1));
}

TEST_CASE("gaussian conjugation and complex embedding") {
  GaussianRational q{mpq_class(-1), mpq_class(1, 2)};
  CHECK(q.conj() == GaussianRational{mpq_class(-1), mpq_class(-1, 2)});
  CHECK(q.norm2() == mpq_class(5, 4));
  CHECK(q.to_complex() == std::complex<double>(-1.0, 0.5));
}

TEST_CASE("parse_gaussian literals") {
  CHECK(parse_gaussian("-1.5") == GaussianRational{mpq_class(-3, 2), 0});
  CHECK(parse_gaussian("17/10") == GaussianRational{mpq_class(17, 10), 0});
  CHECK(parse_gaussian("i") == GaussianRational{0, 1});
  CHECK(parse_gaussian("-i") == GaussianRational{0, -1});
  CHECK(parse_gaussian("-1+0.5i") == GaussianRational{mpq_class(-1), mpq_class(1, 2)});
  CHECK(parse_gaussian("1/2-1/3i") == GaussianRational{mpq_class(1, 2), mpq_class(-1, 3)});
  CHECK(parse_gaussian("2") == GaussianRational{2, 0});
  CHECK_THROWS(parse_gaussian("zz"));
}

TEST_CASE("integer predicates") {
  CHECK(is_nonneg_integer(parse_gaussian("3")));
  CHECK(!is_nonneg_integer(parse_gaussian("-3")));
  CHECK(!is_nonneg_integer(parse_gaussian("3/2")));
  CHECK(!is_nonneg_integer(parse_gaussian("3+i")));
  CHECK(is_integer(parse_gaussian("-3")));
}

TEST_CASE("mode mixing throws") {
  Scalar e = Scalar::exact_int(2);
  Scalar f = Scalar::flt(2.0);
  CHECK_THROWS_AS((void)(e + f), ModeError);
  CHECK_THROWS_AS((void)(e + e.demote()), ModeError);  // demotion is one-way
  CHECK((f + e.demote()).to_complex() == std::complex<double>(4.0, 0.0));
}
