#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "wmod/sphere.hpp"

using namespace wmod;

TEST_CASE("surface area of the unit sphere in C^n") {
  const double pi = 3.14159265358979323846;
  CHECK(sphere_surface_area(1) == doctest::Approx(2 * pi));
  CHECK(sphere_surface_area(2) == doctest::Approx(2 * pi * pi));
  CHECK(sphere_surface_area(3) == doctest::Approx(pi * pi * pi));
}

TEST_CASE("closed-form monomial moments: k!(n-1)!/(|k|+n-1)!") {
  // n=1: every |z^k| is 1 on the circle
  for (int k = 0; k <= 5; ++k) CHECK(sphere_inner_closed(1, {k}, {k}) == doctest::Approx(1.0));
  CHECK(sphere_inner_closed(2, {1, 0}, {1, 0}) == doctest::Approx(0.5));
  CHECK(sphere_inner_closed(2, {1, 1}, {1, 1}) == doctest::Approx(1.0 / 6));
  CHECK(sphere_inner_closed(2, {2, 0}, {2, 0}) == doctest::Approx(1.0 / 3));
  CHECK(sphere_inner_closed(3, {1, 0, 0}, {1, 0, 0}) == doctest::Approx(1.0 / 3));
  // distinct exponents integrate to zero
  CHECK(sphere_inner_closed(2, {1, 0}, {0, 1}) == 0.0);
  CHECK(sphere_inner_closed(1, {1}, {2}) == 0.0);
}

TEST_CASE("Monte Carlo matches the closed form at a fixed seed") {
  std::vector<std::pair<MultiIndex, MultiIndex>> pairs = {
      {{1, 0}, {1, 0}}, {{1, 1}, {1, 1}}, {{1, 0}, {0, 1}}};
  auto est = sphere_inner_mc(2, pairs, 200000, 7);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const double closed = sphere_inner_closed(2, pairs[i].first, pairs[i].second);
    CHECK(std::abs(est[i].estimate - std::complex<double>(closed, 0)) <=
          3.0 * est[i].std_error);
    CHECK(est[i].std_error > 0.0);
    CHECK(est[i].samples == 200000);
  }
}

TEST_CASE("estimates are chunk-deterministic, independent of the worker count") {
  std::vector<std::pair<MultiIndex, MultiIndex>> pairs = {{{2, 0}, {2, 0}}, {{1, 0}, {0, 1}}};
  setenv("WMOD_THREADS", "1", 1);
  auto one = sphere_inner_mc(2, pairs, 64000, 99);
  setenv("WMOD_THREADS", "3", 1);
  auto three = sphere_inner_mc(2, pairs, 64000, 99);
  unsetenv("WMOD_THREADS");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    CHECK(one[i].estimate == three[i].estimate);
    CHECK(one[i].std_error == three[i].std_error);
  }
}

TEST_CASE("guards: sample floor and index lengths") {
  CHECK_THROWS(sphere_inner_mc(2, {{{1, 0}, {1, 0}}}, 10, 1));
  CHECK_THROWS(sphere_inner_mc(2, {{{1}, {1, 0}}}, 5000, 1));
  CHECK_THROWS(sphere_inner_closed(2, {1}, {1, 0}));
}
