#include <doctest.h>

#include "magic/ehrhart.hpp"
#include "magic/enumerate.hpp"
#include "magic/hilbert.hpp"
#include "oracles.hpp"

using namespace magic;

TEST_CASE("brute-force counts of 3x3 magic squares") {
  auto expect = test_oracles()["magic3_counts"].get<std::vector<long>>();
  auto sys = build_system(Family::Magic, {3, 0});
  PointEnumerator pe(sys);
  for (std::size_t s = 0; s < expect.size(); ++s) CHECK(pe.count(static_cast<std::int64_t>(s)) == expect[s]);
  CHECK(count_points(sys, 3) == 5);
}

TEST_CASE("threaded counting matches serial counting") {
  auto sys = build_system(Family::Magic, {4, 0});
  EnumOptions par;
  par.threads = 4;
  for (std::int64_t s : {0, 3, 6}) CHECK(count_points(sys, s, par) == count_points(sys, s));
}

TEST_CASE("period and dimension of the 3x3 magic polytope") {
  auto sys = build_system(Family::Magic, {3, 0});
  CHECK(quasi_period(sys) == 3);
  CHECK(polytope_dimension(sys) == 2);
}

TEST_CASE("series expansion") {
  RationalGenFn g{{1}, {1, 1}, std::nullopt};
  auto c = expand_series(g, 4);
  for (std::size_t s = 0; s <= 4; ++s) CHECK(c[s] == static_cast<long>(s + 1));
}

TEST_CASE("interpolation recovers the 3x3 magic formula") {
  auto sys = build_system(Family::Magic, {3, 0});
  auto qp = formula_from_oracle(sys, 3, 2);
  CHECK(qp.constituent(0) == std::vector<Rational>{1, Rational(2, 3), Rational(2, 9)});
  CHECK(qp.constituent(1).empty());
  CHECK(qp.eval(12) == 41);
  CHECK(qp.eval(13) == 0);
  CHECK(qp.degree() == 2);
}

TEST_CASE("interpolation errors") {
  std::map<std::int64_t, Integer> few{{0, 1}, {3, 5}};
  CHECK_THROWS_WITH_AS(interpolate(few, 3, 2), doctest::Contains("insufficient samples for residue class"),
                       InvalidArgument);
  std::map<std::int64_t, Integer> bad{{0, 1}, {1, 2}, {2, 4}, {3, 9}};
  CHECK_THROWS_AS(interpolate(bad, 1, 2), Error);
}

TEST_CASE("period minimization") {
  std::map<std::int64_t, Integer> s;
  for (std::int64_t i = 0; i < 12; ++i) s[i] = i + 1;
  auto qp = minimize_period(interpolate(s, 4, 1));
  CHECK(qp.period == 1);
  CHECK(qp.constituent(0) == std::vector<Rational>{1, 1});
}

TEST_CASE("pipeline series equals brute force for 4x4 magic squares") {
  auto hb = hilbert_basis(build_system(Family::Magic, {4, 0}));
  auto g = hilbert_series(hb);
  CHECK_FALSE(g.exact_through.has_value());
  auto c = expand_series(g, 6);
  PointEnumerator pe(hb.system);
  for (std::int64_t s = 0; s <= 6; ++s) CHECK(c[static_cast<std::size_t>(s)] == pe.count(s));
}

TEST_CASE("truncated route is flagged") {
  auto hb = hilbert_basis(build_system(Family::Magic, {4, 0}));
  SeriesOptions o;
  o.route = SeriesOptions::Route::Truncated;
  o.degree = 5;
  auto g = hilbert_series(hb, o);
  REQUIRE(g.exact_through.has_value());
  CHECK(*g.exact_through == 5);
  auto full = expand_series(hilbert_series(hb), 5);
  CHECK(expand_series(g, 5) == full);
  SeriesOptions missing;
  missing.route = SeriesOptions::Route::Truncated;
  CHECK_THROWS_AS(hilbert_series(hb, missing), InvalidArgument);
}

TEST_CASE("formatting") {
  CHECK(format_rational_poly({1, Rational(3, 2), Rational(1, 2)}, "r") == "1/2*r^2 + 3/2*r + 1");
}
