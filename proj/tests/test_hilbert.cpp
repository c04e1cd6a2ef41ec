#include <doctest.h>

#include <numeric>

#include "magic/enumerate.hpp"
#include "magic/hilbert.hpp"
#include "magic/models.hpp"

using namespace magic;

TEST_CASE("magic 3x3 basis and rays") {
  auto sys = build_system(Family::Magic, {3, 0});
  auto hb = hilbert_basis(sys);
  CHECK(hb.size() == 5);
  CHECK(hb.degree_histogram() == std::map<std::int64_t, std::size_t>{{3, 5}});
  auto rays = extreme_rays(sys);
  CHECK(rays.size() == 4);
  for (const auto& r : rays) CHECK(sys.degree(r) == 3);
  CHECK(cone_dimension(sys) == 3);
}

TEST_CASE("semi-magic bases are permutation matrices") {
  for (std::size_t n : {2u, 3u, 4u}) {
    auto hb = hilbert_basis(build_system(Family::SemiMagic, {n, 0}));
    std::size_t fact = 1;
    for (std::size_t i = 2; i <= n; ++i) fact *= i;
    CHECK(hb.size() == fact);
    CHECK(hb.max_degree() == 1);
  }
}

TEST_CASE("completion agrees with the degree-by-degree strategy") {
  auto sys = build_system(Family::Magic, {4, 0});
  auto a = hilbert_basis(sys);
  auto b = hilbert_basis_by_degree(sys, a.max_degree());
  CHECK(a.vectors() == b.vectors());
}

TEST_CASE("truncated bases are prefixes of the minimal basis") {
  auto sys = build_system(Family::Magic, {4, 0});
  auto full = hilbert_basis(sys);
  auto t = truncated_hilbert_basis(sys, 2);
  CHECK(t.kind == BasisKind::Truncated);
  std::size_t low = 0;
  for (auto [d, c] : full.degree_histogram())
    if (d <= 2) low += c;
  CHECK(t.size() == low);
}

TEST_CASE("decomposition of the natural 4x4 square recombines") {
  auto sys = build_system(Family::Magic, {4, 0});
  auto hb = hilbert_basis(sys);
  auto p = flatten(natural_square_even(4));
  auto d = decompose(p, hb);
  REQUIRE(d.has_value());
  CHECK(recombine(*d, hb) == p);
  std::int64_t total = 0;
  for (auto [i, c] : d->coefficients) total += c * hb.elements[i].degree;
  CHECK(total == 34);
}

TEST_CASE("non-members do not decompose") {
  auto sys = build_system(Family::Magic, {3, 0});
  auto hb = hilbert_basis(sys);
  Point p(9, 0);
  p[0] = 1;
  CHECK_FALSE(decompose(p, hb).has_value());
}

TEST_CASE("irreducibility") {
  auto sys = build_system(Family::Magic, {3, 0});
  auto hb = hilbert_basis(sys);
  for (const auto& e : hb.elements) CHECK(is_irreducible(sys, e.vector));
  CHECK_FALSE(is_irreducible(sys, Point(9, 2)));
}

TEST_CASE("minimal elements") {
  auto m = minimal_elements({{1, 1}, {1, 0}, {2, 0}, {0, 3}});
  CHECK(m == std::vector<Point>{{0, 3}, {1, 0}});
}

TEST_CASE("budget exhaustion raises") {
  auto sys = build_system(Family::MagicCube, {3, 0});
  HilbertOptions o;
  o.budget.max_elements = 3;
  CHECK_THROWS_AS(hilbert_basis(sys, o), BudgetExceeded);
}
