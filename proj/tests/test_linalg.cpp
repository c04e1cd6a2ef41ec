#include <doctest.h>

#include "magic/linalg.hpp"
#include "magic/models.hpp"

using namespace magic;

TEST_CASE("rank and kernel of small matrices") {
  auto m = IntMatrix::from_rows(std::vector<std::vector<long>>{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rational_rank(m) == 2);
  auto k = integer_kernel_basis(m);
  REQUIRE(k.size() == 1);
  CHECK(is_zero(m.apply(k[0])));
  CHECK(vector_gcd(k[0]) == 1);
}

TEST_CASE("kernel of the 4x4 magic system has eight vectors") {
  auto sys = build_system(Family::Magic, {4, 0});
  auto k = integer_kernel_basis(sys.matrix);
  CHECK(k.size() == 8);
  CHECK(sys.variables() - rational_rank(sys.matrix) == 8);
  for (const auto& v : k) CHECK(is_zero(sys.matrix.apply(v)));
}

TEST_CASE("5x5x5 magic cube kernels") {
  const std::size_t n = 5;
  auto at = [n](std::size_t i, std::size_t j, std::size_t k) { return (i * n + j) * n + k; };
  // Every line and space diagonal sums to zero.
  std::vector<std::vector<long>> rows;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (int dir = 0; dir < 3; ++dir) {
        std::vector<long> r(n * n * n, 0);
        for (std::size_t t = 0; t < n; ++t) r[dir == 0 ? at(t, a, b) : dir == 1 ? at(a, t, b) : at(a, b, t)] = 1;
        rows.push_back(r);
      }
  for (int flip = 0; flip < 4; ++flip) {
    std::vector<long> r(n * n * n, 0);
    for (std::size_t t = 0; t < n; ++t) {
      std::size_t j = flip & 1 ? n - 1 - t : t, k = flip & 2 ? n - 1 - t : t;
      r[at(t, j, k)] = 1;
    }
    rows.push_back(r);
  }
  auto zero_sum = IntMatrix::from_rows(rows);
  CHECK(integer_kernel_basis(zero_sum).size() == (n - 1) * (n - 1) * (n - 1) - 4);
  // The cone system leaves the common sum free, so its kernel has one more vector.
  auto sys = build_system(Family::MagicCube, {n, 0});
  CHECK(integer_kernel_basis(sys.matrix).size() == (n - 1) * (n - 1) * (n - 1) - 3);
}

TEST_CASE("kernel of a full-rank square matrix is empty") {
  auto m = IntMatrix::from_rows(std::vector<std::vector<long>>{{2, 1}, {1, 1}});
  CHECK(integer_kernel_basis(m).empty());
}

TEST_CASE("kernel lattice is saturated") {
  // 2x - 4y = 0 has kernel spanned by (2, 1), not (4, 2).
  auto k = integer_kernel_basis(IntMatrix::from_rows(std::vector<std::vector<long>>{{2, -4}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == to_int_vector({2, 1}));
}

TEST_CASE("hermite form is echelon with positive pivots") {
  auto h = hermite_form(IntMatrix::from_rows(std::vector<std::vector<long>>{{4, 6, 2}, {2, 3, 5}}));
  REQUIRE(h.pivots.size() == 2);
  for (std::size_t r = 0; r < h.pivots.size(); ++r) {
    CHECK(h.h.at(r, h.pivots[r]) > 0);
    for (std::size_t c = 0; c < h.pivots[r]; ++c) CHECK(h.h.at(r, c) == 0);
  }
}

TEST_CASE("primitive rays and denominators") {
  RationalVector v{Rational(1, 3), Rational(2, 3), Rational(0)};
  CHECK(primitive_ray(v) == to_int_vector({1, 2, 0}));
  CHECK(lcm_of_denominators({v, {Rational(1, 4)}}) == 12);
}

TEST_CASE("reduced row echelon over Q") {
  auto e = reduced_row_echelon({{Rational(2), Rational(4)}, {Rational(1), Rational(3)}}, 2);
  CHECK(e.pivots.size() == 2);
  CHECK(e.rows[0][0] == 1);
  CHECK(e.rows[0][1] == 0);
}
