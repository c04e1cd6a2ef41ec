#include <doctest.h>

#include "fixtures.hpp"
#include "magic/enumerate.hpp"
#include "magic/hilbert.hpp"
#include "magic/symmetry.hpp"

using namespace magic;

TEST_CASE("permutation algebra") {
  Permutation p{1, 2, 0};
  CHECK(is_permutation(p));
  CHECK_FALSE(is_permutation({0, 0, 1}));
  CHECK(then(p, inverse(p)) == identity_permutation(3));
  Point x{10, 20, 30};
  CHECK(act(p, x) == Point{20, 30, 10});
  Permutation q{0, 2, 1};
  CHECK(act(then(p, q), x) == act(q, act(p, x)));
}

TEST_CASE("square operations") {
  Square a{{1, 2}, {3, 4}};
  CHECK(magic::apply(transpose_op(2), a) == Square{{1, 3}, {2, 4}});
  CHECK(magic::apply(row_swap(2, 0, 1), a) == Square{{3, 4}, {1, 2}});
  auto r = rotate90(4);
  auto id = SquareOp::identity(4);
  CHECK((r.then(r).then(r).then(r)) == id);
  CHECK_FALSE(r.is_identity());
  auto op = reflect_rows(4).then(transpose_op(4));
  CHECK(SquareOp::from_cells(op.cells(), 4) == op);
  auto sq = natural_square_even(4);
  CHECK(magic::apply(op, sq) == magic::apply(transpose_op(4), magic::apply(reflect_rows(4), sq)));
  CHECK(parse_square_op("(r1,r3)", 8) == row_swap(8, 0, 2));
  CHECK(parse_square_op("R", 8) == rotate90(8));
  CHECK_THROWS_AS(parse_square_op("(r1,r9)", 8), InvalidArgument);
  CHECK_THROWS_AS(parse_square_op("spin", 8), InvalidArgument);
}

TEST_CASE("line-swap group orders") {
  auto g = group_g8();
  CHECK(gf2_rank(g) == 8);
  CHECK(gf2_order(g) == 256);
  CHECK(group_order(g) == 256);
  CHECK(generators_commute(g));
  auto s = group_s16();
  CHECK(gf2_rank(s) == 16);
  CHECK(group_order(s) == 65536);
  auto h = group_h16();
  CHECK(gf2_rank(h) == 24);
  CHECK(gf2_order(h) == Integer(1) << 24);
  CHECK(generators_are_involutions(h));
  CHECK_FALSE(generators_commute(h));
  // Adjacent transpositions generate the full symmetric group on each residue class.
  CHECK(group_order(h) == Integer("110075314176"));
}

TEST_CASE("classical group orders") {
  CHECK(group_order(dihedral_group(4)) == 8);
  CHECK(group_order(symmetric_group_on_gamma(4)) == 24);
  CHECK(group_order(cube_rotation_group(3)) == 24);
  CHECK(group_order(group_preset("G8+R:8")) == group_order(join(group_g8(), square_group("R", 8, {rotate90(8)}))));
  CHECK_THROWS_AS(group_preset("Q9"), InvalidArgument);
  CHECK_THROWS_AS(gf2_rank(dihedral_group(4)), InvalidArgument);
}

TEST_CASE("franklin group preserves franklin squares") {
  auto sys = build_system(Family::Franklin8, {8, 0});
  auto g = franklin_group(8);
  PointEnumerator pe(sys);
  for (const auto& p : pe.points(4))
    for (const auto& gen : g.generators) REQUIRE(verify_member(sys, act(gen, p)).member);
}

TEST_CASE("orbits and isomorphism") {
  auto g = group_g8();
  auto f1 = flatten(franklin_f1());
  auto f2 = flatten(franklin_f2());
  auto o = orbit(f1, g, 1000);
  CHECK(o.size() == 256);
  CHECK(isomorphic(f1, o.back(), g, 1000));
  CHECK_FALSE(isomorphic(f1, f2, group_preset("franklin:8"), 100000));
  CHECK_THROWS_AS(orbit(f1, g, 10), BudgetExceeded);
}

TEST_CASE("orbit classes of the 3x3 magic basis under the dihedral group") {
  auto hb = hilbert_basis(build_system(Family::Magic, {3, 0}));
  auto part = orbit_classes(hb.vectors(), dihedral_group(3), 100);
  CHECK(part.closed);
  std::vector<std::size_t> sizes;
  for (const auto& c : part.classes) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 4});
}

TEST_CASE("orbit counts inside a host graph") {
  // 0/1 labelings on the edges of gamma_graph(3): the loop triple and a loop-plus-edge pattern.
  Point host(6, 1);
  Point loops{1, 0, 0, 1, 0, 1};
  CHECK(orbit_count_in_host(loops, host, 3) == 1);
  Point mixed{1, 0, 0, 0, 1, 0};
  CHECK(orbit_count_in_host(mixed, host, 3) == 3);
}
