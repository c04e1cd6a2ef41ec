#include <doctest.h>

#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "magic/ehrhart.hpp"
#include "magic/enumerate.hpp"
#include "magic/graphs.hpp"
#include "magic/hilbert.hpp"
#include "magic/symmetry.hpp"
#include "oracles.hpp"

using namespace magic;

namespace {

Point gamma_labeling(std::size_t n, const std::vector<Edge>& edges) {
  auto g = gamma_graph(n);
  Point l(g.size(), 0);
  for (auto [a, b] : edges) l[*g.edge_index(a, b)] = 1;
  return l;
}

}  // namespace

TEST_CASE("named graphs have the expected sizes") {
  CHECK(gamma_graph(4).size() == 10);
  CHECK(complete(6).size() == 15);
  CHECK(complete_bipartite(3, 3).size() == 9);
  CHECK(petersen().size() == 15);
  CHECK(pi(3).size() == 9);
  CHECK(platonic("tetrahedral").size() == 6);
  CHECK(platonic("cube").size() == 12);
  CHECK(platonic("octahedral").size() == 12);
  CHECK(platonic("dodecahedral").size() == 30);
  CHECK(platonic("icosahedral").size() == 30);
  CHECK_THROWS_AS(platonic("torus"), InvalidArgument);
}

TEST_CASE("perfect matchings") {
  const auto& o = test_oracles();
  CHECK(perfect_matchings(complete(6)).size() == o["perfect_matchings"]["K6"].get<std::size_t>());
  CHECK(perfect_matchings(complete_bipartite(3, 3)).size() ==
        o["perfect_matchings"]["K33"].get<std::size_t>());
  CHECK(o["permanent_ones_3"] == 6);
  CHECK(perfect_matchings(oriented_octahedron()).size() == 2);
}

TEST_CASE("positive subgraphs") {
  const auto& o = test_oracles();
  CHECK(o["positive_edges"]["K4"].size() == 6);
  CHECK(is_positive(complete(4)));
  CHECK(positify(complete(4)) == complete(4));
  CHECK(o["positive_edges"]["star3"].empty());
  auto star = Graph::make(4, false, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(positify(star).size() == 0);
  CHECK_FALSE(is_positive(star));
}

TEST_CASE("oriented octahedron counts r + 1") {
  auto sys = labeling_cone(oriented_octahedron());
  PointEnumerator pe(sys);
  for (std::int64_t r = 0; r <= 6; ++r) CHECK(pe.count(r) == r + 1);
  CHECK(is_positive(oriented_octahedron()));
}

TEST_CASE("dimension formulas") {
  for (const auto& g : {complete(4), complete(5), complete_bipartite(3, 3), petersen(), gamma_graph(3),
                        platonic("cube"), platonic("octahedral")})
    CHECK(dimension(g) == dimension_formula(g));
  for (std::size_t n = 2; n <= 4; ++n)
    CHECK(dimension(pi(n)) == static_cast<std::int64_t>((n - 1) * (n - 1)));
  CHECK(bipartite_components(complete_bipartite(2, 3)) == 1);
  CHECK(bipartite_components(Graph::make(3, false, {})) == 3);
}

TEST_CASE("Birkhoff polytope B3") {
  const auto& o = test_oracles();
  auto f = o["birkhoff3_f_vector"].get<std::vector<std::size_t>>();
  auto p3 = pi(3);
  CHECK(birkhoff_vertices(p3).size() == f[0]);
  CHECK(dimension(p3) == 4);
  for (std::int64_t d = 1; d <= 3; ++d) CHECK(faces(p3, d).size() == f[static_cast<std::size_t>(d)]);
  auto poset = face_poset(p3);
  CHECK(poset.faces.size() == f[0] + f[1] + f[2] + f[3] + f[4]);
}

TEST_CASE("Birkhoff faces of gamma_graph(4)") {
  CHECK(birkhoff_faces(gamma_graph(4)).size() == test_oracles()["gamma4_birkhoff2_faces"].get<std::size_t>());
}

TEST_CASE("digraph and bipartite graph conversions") {
  std::mt19937 rng(20261014);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 2 + rng() % 5;
    std::vector<Edge> e;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (rng() % 2) e.emplace_back(a, b);
    auto d = Graph::make(n, true, e);
    auto b = digraph_to_bipartite(d);
    CHECK(b.part_a == n);
    CHECK(bipartite_to_digraph(b) == d);
  }
}

TEST_CASE("octahedral orbit counts") {
  Point host(gamma_graph(6).size(), 0);
  for (auto e : platonic("octahedral").edges) host[*gamma_graph(6).edge_index(e.first, e.second)] = 1;
  CHECK(orbit_count_in_host(gamma_labeling(6, {{0, 3}, {1, 2}, {4, 5}}), host, 6) == 8);
  CHECK(orbit_count_in_host(gamma_labeling(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}), host, 6) == 4);
}

TEST_CASE("Cayley digraph of S3 is magic with sum 15") {
  auto c = cayley_digraph(s3_table());
  CHECK(c.graph.size() == 30);
  CHECK(c.label_of[c.identity] == 6);
  CHECK(magic_sum(c.graph, c.labeling) == 15);
}

TEST_CASE("labeling lifts and symmetric squares") {
  auto k4 = complete(4);
  Labeling l(k4.size(), 0);
  l[*k4.edge_index(0, 1)] = l[*k4.edge_index(1, 2)] = l[*k4.edge_index(2, 3)] = l[*k4.edge_index(0, 3)] = 1;
  CHECK(magic_sum(k4, l) == 2);
  auto lifted = lift_labeling(k4, l);
  CHECK(magic_sum(gamma_graph(4), lifted) == 2);
  CHECK(restrict_labeling(k4, lifted) == l);
  auto sq = symmetric_square(lifted, 4);
  auto expect = test_oracles()["two_matching"]["row_sums"].get<std::vector<std::int64_t>>();
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(std::accumulate(sq[i].begin(), sq[i].end(), std::int64_t{0}) == expect[i]);
    for (std::size_t j = 0; j < 4; ++j) CHECK(sq[i][j] == sq[j][i]);
  }
  CHECK(from_symmetric_square(sq) == lifted);
  Labeling bad(k4.size(), 0);
  bad[0] = 1;
  CHECK_THROWS_AS(lift_labeling(k4, bad), Infeasible);
}
