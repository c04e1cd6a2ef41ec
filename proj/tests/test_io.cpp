#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "magic/ehrhart.hpp"
#include "magic/graphs.hpp"
#include "magic/hilbert.hpp"
#include "magic/io.hpp"

using namespace magic;

TEST_CASE("systems round trip") {
  for (auto sys : {build_system(Family::Magic, {3, 0}), build_system(Family::SemiMagicHypercube, {2, 3}),
                   labeling_cone(petersen()), labeling_cone(pi(3))}) {
    auto j = to_json(sys);
    CHECK(system_from_json(Json::parse(j.dump())) == sys);
  }
}

TEST_CASE("bases round trip and are verified") {
  auto hb = hilbert_basis(build_system(Family::Magic, {3, 0}));
  auto back = basis_from_json(Json::parse(to_json(hb).dump()));
  CHECK(back.elements == hb.elements);
  CHECK(back.system == hb.system);
  auto j = to_json(hb);
  j["elements"][0]["vector"][0] = 7;
  CHECK_THROWS(basis_from_json(j));
}

TEST_CASE("series and quasi-polynomials round trip") {
  auto hb = hilbert_basis(build_system(Family::Magic, {3, 0}));
  auto g = hilbert_series(hb);
  auto g2 = series_from_json(Json::parse(to_json(g).dump()));
  CHECK(g2.numerator == g.numerator);
  CHECK(g2.denominator == g.denominator);
  auto qp = formula_from_oracle(hb.system, 3, 2);
  CHECK(quasi_polynomial_from_json(Json::parse(to_json(qp).dump())) == qp);
}

TEST_CASE("large integers survive as strings") {
  Integer big("123456789012345678901234567890");
  auto j = integer_to_json(big);
  CHECK(j.is_string());
  CHECK(integer_from_json(j) == big);
  CHECK(integer_to_json(Integer(42)).is_number());
}

TEST_CASE("graphs, groups, binomials, samples") {
  auto g = complete_bipartite(2, 3);
  CHECK(graph_from_json(to_json(g)) == g);
  auto grp = group_preset("G8");
  auto grp2 = group_from_json(to_json(grp));
  CHECK(grp2.generators == grp.generators);
  Binomial b{{1, 0, 2}, {0, 3, 0}};
  CHECK(binomial_from_json(to_json(b)) == b);
  std::map<std::int64_t, Integer> s{{0, 1}, {3, 5}};
  CHECK(samples_from_json(samples_to_json(s)) == s);
  CHECK(point_from_json(Json::parse("[[1,2],[3,4]]")) == Point{1, 2, 3, 4});
}

TEST_CASE("files and malformed input") {
  auto path = (std::filesystem::temp_directory_path() / "magic_io_test.json").string();
  write_json_file(path, to_json(petersen()));
  CHECK(graph_from_json(read_json_file(path)) == petersen());
  std::remove(path.c_str());
  CHECK_THROWS_WITH(parse_json("{oops", "input"), doctest::Contains("malformed JSON"));
  CHECK_THROWS(read_json_file("/nonexistent/file.json"));
}
