#include "magic/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace magic {

namespace {

const Json& field(const Json& j, const char* key, const std::string& what) {
  if (!j.is_object()) throw InvalidArgument(what + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InvalidArgument(what + ": missing field \"" + key + "\"");
  return *it;
}

std::int64_t as_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw InvalidArgument(what + ": expected an integer");
  return j.get<std::int64_t>();
}

std::size_t as_size(const Json& j, const std::string& what) {
  auto v = as_int(j, what);
  if (v < 0) throw InvalidArgument(what + ": expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

Point int_array(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InvalidArgument(what + ": expected an array of integers");
  Point out;
  for (const auto& v : j) out.push_back(as_int(v, what));
  return out;
}

const char* kind_name(ShapeKind k) {
  switch (k) {
    case ShapeKind::Square: return "square";
    case ShapeKind::Hypercube: return "hypercube";
    case ShapeKind::Graph: return "graph";
  }
  return "square";
}

ShapeKind kind_from(const std::string& s) {
  if (s == "square") return ShapeKind::Square;
  if (s == "hypercube") return ShapeKind::Hypercube;
  if (s == "graph") return ShapeKind::Graph;
  throw InvalidArgument("shape: unknown kind '" + s + "'");
}

Json edges_json(const std::vector<Edge>& edges) {
  Json e = Json::array();
  for (const auto& [a, b] : edges) e.push_back({a, b});
  return e;
}

std::vector<Edge> edges_from(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InvalidArgument(what + ": edges must be an array of pairs");
  std::vector<Edge> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw InvalidArgument(what + ": each edge must be [i, j]");
    out.emplace_back(as_size(e[0], what), as_size(e[1], what));
  }
  return out;
}

}  // namespace

Json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0)
      throw InvalidArgument("expected a decimal integer, got \"" + j.get<std::string>() + "\"");
    return v;
  }
  throw InvalidArgument("expected an integer or a decimal string");
}

Json to_json(const ConeSystem& sys) {
  Json m = Json::array();
  for (std::size_t r = 0; r < sys.matrix.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < sys.matrix.cols(); ++c) row.push_back(integer_to_json(sys.matrix.at(r, c)));
    m.push_back(std::move(row));
  }
  Json shape = {{"kind", kind_name(sys.shape.kind)}, {"n", sys.shape.n}, {"d", sys.shape.d}};
  if (sys.shape.kind == ShapeKind::Graph) {
    shape["directed"] = sys.shape.directed;
    shape["edges"] = edges_json(sys.shape.edges);
    if (sys.shape.part_a) shape["part_a"] = *sys.shape.part_a;
  }
  return {{"family", family_name(sys.family)},
          {"params", {{"n", sys.params.n}, {"d", sys.params.d}}},
          {"variables", sys.variables()},
          {"matrix", std::move(m)},
          {"grading", sys.grading},
          {"shape", std::move(shape)}};
}

ConeSystem system_from_json(const Json& j) {
  const std::string what = "ConeSystem";
  ConeSystem sys;
  sys.family = family_from_name(field(j, "family", what).get<std::string>());
  const auto& p = field(j, "params", what);
  sys.params.n = as_size(field(p, "n", what), what);
  sys.params.d = as_size(field(p, "d", what), what);
  sys.grading = int_array(field(j, "grading", what), what + ".grading");
  const auto& m = field(j, "matrix", what);
  if (!m.is_array()) throw InvalidArgument("ConeSystem.matrix: expected an array of rows");
  sys.matrix = IntMatrix(0, sys.grading.size());
  for (const auto& row : m) {
    if (!row.is_array() || row.size() != sys.grading.size())
      throw InvalidArgument("ConeSystem.matrix: every row must have one entry per variable");
    IntVector r;
    for (const auto& v : row) r.push_back(integer_from_json(v));
    sys.matrix.append_row(r);
  }
  const auto& s = field(j, "shape", what);
  sys.shape.kind = kind_from(field(s, "kind", what).get<std::string>());
  sys.shape.n = as_size(field(s, "n", what), what);
  sys.shape.d = as_size(field(s, "d", what), what);
  if (sys.shape.kind == ShapeKind::Graph) {
    sys.shape.directed = field(s, "directed", what).get<bool>();
    sys.shape.edges = edges_from(field(s, "edges", what), what);
    if (s.contains("part_a")) sys.shape.part_a = as_size(s["part_a"], what);
  }
  return sys;
}

Json to_json(const LatticePoint& p) { return {{"vector", p.vector}, {"degree", p.degree}}; }

LatticePoint lattice_point_from_json(const Json& j) {
  LatticePoint p;
  p.vector = int_array(field(j, "vector", "LatticePoint"), "LatticePoint.vector");
  p.degree = as_int(field(j, "degree", "LatticePoint"), "LatticePoint.degree");
  return p;
}

Json to_json(const HilbertBasis& hb) {
  Json e = Json::array();
  for (const auto& p : hb.elements) e.push_back(to_json(p));
  Json j = {{"system", to_json(hb.system)},
            {"kind", hb.kind == BasisKind::Minimal ? "minimal" : "truncated"},
            {"elements", std::move(e)}};
  if (hb.kind == BasisKind::Truncated) j["dmax"] = hb.dmax;
  return j;
}

HilbertBasis basis_from_json(const Json& j) {
  HilbertBasis hb;
  hb.system = system_from_json(field(j, "system", "HilbertBasis"));
  const auto kind = field(j, "kind", "HilbertBasis").get<std::string>();
  if (kind == "minimal") hb.kind = BasisKind::Minimal;
  else if (kind == "truncated") hb.kind = BasisKind::Truncated;
  else throw InvalidArgument("HilbertBasis.kind: expected \"minimal\" or \"truncated\"");
  if (hb.kind == BasisKind::Truncated) hb.dmax = as_int(field(j, "dmax", "HilbertBasis"), "HilbertBasis.dmax");
  for (const auto& e : field(j, "elements", "HilbertBasis")) {
    auto p = lattice_point_from_json(e);
    auto check = verify_member(hb.system, p.vector);
    if (!check.member || check.degree != p.degree)
      throw InvalidArgument("HilbertBasis: element is not a member of the system with the stated degree");
    hb.elements.push_back(std::move(p));
  }
  return hb;
}

Json to_json(const Binomial& b) { return {{"lead", b.lead}, {"trail", b.trail}}; }

Binomial binomial_from_json(const Json& j) {
  Binomial b;
  for (auto [key, dst] : {std::pair{"lead", &b.lead}, std::pair{"trail", &b.trail}}) {
    for (auto v : int_array(field(j, key, "Binomial"), "Binomial")) dst->push_back(static_cast<std::int32_t>(v));
  }
  if (b.lead.size() != b.trail.size()) throw InvalidArgument("Binomial: lead and trail lengths differ");
  return b;
}

Json to_json(const RationalGenFn& g) {
  Json num = Json::array();
  for (const auto& c : g.numerator) num.push_back(integer_to_json(c));
  Json j = {{"numerator", std::move(num)}, {"denominator", g.denominator}};
  if (g.exact_through) j["exact_through"] = *g.exact_through;
  return j;
}

RationalGenFn series_from_json(const Json& j) {
  RationalGenFn g;
  const auto& num = field(j, "numerator", "RationalGenFn");
  if (!num.is_array()) throw InvalidArgument("RationalGenFn.numerator: expected an array");
  for (const auto& c : num) g.numerator.push_back(integer_from_json(c));
  g.denominator = int_array(field(j, "denominator", "RationalGenFn"), "RationalGenFn.denominator");
  for (auto d : g.denominator)
    if (d <= 0) throw InvalidArgument("RationalGenFn.denominator: exponents must be positive");
  if (j.contains("exact_through") && !j["exact_through"].is_null())
    g.exact_through = as_int(j["exact_through"], "RationalGenFn.exact_through");
  return g;
}

Json to_json(const QuasiPolynomial& qp) {
  Json cs = Json::array();
  for (const auto& c : qp.constituents) {
    Json row = Json::array();
    for (const auto& q : c) row.push_back({q.get_num().get_str(), q.get_den().get_str()});
    cs.push_back(std::move(row));
  }
  return {{"period", qp.period}, {"constituents", std::move(cs)}};
}

QuasiPolynomial quasi_polynomial_from_json(const Json& j) {
  const std::string what = "QuasiPolynomial";
  QuasiPolynomial qp;
  qp.period = as_int(field(j, "period", what), what + ".period");
  if (qp.period <= 0) throw InvalidArgument("QuasiPolynomial.period: must be positive");
  const auto& cs = field(j, "constituents", what);
  if (!cs.is_array() || cs.size() != static_cast<std::size_t>(qp.period))
    throw InvalidArgument("QuasiPolynomial.constituents: need exactly one entry per residue class");
  for (const auto& c : cs) {
    if (!c.is_array()) throw InvalidArgument("QuasiPolynomial.constituents: expected arrays");
    std::vector<Rational> row;
    for (const auto& q : c) {
      if (!q.is_array() || q.size() != 2)
        throw InvalidArgument("QuasiPolynomial: each coefficient is [\"num\", \"den\"]");
      Integer num = integer_from_json(q[0]), den = integer_from_json(q[1]);
      if (den == 0) throw InvalidArgument("QuasiPolynomial: zero denominator");
      Rational r(num, den);
      r.canonicalize();
      row.push_back(r);
    }
    while (!row.empty() && row.back() == 0) row.pop_back();
    qp.constituents.push_back(std::move(row));
  }
  return qp;
}

Json to_json(const Graph& g) {
  Json j = {{"n", g.n}, {"directed", g.directed}, {"edges", edges_json(g.edges)}};
  if (g.part_a) j["part_a"] = *g.part_a;
  return j;
}

Graph graph_from_json(const Json& j) {
  const std::string what = "Graph";
  std::optional<std::size_t> part;
  if (j.contains("part_a") && !j["part_a"].is_null()) part = as_size(j["part_a"], what);
  const auto& dir = field(j, "directed", what);
  if (!dir.is_boolean()) throw InvalidArgument("Graph.directed: expected true or false");
  return Graph::make(as_size(field(j, "n", what), what), dir.get<bool>(),
                     edges_from(field(j, "edges", what), what), part);
}

Json to_json(const FaceDescriptor& f) {
  return {{"zero_edges", f.zero_edges}, {"positive_edges", f.positive_edges}, {"dim", f.dim}};
}

Json to_json(const GroupSpec& g) {
  return {{"name", g.name}, {"degree", g.degree}, {"generators", g.generators}};
}

GroupSpec group_from_json(const Json& j) {
  if (j.is_string()) return group_preset(j.get<std::string>());
  const std::string what = "GroupSpec";
  if (j.contains("preset")) return group_preset(j["preset"].get<std::string>());
  std::string name = j.contains("name") ? j["name"].get<std::string>() : "explicit";
  std::vector<Permutation> gens;
  const auto& gj = field(j, "generators", what);
  if (!gj.is_array()) throw InvalidArgument("GroupSpec.generators: expected an array of permutations");
  for (const auto& p : gj) {
    Permutation perm;
    for (auto v : int_array(p, what + ".generators")) {
      if (v < 0) throw InvalidArgument("GroupSpec.generators: entries must be nonnegative");
      perm.push_back(static_cast<std::size_t>(v));
    }
    gens.push_back(std::move(perm));
  }
  auto g = group_from_generators(std::move(name), std::move(gens));
  if (j.contains("degree")) {
    auto d = as_size(j["degree"], what);
    if (!g.generators.empty() && d != g.degree)
      throw InvalidArgument("GroupSpec.degree does not match the generators");
    g.degree = d;
  }
  return g;
}

Json samples_to_json(const std::map<std::int64_t, Integer>& samples) {
  Json arr = Json::array();
  for (const auto& [s, v] : samples) arr.push_back({s, integer_to_json(v)});
  return {{"samples", std::move(arr)}};
}

std::map<std::int64_t, Integer> samples_from_json(const Json& j) {
  const Json& arr = j.is_array() ? j : field(j, "samples", "samples");
  if (!arr.is_array()) throw InvalidArgument("samples: expected an array of [s, count] pairs");
  std::map<std::int64_t, Integer> out;
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != 2) throw InvalidArgument("samples: each entry is [s, count]");
    auto s = as_int(e[0], "samples");
    if (!out.emplace(s, integer_from_json(e[1])).second)
      throw InvalidArgument("samples: degree " + std::to_string(s) + " appears twice");
  }
  return out;
}

Point point_from_json(const Json& j) {
  if (j.is_object() && j.contains("vector")) return int_array(j["vector"], "point");
  if (!j.is_array()) throw InvalidArgument("point: expected an integer array (nested arrays allowed)");
  Point out;
  for (const auto& v : j) {
    if (v.is_array()) {
      auto sub = point_from_json(v);
      out.insert(out.end(), sub.begin(), sub.end());
    } else {
      out.push_back(as_int(v, "point"));
    }
  }
  return out;
}

Square square_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("square: expected an array of rows");
  Square sq;
  for (const auto& row : j) sq.push_back(int_array(row, "square row"));
  for (const auto& row : sq)
    if (row.size() != sq.size()) throw InvalidArgument("square: rows must have length n for an n x n grid");
  return sq;
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidArgument("malformed JSON in " + what + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

}  // namespace magic
