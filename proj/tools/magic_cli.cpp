#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "magic/algebra.hpp"
#include "magic/ehrhart.hpp"
#include "magic/enumerate.hpp"
#include "magic/graphs.hpp"
#include "magic/hilbert.hpp"
#include "magic/io.hpp"
#include "magic/models.hpp"
#include "magic/symmetry.hpp"

using namespace magic;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kBudget = 3;
constexpr int kInfeasible = 4;
constexpr const char* kBudgetEnv = "MAGIC_BUDGET_SECONDS";

struct Common {
  std::optional<double> seconds;
  std::optional<std::size_t> max_elements;
  unsigned threads = 1;
  std::string output;
  bool json = false;

  Budget budget() const {
    Budget b;
    b.seconds = seconds;
    if (!b.seconds) {
      if (const char* env = std::getenv(kBudgetEnv)) {
        try {
          b.seconds = std::stod(env);
        } catch (const std::exception&) {
          throw InvalidArgument(std::string(kBudgetEnv) + " must be a number of seconds");
        }
      }
    }
    b.max_elements = max_elements;
    return b;
  }
};

Common common;

struct SystemArgs {
  std::string system_file;
  std::string family;
  std::size_t n = 0;
  std::size_t d = 0;
  std::string graph_file;
};

// Inline JSON when the argument starts with '[' or '{', otherwise a file path.
Json load(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '[' || arg.front() == '{' || arg.front() == '"'))
    return parse_json(arg, "argument");
  return read_json_file(arg);
}

void add_system_options(CLI::App* sub, SystemArgs& a) {
  sub->add_option("--system", a.system_file, "ConeSystem JSON file");
  sub->add_option("--family", a.family, "family name (magic, franklin8, magic-cube, ...)");
  sub->add_option("--n", a.n, "side length");
  sub->add_option("--d", a.d, "hypercube dimension");
  sub->add_option("--graph", a.graph_file, "Graph JSON (labeling cone)");
}

bool has_system(const SystemArgs& a) {
  return !a.system_file.empty() || !a.family.empty() || !a.graph_file.empty();
}

ConeSystem resolve_system(const SystemArgs& a) {
  int given = !a.system_file.empty() + !a.family.empty() + !a.graph_file.empty();
  if (given != 1) throw InvalidArgument("give exactly one of --system, --family, --graph");
  if (!a.system_file.empty()) return system_from_json(load(a.system_file));
  if (!a.graph_file.empty()) return labeling_cone(graph_from_json(load(a.graph_file)));
  return build_system(family_from_name(a.family), {a.n, a.d});
}

void emit(const Json& j) {
  if (!common.output.empty()) write_json_file(common.output, j);
  if (common.json) std::cout << j.dump(2) << "\n";
}

bool human() { return !common.json; }

std::string join_ints(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

void print_point(const ConeSystem& sys, const Point& p, const std::string& indent = "  ") {
  if (sys.shape.kind == ShapeKind::Square && sys.shape.n * sys.shape.n == p.size()) {
    const std::size_t n = sys.shape.n;
    for (std::size_t i = 0; i < n; ++i) {
      std::cout << indent;
      for (std::size_t j = 0; j < n; ++j) std::cout << (j ? " " : "") << p[i * n + j];
      std::cout << "\n";
    }
    std::cout << "\n";
  } else {
    std::cout << indent << join_ints(p) << "\n";
  }
}

// ---- commands ----

int cmd_build(const SystemArgs& a) {
  auto sys = resolve_system(a);
  if (human())
    std::cout << family_name(sys.family) << ": " << sys.equations() << " equations, " << sys.variables()
              << " variables\n";
  emit(to_json(sys));
  return kOk;
}

int cmd_verify(const SystemArgs& a, const std::string& point) {
  auto sys = resolve_system(a);
  auto p = point_from_json(load(point));
  auto c = verify_member(sys, p);
  if (c.member) {
    if (human()) std::cout << "member with magic sum " << c.degree << "\n";
    emit({{"member", true}, {"degree", c.degree}});
    return kOk;
  }
  std::string why = c.negative_entry ? "entry " + std::to_string(*c.negative_entry) + " is negative"
                                     : "equation " + std::to_string(*c.violated_row) + " is violated";
  std::cerr << "not a member: " << why << "\n";
  emit({{"member", false}, {"reason", why}});
  return kInfeasible;
}

int cmd_hilbert(const SystemArgs& a, std::optional<std::int64_t> dmax, const std::string& method,
                bool quiet) {
  auto sys = resolve_system(a);
  HilbertOptions ho;
  ho.budget = common.budget();
  HilbertBasis hb;
  if (method == "completion") {
    hb = dmax ? truncated_hilbert_basis(sys, *dmax, ho) : hilbert_basis(sys, ho);
  } else if (method == "degree") {
    if (!dmax) throw InvalidArgument("--method degree needs --dmax");
    hb = hilbert_basis_by_degree(sys, *dmax, ho);
  } else if (method == "elimination") {
    hb.system = sys;
    for (auto& v : hilbert_basis_by_elimination(sys, ho.budget)) {
      auto deg = sys.degree(v);
      hb.elements.push_back({std::move(v), deg});
    }
    std::sort(hb.elements.begin(), hb.elements.end());
  } else {
    throw InvalidArgument("unknown method '" + method + "' (completion, degree, elimination)");
  }
  if (human()) {
    std::cout << hb.size() << " elements" << (hb.kind == BasisKind::Truncated ? " (degree <= " + std::to_string(hb.dmax) + ")" : "")
              << "\n";
    for (const auto& [deg, cnt] : hb.degree_histogram()) std::cout << "  degree " << deg << ": " << cnt << "\n";
    if (!quiet) {
      for (const auto& [deg, cnt] : hb.degree_histogram()) {
        std::cout << "degree " << deg << ":\n";
        for (const auto& e : hb.elements)
          if (e.degree == deg) print_point(sys, e.vector);
      }
    }
  }
  emit(to_json(hb));
  return kOk;
}

int cmd_rays(const SystemArgs& a) {
  auto sys = resolve_system(a);
  auto rays = extreme_rays(sys, common.budget());
  if (human()) {
    std::cout << rays.size() << " extreme rays, cone dimension " << cone_dimension(sys) << "\n";
    for (const auto& r : rays) std::cout << "  degree " << sys.degree(r) << ": " << join_ints(r) << "\n";
  }
  Json j = Json::array();
  for (const auto& r : rays) j.push_back({{"vector", r}, {"degree", sys.degree(r)}});
  emit({{"rays", j}});
  return kOk;
}

int cmd_decompose(const SystemArgs& a, const std::string& basis_file, const std::string& point) {
  HilbertBasis hb;
  if (!basis_file.empty()) {
    hb = basis_from_json(load(basis_file));
  } else {
    HilbertOptions ho;
    ho.budget = common.budget();
    hb = hilbert_basis(resolve_system(a), ho);
  }
  auto p = point_from_json(load(point));
  auto d = decompose(p, hb, common.budget());
  if (!d) {
    std::cerr << "not a member of the system\n";
    return kInfeasible;
  }
  Json coeffs = Json::array();
  if (human()) std::cout << "decomposition into basis elements:\n";
  for (const auto& [idx, mult] : d->coefficients) {
    coeffs.push_back({{"element", idx}, {"multiplicity", mult}});
    if (human()) std::cout << "  " << mult << " x element " << idx << " (degree " << hb.elements[idx].degree << ")\n";
  }
  emit({{"coefficients", coeffs}});
  return kOk;
}

int cmd_count(const SystemArgs& a, std::int64_t sum, std::optional<std::int64_t> to) {
  auto sys = resolve_system(a);
  if (sum < 0) throw InvalidArgument("--sum must be nonnegative");
  const std::int64_t last = to ? *to : sum;
  if (last < sum) throw InvalidArgument("--to must be at least --sum");
  EnumOptions eo;
  eo.budget = common.budget();
  eo.threads = common.threads;
  PointEnumerator pe(sys);
  std::map<std::int64_t, Integer> out;
  for (std::int64_t s = sum; s <= last; ++s) {
    out[s] = pe.count(s, eo);
    if (human()) std::cout << s << "\t" << out[s].get_str() << "\n";
  }
  emit(samples_to_json(out));
  return kOk;
}

int cmd_series(const SystemArgs& a, const std::string& basis_file, std::optional<std::int64_t> degree,
               const std::string& route, const std::string& pivot, std::int64_t show) {
  SeriesOptions so;
  so.budget = common.budget();
  so.degree = degree;
  if (route == "auto") so.route = SeriesOptions::Route::Auto;
  else if (route == "full") so.route = SeriesOptions::Route::Full;
  else if (route == "truncated") so.route = SeriesOptions::Route::Truncated;
  else throw InvalidArgument("unknown route '" + route + "' (auto, full, truncated)");
  if (pivot == "variable-power") so.pivot = PivotStrategy::VariablePower;
  else if (pivot == "variable") so.pivot = PivotStrategy::Variable;
  else if (pivot == "pair-gcd") so.pivot = PivotStrategy::PairGcd;
  else throw InvalidArgument("unknown pivot '" + pivot + "' (variable-power, variable, pair-gcd)");
  HilbertBasis hb;
  if (!basis_file.empty()) {
    hb = basis_from_json(load(basis_file));
  } else {
    HilbertOptions ho;
    ho.budget = so.budget;
    auto sys = resolve_system(a);
    hb = degree && so.route == SeriesOptions::Route::Truncated ? truncated_hilbert_basis(sys, *degree, ho)
                                                                : hilbert_basis(sys, ho);
  }
  auto g = hilbert_series(hb, so);
  if (human()) {
    std::cout << "numerator:";
    for (const auto& c : g.numerator) std::cout << " " << c.get_str();
    std::cout << "\ndenominator degrees: " << join_ints(g.denominator) << "\n";
    if (g.exact_through) std::cout << "valid through degree " << *g.exact_through << "\n";
    std::int64_t upto = g.exact_through ? std::min(show, *g.exact_through) : show;
    auto c = expand_series(g, upto);
    std::cout << "coefficients:";
    for (const auto& v : c) std::cout << " " << v.get_str();
    std::cout << "\n";
  }
  emit(to_json(g));
  return kOk;
}

int cmd_expand(const std::string& series_file, std::int64_t dmax) {
  auto g = series_from_json(load(series_file));
  auto c = expand_series(g, dmax);
  std::map<std::int64_t, Integer> out;
  for (std::size_t s = 0; s < c.size(); ++s) {
    out[static_cast<std::int64_t>(s)] = c[s];
    if (human()) std::cout << s << "\t" << c[s].get_str() << "\n";
  }
  emit(samples_to_json(out));
  return kOk;
}

int cmd_period(const SystemArgs& a) {
  auto sys = resolve_system(a);
  auto n = quasi_period(sys, common.budget());
  auto dim = polytope_dimension(sys);
  if (human()) std::cout << "period " << n << ", degree " << dim << "\n";
  emit({{"period", n}, {"degree", dim}});
  return kOk;
}

int cmd_formula(const SystemArgs& a, const std::string& samples_file, const std::string& series_file,
                std::optional<std::int64_t> period, std::optional<std::int64_t> degree, bool minimize) {
  std::optional<ConeSystem> sys;
  if (has_system(a)) sys = resolve_system(a);
  std::optional<RationalGenFn> g;
  if (!series_file.empty()) g = series_from_json(load(series_file));
  if (g && !sys) {
    // The denominator bounds both the period and the degree.
    std::int64_t l = 1;
    for (auto d : g->denominator) l = std::lcm(l, d);
    if (!period) period = l;
    if (!degree) degree = static_cast<std::int64_t>(g->denominator.size()) - 1;
  }
  if (!period) {
    if (!sys) throw InvalidArgument("--period is required without a system");
    period = quasi_period(*sys, common.budget());
  }
  if (!degree) {
    if (!sys) throw InvalidArgument("--degree is required without a system");
    degree = polytope_dimension(*sys);
  }
  if (*period <= 0 || *degree < 0) throw InvalidArgument("--period must be positive, --degree nonnegative");
  const auto d = static_cast<std::size_t>(*degree);
  QuasiPolynomial qp;
  if (!samples_file.empty()) {
    qp = interpolate(samples_from_json(load(samples_file)), *period, d);
  } else if (g) {
    std::int64_t need = (*degree + 1) * *period - 1;
    if (g->exact_through) need = std::min(need, *g->exact_through);
    auto c = expand_series(*g, need);
    std::map<std::int64_t, Integer> samples;
    for (std::size_t s = 0; s < c.size(); ++s) samples[static_cast<std::int64_t>(s)] = c[s];
    qp = interpolate(samples, *period, d);
  } else {
    if (!sys) throw InvalidArgument("give a system, --samples, or --series");
    EnumOptions eo;
    eo.budget = common.budget();
    eo.threads = common.threads;
    qp = formula_from_oracle(*sys, *period, d, eo);
  }
  if (minimize) qp = minimize_period(qp);
  if (human()) std::cout << "period " << qp.period << ", degree " << qp.degree() << "\n" << qp.to_string();
  emit(to_json(qp));
  return kOk;
}

int cmd_eval(const std::string& formula_file, const std::vector<std::int64_t>& at) {
  auto qp = quasi_polynomial_from_json(load(formula_file));
  Json out = Json::array();
  for (auto s : at) {
    if (s < 0) throw InvalidArgument("evaluation points must be nonnegative");
    auto v = qp.eval(s);
    if (human()) std::cout << s << "\t" << v.get_str() << "\n";
    out.push_back({s, integer_to_json(v)});
  }
  emit({{"values", out}});
  return kOk;
}

GroupSpec load_group(const std::string& g) {
  if (!g.empty() && (g.front() == '{' || g.find(".json") != std::string::npos)) return group_from_json(load(g));
  return group_preset(g);
}

int cmd_sym_apply(const std::vector<std::string>& ops, const std::string& square) {
  auto sq = square_from_json(load(square));
  for (const auto& name : ops) sq = magic::apply(parse_square_op(name, sq.size()), sq);
  if (human())
    for (const auto& row : sq) std::cout << join_ints(row) << "\n";
  emit(Json(sq));
  return kOk;
}

int cmd_sym_orbit(const std::string& group, const std::string& point, std::size_t cap) {
  auto g = load_group(group);
  auto orb = orbit(point_from_json(load(point)), g, cap);
  if (human()) std::cout << "orbit size " << orb.size() << " under " << g.name << "\n";
  emit({{"size", orb.size()}, {"orbit", orb}});
  return kOk;
}

int cmd_sym_order(const std::string& group) {
  auto g = load_group(group);
  auto order = group_order(g, common.budget());
  Json j = {{"group", g.name}, {"order", integer_to_json(order)}, {"commuting", generators_commute(g)},
            {"involutions", generators_are_involutions(g)}};
  if (human())
    std::cout << g.name << ": order " << order.get_str() << ", generators "
              << (generators_commute(g) ? "commute" : "do not commute") << "\n";
  bool line_ops = g.side && std::none_of(g.square_generators.begin(), g.square_generators.end(),
                                         [](const SquareOp& op) { return op.transpose; });
  if (line_ops && !g.square_generators.empty()) {
    auto r = gf2_rank(g);
    j["gf2_rank"] = r;
    j["gf2_order"] = integer_to_json(gf2_order(g));
    if (human()) std::cout << "GF(2) rank " << r << ", 2^rank = " << gf2_order(g).get_str() << "\n";
  }
  emit(j);
  return kOk;
}

int cmd_sym_iso(const std::string& group, const std::string& x, const std::string& y, std::size_t cap) {
  auto g = load_group(group);
  bool iso = isomorphic(point_from_json(load(x)), point_from_json(load(y)), g, cap);
  if (human()) std::cout << (iso ? "isomorphic" : "not isomorphic") << " under " << g.name << "\n";
  emit({{"isomorphic", iso}, {"group", g.name}});
  return kOk;
}

Graph build_graph(const std::string& kind, std::size_t n, std::size_t b, const std::string& name) {
  if (kind == "gamma") return gamma_graph(n);
  if (kind == "complete") return complete(n);
  if (kind == "bipartite") return complete_bipartite(n, b);
  if (kind == "petersen") return petersen();
  if (kind == "platonic") return platonic(name);
  if (kind == "pi") return pi(n);
  if (kind == "oriented-octahedron") return oriented_octahedron();
  throw InvalidArgument("unknown graph kind '" + kind +
                        "' (gamma, complete, bipartite, petersen, platonic, pi, oriented-octahedron)");
}

int cmd_graph_build(const std::string& kind, std::size_t n, std::size_t b, const std::string& name,
                    bool to_bipartite) {
  Graph g = build_graph(kind, n, b, name);
  if (to_bipartite) g = digraph_to_bipartite(g);
  if (human())
    std::cout << (g.directed ? "digraph" : "graph") << " with " << g.n << " vertices and " << g.size()
              << " edges\n";
  emit(to_json(g));
  return kOk;
}

int cmd_graph_cone(const std::string& graph) {
  auto sys = labeling_cone(graph_from_json(load(graph)));
  if (human()) std::cout << sys.equations() << " equations, " << sys.variables() << " variables\n";
  emit(to_json(sys));
  return kOk;
}

int cmd_graph_matchings(const std::string& graph) {
  auto g = graph_from_json(load(graph));
  auto pm = perfect_matchings(g, common.budget());
  if (human()) {
    std::cout << pm.size() << " perfect matchings\n";
    for (const auto& m : pm) {
      std::cout << " ";
      for (std::size_t k = 0; k < m.size(); ++k)
        if (m[k]) std::cout << " (" << g.edges[k].first << "," << g.edges[k].second << ")";
      std::cout << "\n";
    }
  }
  emit({{"count", pm.size()}, {"labelings", pm}});
  return kOk;
}

int cmd_graph_faces(const std::string& graph, std::optional<std::int64_t> dim, bool birkhoff) {
  auto g = graph_from_json(load(graph));
  auto fs = birkhoff ? birkhoff_faces(g, common.budget()) : faces(g, dim, common.budget());
  if (birkhoff && dim) {
    std::vector<FaceDescriptor> keep;
    for (auto& f : fs)
      if (f.dim == *dim) keep.push_back(std::move(f));
    fs = std::move(keep);
  }
  if (human()) {
    std::map<std::int64_t, std::size_t> hist;
    for (const auto& f : fs) ++hist[f.dim];
    std::cout << fs.size() << " faces\n";
    for (auto it = hist.rbegin(); it != hist.rend(); ++it)
      std::cout << "  dim " << it->first << ": " << it->second << "\n";
  }
  Json j = Json::array();
  for (const auto& f : fs) j.push_back(to_json(f));
  emit({{"faces", j}});
  return kOk;
}

int cmd_graph_dimension(const std::string& graph) {
  auto g = graph_from_json(load(graph));
  auto dim = dimension(g, common.budget());
  auto rank_dim = static_cast<std::int64_t>(cone_dimension(labeling_cone(g))) - 1;
  if (human())
    std::cout << "dimension " << dim << " (formula), " << rank_dim << " (from rank)\n";
  emit({{"dim", dim}, {"rank_dim", rank_dim}});
  return dim == rank_dim ? kOk : 1;
}

int cmd_graph_cayley(const std::string& table_file) {
  Json t = load(table_file);
  std::vector<std::vector<std::size_t>> table;
  try {
    table = t.get<std::vector<std::vector<std::size_t>>>();
  } catch (const Json::exception&) {
    throw InvalidArgument("multiplication table must be an array of rows of element indices");
  }
  auto c = cayley_digraph(table);
  auto r = magic_sum(c.graph, c.labeling);
  if (human()) {
    std::cout << "Cayley digraph on " << c.graph.n << " elements, " << c.graph.size() << " edges\n";
    if (r) std::cout << "generator labeling is magic with sum " << *r << "\n";
    else std::cout << "generator labeling is not magic\n";
  }
  Json j = {{"graph", to_json(c.graph)}, {"labeling", c.labeling}};
  if (r) j["magic_sum"] = *r;
  emit(j);
  return r ? kOk : kInfeasible;
}

int cmd_natural(bool odd, std::size_t n) {
  Square sq = odd ? natural_square_odd(n) : natural_square_even(n);
  if (human())
    for (const auto& row : sq) std::cout << join_ints(row) << "\n";
  emit(Json(sq));
  return kOk;
}

int cmd_lift_franklin(const std::string& square) {
  auto p = point_from_json(load(square));
  auto lifted = franklin_block_lift(p);
  if (human()) print_point(build_system(Family::Franklin16, {16, 0}), lifted, "");
  emit(Json(unflatten(lifted, 16)));
  return kOk;
}

int cmd_lift_graph(const std::string& graph, const std::string& labeling) {
  auto g = graph_from_json(load(graph));
  auto l = point_from_json(load(labeling));
  auto lifted = lift_labeling(g, l);
  Graph target = g.directed ? pi(g.n) : gamma_graph(g.n);
  if (human()) std::cout << join_ints(lifted) << "\n";
  emit({{"graph", to_json(target)}, {"labeling", lifted}});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polyhedral enumeration of magic structures"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--threads", common.threads, "worker threads for enumeration")->check(CLI::PositiveNumber);
  app.add_option("--budget", common.seconds,
                 std::string("time budget in seconds (default: $") + kBudgetEnv + " or unlimited)");
  app.add_option("--max-elements", common.max_elements, "cap on intermediate set sizes");
  app.add_option("-o,--output", common.output, "write the JSON artifact to this file");
  app.add_flag("--json", common.json, "print JSON instead of a table");

  SystemArgs sa;
  std::string point, basis_file, series_file, samples_file, formula_file, method = "completion";
  std::string route = "auto", pivot = "variable-power";
  std::optional<std::int64_t> dmax, degree, period, to, dim;
  std::int64_t sum = 0, show = 10, expand_to = 10;
  std::vector<std::int64_t> at;
  bool quiet = false, minimize = false, birkhoff = false, to_bipartite = false;

  auto* build = app.add_subcommand("build", "build a cone system");
  add_system_options(build, sa);
  auto* verify = app.add_subcommand("verify", "check membership and report the magic sum");
  add_system_options(verify, sa);
  verify->add_option("--point", point, "vector, square or file")->required();
  auto* hilbert = app.add_subcommand("hilbert", "minimal Hilbert basis");
  add_system_options(hilbert, sa);
  hilbert->add_option("--dmax", dmax, "only elements up to this degree");
  hilbert->add_option("--method", method, "completion, degree, or elimination");
  hilbert->add_flag("--quiet", quiet, "omit the element listing");
  auto* rays = app.add_subcommand("rays", "extreme rays");
  add_system_options(rays, sa);
  auto* decomp = app.add_subcommand("decompose", "write a member as a sum of basis elements");
  add_system_options(decomp, sa);
  decomp->add_option("--basis", basis_file, "HilbertBasis JSON");
  decomp->add_option("--point", point, "vector, square or file")->required();
  auto* count = app.add_subcommand("count", "count members of a given magic sum");
  add_system_options(count, sa);
  count->add_option("--sum", sum, "magic sum")->required();
  count->add_option("--to", to, "count every sum up to this one");
  auto* series = app.add_subcommand("series", "Hilbert-Poincare series");
  add_system_options(series, sa);
  series->add_option("--basis", basis_file, "HilbertBasis JSON");
  series->add_option("--degree", degree, "only coefficients up to this degree are needed");
  series->add_option("--route", route, "auto, full, or truncated");
  series->add_option("--pivot", pivot, "variable-power, variable, or pair-gcd");
  series->add_option("--show", show, "coefficients to print");
  auto* expand = app.add_subcommand("expand", "expand a rational generating function");
  expand->add_option("--series", series_file, "RationalGenFn JSON")->required();
  expand->add_option("--dmax", expand_to, "last coefficient");
  auto* per = app.add_subcommand("period", "quasi-period and degree of the counting function");
  add_system_options(per, sa);
  auto* formula = app.add_subcommand("formula", "quasi-polynomial by interpolation");
  add_system_options(formula, sa);
  formula->add_option("--samples", samples_file, "samples JSON {\"samples\":[[s,count],...]}");
  formula->add_option("--series", series_file, "RationalGenFn JSON to sample from");
  formula->add_option("--period", period, "period (default: from the extreme rays)");
  formula->add_option("--degree", degree, "degree (default: polytope dimension)");
  formula->add_flag("--minimize", minimize, "reduce to the smallest period");
  auto* eval = app.add_subcommand("eval", "evaluate a quasi-polynomial");
  eval->add_option("--formula", formula_file, "QuasiPolynomial JSON")->required();
  eval->add_option("--at", at, "points")->required();

  std::string group, op_square, other;
  std::vector<std::string> ops;
  std::size_t cap = 1'000'000;
  auto* sym = app.add_subcommand("symmetry", "symmetry operations and groups");
  sym->require_subcommand(1);
  auto* s_apply = sym->add_subcommand("apply", "apply square operations in order");
  s_apply->add_option("--op", ops, "R, transpose, reflect-rows, half-cols, (r1,r3), ...")->required();
  s_apply->add_option("--square", op_square, "square JSON")->required();
  auto* s_orbit = sym->add_subcommand("orbit", "orbit of a point");
  s_orbit->add_option("--group", group, "preset or GroupSpec JSON")->required();
  s_orbit->add_option("--point", point, "vector, square or file")->required();
  s_orbit->add_option("--cap", cap, "maximum orbit size");
  auto* s_order = sym->add_subcommand("order", "group order");
  s_order->add_option("--group", group, "preset or GroupSpec JSON")->required();
  auto* s_iso = sym->add_subcommand("iso", "isomorphism under a group");
  s_iso->add_option("--group", group, "preset or GroupSpec JSON")->required();
  s_iso->add_option("--a", point, "first point")->required();
  s_iso->add_option("--b", other, "second point")->required();
  s_iso->add_option("--cap", cap, "maximum orbit size");

  std::string graph_file, kind, solid, table_file, labeling;
  std::size_t gn = 0, gb = 0;
  auto* graph = app.add_subcommand("graph", "graphs and labeling cones");
  graph->require_subcommand(1);
  auto* g_build = graph->add_subcommand("build", "construct a named graph");
  g_build->add_option("--kind", kind, "gamma, complete, bipartite, petersen, platonic, pi, oriented-octahedron")
      ->required();
  g_build->add_option("--n", gn, "vertices (first part for bipartite)");
  g_build->add_option("--b", gb, "second part size for bipartite");
  g_build->add_option("--name", solid, "platonic solid");
  g_build->add_flag("--bipartite", to_bipartite, "return the bipartite graph of the digraph");
  auto* g_cone = graph->add_subcommand("cone", "labeling cone");
  g_cone->add_option("--graph", graph_file, "Graph JSON")->required();
  auto* g_match = graph->add_subcommand("matchings", "perfect matchings");
  g_match->add_option("--graph", graph_file, "Graph JSON")->required();
  auto* g_faces = graph->add_subcommand("faces", "faces of the polytope of magic labelings");
  g_faces->add_option("--graph", graph_file, "Graph JSON")->required();
  g_faces->add_option("--dim", dim, "only faces of this dimension");
  g_faces->add_flag("--birkhoff", birkhoff, "only faces that are Birkhoff polytopes");
  auto* g_dim = graph->add_subcommand("dimension", "polytope dimension");
  g_dim->add_option("--graph", graph_file, "Graph JSON")->required();
  auto* g_cayley = graph->add_subcommand("cayley", "Cayley digraph of a multiplication table");
  g_cayley->add_option("--table", table_file, "table JSON")->required();

  std::size_t nn = 0;
  auto* natural = app.add_subcommand("natural", "natural magic squares");
  natural->require_subcommand(1);
  auto* n_odd = natural->add_subcommand("odd", "odd side length");
  n_odd->add_option("--n", nn, "side length")->required();
  auto* n_even = natural->add_subcommand("even", "side length divisible by 4");
  n_even->add_option("--n", nn, "side length")->required();

  auto* lift = app.add_subcommand("lift", "lift labelings and squares");
  lift->require_subcommand(1);
  auto* l_frank = lift->add_subcommand("franklin-block", "8x8 Franklin square to 16x16");
  l_frank->add_option("--square", op_square, "square JSON")->required();
  auto* l_graph = lift->add_subcommand("graph", "labeling of a graph to the complete graph");
  l_graph->add_option("--graph", graph_file, "Graph JSON")->required();
  l_graph->add_option("--labeling", labeling, "labeling JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*build) return cmd_build(sa);
    if (*verify) return cmd_verify(sa, point);
    if (*hilbert) return cmd_hilbert(sa, dmax, method, quiet);
    if (*rays) return cmd_rays(sa);
    if (*decomp) return cmd_decompose(sa, basis_file, point);
    if (*count) return cmd_count(sa, sum, to);
    if (*series) return cmd_series(sa, basis_file, degree, route, pivot, show);
    if (*expand) return cmd_expand(series_file, expand_to);
    if (*per) return cmd_period(sa);
    if (*formula) return cmd_formula(sa, samples_file, series_file, period, degree, minimize);
    if (*eval) return cmd_eval(formula_file, at);
    if (*s_apply) return cmd_sym_apply(ops, op_square);
    if (*s_orbit) return cmd_sym_orbit(group, point, cap);
    if (*s_order) return cmd_sym_order(group);
    if (*s_iso) return cmd_sym_iso(group, point, other, cap);
    if (*g_build) return cmd_graph_build(kind, gn, gb, solid, to_bipartite);
    if (*g_cone) return cmd_graph_cone(graph_file);
    if (*g_match) return cmd_graph_matchings(graph_file);
    if (*g_faces) return cmd_graph_faces(graph_file, dim, birkhoff);
    if (*g_dim) return cmd_graph_dimension(graph_file);
    if (*g_cayley) return cmd_graph_cayley(table_file);
    if (*n_odd) return cmd_natural(true, nn);
    if (*n_even) return cmd_natural(false, nn);
    if (*l_frank) return cmd_lift_franklin(op_square);
    if (*l_graph) return cmd_lift_graph(graph_file, labeling);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const Infeasible& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Json::exception& e) {
    std::cerr << "error: JSON does not match the expected schema: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kUsage;
}
