// Acceptance run: one line per criterion. Criteria 4 and 8 are reported but never fail the run.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "magic/algebra.hpp"
#include "magic/ehrhart.hpp"
#include "magic/enumerate.hpp"
#include "magic/graphs.hpp"
#include "magic/hilbert.hpp"
#include "magic/symmetry.hpp"

using namespace magic;

namespace {

// Pinned limits.
constexpr double kBasisSeconds = 60.0;
constexpr double kOracleSeconds = 600.0;
constexpr double kStretchSeconds = 1800.0;
constexpr std::size_t kOrbitCap = 100000;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void check(bool ok, const std::string& what) {
    if (!ok) pass = false;
    notes.push_back((ok ? "ok " : "FAILED ") + what);
  }
  void info(const std::string& what) { notes.push_back(what); }
};

template <class T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::vector<Rational> poly(std::initializer_list<Rational> c) { return c; }

Rational q(long a, long b = 1) { return Rational(a, b); }

// ---------------------------------------------------------------- criterion 1

bool is_permutation_matrix(const Point& p, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t rs = 0, cs = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (p[i * n + j] != 0 && p[i * n + j] != 1) return false;
      rs += p[i * n + j];
      cs += p[j * n + i];
    }
    if (rs != 1 || cs != 1) return false;
  }
  return true;
}

Outcome criterion1() {
  Outcome out;
  auto timed = [&](const std::string& label, const ConeSystem& sys) {
    HilbertOptions o;
    o.budget = Budget::time_limit(kBasisSeconds);
    auto t0 = Clock::now();
    auto hb = hilbert_basis(sys, o);
    double dt = since(t0);
    out.check(dt <= kBasisSeconds, label + " in " + str(dt) + " s");
    return hb;
  };
  auto m3 = timed("magic 3", build_system(Family::Magic, {3, 0}));
  out.check(m3.size() == 5, "magic 3 size " + str(m3.size()));
  auto mc3 = timed("magic-cube 3", build_system(Family::MagicCube, {3, 0}));
  out.check(mc3.size() == 19 && mc3.degree_histogram() == std::map<std::int64_t, std::size_t>{{3, 19}},
            "magic-cube 3 size " + str(mc3.size()) + ", all degree 3");
  auto p5 = timed("pandiagonal 5", build_system(Family::Pandiagonal, {5, 0}));
  bool perms = std::all_of(p5.elements.begin(), p5.elements.end(),
                           [](const LatticePoint& e) { return is_permutation_matrix(e.vector, 5); });
  out.check(p5.size() == 10 && perms, "pandiagonal 5 size " + str(p5.size()) + ", permutation matrices");
  auto sh = timed("semi-magic hypercube 3,3", build_system(Family::SemiMagicHypercube, {3, 3}));
  out.check(sh.size() == 66 && sh.degree_histogram() == std::map<std::int64_t, std::size_t>{{1, 12}, {2, 54}},
            "semi-magic hypercube 3,3 size " + str(sh.size()) + " split " +
                str(sh.degree_histogram()[1]) + "@1/" + str(sh.degree_histogram()[2]) + "@2");
  auto f8 = timed("franklin8", build_system(Family::Franklin8, {8, 0}));
  out.check(f8.size() == 98, "franklin8 size " + str(f8.size()));

  auto m4 = timed("magic 4", build_system(Family::Magic, {4, 0}));
  out.check(m4.size() == 20, "magic 4 size " + str(m4.size()));
  bool irreducible = true;
  for (const auto& e : m4.elements) irreducible &= is_irreducible(m4.system, e.vector);
  out.check(irreducible, "magic 4 elements irreducible");
  PointEnumerator pe(m4.system);
  std::size_t checked = 0;
  bool complete = true;
  for (std::int64_t s = 0; s <= 6; ++s)
    for (const auto& p : pe.points(s)) {
      auto d = decompose(p, m4);
      complete &= d && recombine(*d, m4) == p;
      ++checked;
    }
  out.check(complete, "magic 4 decomposes all " + str(checked) + " members of degree <= 6");
  return out;
}

// ---------------------------------------------------------------- criterion 2

struct SeriesCase {
  std::string label;
  ConeSystem sys;
  std::vector<std::int64_t> degrees;
  std::vector<long> expected;
};

std::vector<SeriesCase> series_cases() {
  auto range = [](std::int64_t lo, std::int64_t hi, std::int64_t step) {
    std::vector<std::int64_t> v;
    for (auto s = lo; s <= hi; s += step) v.push_back(s);
    return v;
  };
  return {
      {"M4", build_system(Family::Magic, {4, 0}), range(0, 8, 1),
       {1, 8, 48, 200, 675, 1904, 4736, 10608, 21925}},
      {"MC3", build_system(Family::MagicCube, {3, 0}), range(0, 18, 3),
       {1, 19, 121, 439, 1171, 2581, 4999}},
      {"SH33", build_system(Family::SemiMagicHypercube, {3, 3}), range(0, 7, 1),
       {1, 12, 132, 847, 3921, 14286, 43687, 116757}},
      {"F8", build_system(Family::Franklin8, {8, 0}), range(0, 16, 2),
       {1, 0, 34, 64, 483, 1152, 4228, 9792, 25957}},
      {"Petersen", labeling_cone(petersen()), range(0, 7, 1), {1, 6, 27, 87, 228, 513, 1034, 1914}},
  };
}

Outcome criterion2() {
  Outcome out;
  double oracle_total = 0;
  for (const auto& c : series_cases()) {
    EnumOptions eo;
    eo.threads = 4;
    auto t0 = Clock::now();
    auto counts = sample_counts(c.sys, c.degrees, eo);
    oracle_total += since(t0);
    bool oracle_ok = true;
    for (std::size_t k = 0; k < c.degrees.size(); ++k) oracle_ok &= counts[c.degrees[k]] == c.expected[k];
    out.check(oracle_ok, c.label + " oracle");

    t0 = Clock::now();
    auto hb = hilbert_basis(c.sys);
    SeriesOptions so;
    so.degree = c.degrees.back();
    auto g = hilbert_series(hb, so);
    auto coeffs = expand_series(g, c.degrees.back());
    bool pipe_ok = true;
    for (std::size_t k = 0; k < c.degrees.size(); ++k)
      pipe_ok &= coeffs[static_cast<std::size_t>(c.degrees[k])] == c.expected[k];
    std::string route = g.exact_through ? "truncated through " + str(*g.exact_through) : "full";
    out.check(pipe_ok, c.label + " pipeline (" + route + ", " + str(since(t0)) + " s)");
  }
  out.check(oracle_total <= kOracleSeconds, "oracle total " + str(oracle_total) + " s");
  return out;
}

// ---------------------------------------------------------------- criterion 3

struct FormulaCase {
  std::string label;
  ConeSystem sys;
  QuasiPolynomial expected;
};

QuasiPolynomial qp_of(std::int64_t period, std::vector<std::vector<Rational>> c) {
  QuasiPolynomial qp;
  qp.period = period;
  qp.constituents = std::move(c);
  return qp;
}

// Expands a product of ascending polynomials times a scalar.
std::vector<Rational> product(Rational scale, const std::vector<std::vector<Rational>>& factors) {
  std::vector<Rational> acc{scale};
  for (const auto& f : factors) {
    std::vector<Rational> next(acc.size() + f.size() - 1, 0);
    for (std::size_t i = 0; i < acc.size(); ++i)
      for (std::size_t j = 0; j < f.size(); ++j) next[i + j] += acc[i] * f[j];
    acc = std::move(next);
  }
  return acc;
}

std::vector<FormulaCase> formula_cases() {
  auto graph = [](const Graph& g) { return labeling_cone(g); };
  auto same2 = [](std::vector<Rational> even, Rational odd_constant) {
    auto odd = even;
    odd[0] = odd_constant;
    return std::vector<std::vector<Rational>>{even, odd};
  };
  std::vector<FormulaCase> v;
  v.push_back({"M3", build_system(Family::Magic, {3, 0}), qp_of(3, {poly({1, q(2, 3), q(2, 9)}), {}, {}})});
  v.push_back({"H_K4", graph(complete(4)), qp_of(1, {poly({1, q(3, 2), q(1, 2)})})});
  v.push_back({"H_tetrahedral", graph(platonic("tetrahedral")), qp_of(1, {poly({1, q(3, 2), q(1, 2)})})});
  v.push_back({"H_cube", graph(platonic("cube")),
               qp_of(1, {poly({1, q(83, 30), q(3), q(5, 3), q(1, 2), q(1, 15)})})});
  v.push_back({"H_K3", graph(complete(3)), qp_of(2, {poly({1}), {}})});
  v.push_back({"H_Gamma2", graph(gamma_graph(2)), qp_of(1, {poly({1, 1})})});
  v.push_back({"MP4", build_system(Family::Pandiagonal, {4, 0}),
               qp_of(2, {product(q(1, 48), {poly({12, 4, 1}), poly({2, 1}), poly({2, 1})}), {}})});
  v.push_back({"MP5", build_system(Family::Pandiagonal, {5, 0}),
               qp_of(1, {product(q(1, 8064), {poly({4, 1}), poly({3, 1}), poly({2, 1}), poly({1, 1}),
                                              poly({8, 5, 1}), poly({42, 5, 1})})})});
  v.push_back({"P3", build_system(Family::PandiagonalSymmetric, {3, 0}), qp_of(3, {poly({1}), {}, {}})});
  v.push_back({"P4", build_system(Family::PandiagonalSymmetric, {4, 0}),
               qp_of(4, {poly({1, q(1, 2), q(1, 8)}), {}, {}, {}})});
  v.push_back({"P5", build_system(Family::PandiagonalSymmetric, {5, 0}),
               qp_of(2, {poly({1, q(25, 24), q(35, 96), q(5, 96), q(1, 384)}),
                         poly({q(3, 128), 0, q(-5, 192), 0, q(1, 384)})})});
  v.push_back({"H_octahedral", graph(platonic("octahedral")),
               qp_of(2, same2(poly({1, q(12, 5), q(38, 15), q(3, 2), q(25, 48), q(1, 10), q(1, 120)}),
                              q(15, 16)))});
  v.push_back({"H_Gamma3", graph(gamma_graph(3)),
               qp_of(2, same2(poly({1, q(7, 4), q(9, 8), q(1, 4)}), q(7, 8)))});
  v.push_back({"H_Gamma4", graph(gamma_graph(4)),
               qp_of(2, same2(poly({1, q(8, 3), q(29, 9), q(13, 6), q(119, 144), q(1, 6), q(1, 72)}),
                              q(15, 16)))});
  return v;
}

Outcome criterion3() {
  Outcome out;
  for (const auto& c : formula_cases()) {
    std::int64_t period = quasi_period(c.sys);
    std::size_t degree = static_cast<std::size_t>(polytope_dimension(c.sys));
    std::size_t samples = (degree + 1) * static_cast<std::size_t>(period);
    std::size_t bound = (c.expected.degree() + 1) * static_cast<std::size_t>(c.expected.period);
    EnumOptions eo;
    eo.threads = 4;
    auto qp = minimize_period(formula_from_oracle(c.sys, period, degree, eo));
    bool exact = qp == c.expected;
    out.check(exact && samples <= bound,
              c.label + " from " + str(samples) + " samples (period " + str(period) + ", degree " +
                  str(degree) + ", bound " + str(bound) + ")");
    if (!exact) out.info("  got " + qp.to_string("r"));
    if (c.label == "MP5") out.check(qp.eval(1) == 10, "MP5(1) = " + qp.eval(1).get_str());
  }
  return out;
}

// ---------------------------------------------------------------- criterion 4

std::vector<Rational> f8_constituent(std::int64_t r) {
  std::vector<Rational> c(10, 0);
  c[9] = q(23, 627056640);
  c[8] = q(23, 17418240);
  c[7] = q(167, 6531840);
  c[6] = q(5, 15552);
  bool zero_class = r == 0 || r == 4 || r == 8;
  if (zero_class) {
    c[5] = q(581, 186624);
    c[4] = q(1823, 77760);
    c[3] = q(6127, 45360);
  } else {
    c[5] = q(2419, 933120);
    c[4] = q(1013, 77760);
    c[3] = q(701, 22680);
  }
  switch (r) {
    case 0: c[2] = q(431, 756); c[1] = q(1843, 1260); c[0] = 1; break;
    case 4: c[2] = q(10741, 20412); c[1] = q(113443, 102060); c[0] = q(3211, 2187); break;
    case 8: c[2] = q(11189, 20412); c[1] = q(167203, 102060); c[0] = q(5771, 2187); break;
    case 2: c[2] = q(-359, 10206); c[1] = q(-177967, 816480); c[0] = q(241, 17496); break;
    case 6: c[2] = q(-5, 378); c[1] = q(-3967, 10080); c[0] = q(-13, 8); break;
    case 10: c[2] = q(-583, 10206); c[1] = q(-608047, 816480); c[0] = q(-20239, 17496); break;
    default: return {};
  }
  return c;
}

QuasiPolynomial pf8_formula() {
  return qp_of(4, {poly({1, q(106, 105), q(197, 420), q(2, 15), q(1, 40), q(1, 320), q(1, 3840), q(1, 71680),
                         q(1, 2293760)}),
                   {}, {}, {}});
}

Rational horner(const std::vector<Rational>& c, std::int64_t s) {
  Rational acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * s + c[i];
  return acc;
}

// Series of a system through the full toric route, with a time budget.
std::optional<std::vector<Integer>> full_series(const ConeSystem& sys, std::int64_t upto, double seconds,
                                                std::string& note) {
  auto t0 = Clock::now();
  try {
    auto hb = hilbert_basis(sys);
    SeriesOptions so;
    so.route = SeriesOptions::Route::Full;
    so.budget = Budget::time_limit(seconds);
    auto g = hilbert_series(hb, so);
    note = "full route in " + str(since(t0)) + " s";
    return expand_series(g, upto);
  } catch (const BudgetExceeded&) {
    note = "full route exceeded " + str(seconds) + " s";
    return std::nullopt;
  }
}

// Interpolates each residue class from series coefficients, skipping the listed exceptional degrees.
QuasiPolynomial interpolate_series(const std::vector<Integer>& c, std::int64_t period, std::size_t degree,
                                   const std::set<std::int64_t>& skip) {
  std::map<std::int64_t, Integer> samples;
  for (std::size_t s = 0; s < c.size(); ++s)
    if (!skip.count(static_cast<std::int64_t>(s))) samples[static_cast<std::int64_t>(s)] = c[s];
  return interpolate(samples, period, degree);
}

// Per-computation budget for the stretch parts of criteria 4 and 8.
double stretch_seconds() {
  if (const char* env = std::getenv("MAGIC_STRETCH_SECONDS")) return std::atof(env);
  return kStretchSeconds;
}

Outcome criterion4(bool& stretch_met) {
  Outcome out;
  const double budget = stretch_seconds();
  stretch_met = false;

  // Stretch: both Franklin families through the full toric route.
  bool f8_ok = false, pf8_ok = false;
  std::string note;
  if (budget > 0) {
    auto pf = full_series(build_system(Family::PandiagonalFranklin8, {8, 0}), 40, budget, note);
    if (pf) {
      auto qp = interpolate_series(*pf, 4, 8, {});
      pf8_ok = qp == pf8_formula();
      out.info((pf8_ok ? "stretch ok " : "stretch FAILED ") + std::string("PF8 constituents, leading ") +
               qp.constituent(0).back().get_str() + " (" + note + ")");
    } else {
      out.info("stretch not reached: PF8 " + note);
    }
    auto f = full_series(build_system(Family::Franklin8, {8, 0}), 12 * 11 + 2, budget, note);
    if (f) {
      // s = 2 is the one degree where the constituent does not apply.
      auto qp = interpolate_series(*f, 12, 9, {2});
      bool match = true;
      for (std::int64_t r = 0; r < 12; ++r) match &= qp.constituent(r) == f8_constituent(r);
      f8_ok = match && qp.eval(260) == Integer("228881701845346");
      out.info((f8_ok ? "stretch ok " : "stretch FAILED ") + std::string("F8 constituents, F8(260) = ") +
               qp.eval(260).get_str() + " (" + note + ")");
    } else {
      out.info("stretch not reached: F8 " + note);
    }
  } else {
    out.info("stretch skipped (MAGIC_STRETCH_SECONDS=0)");
  }
  stretch_met = f8_ok && pf8_ok;
  out.info(std::string("F8(260) from the closed-form constituents = ") +
           horner(f8_constituent(260 % 12), 260).get_str());

  // Fallback.
  auto f8cases = series_cases()[3];
  auto counts = sample_counts(f8cases.sys, f8cases.degrees);
  bool f8_counts = true;
  for (std::size_t k = 0; k < f8cases.degrees.size(); ++k)
    f8_counts &= counts[f8cases.degrees[k]] == f8cases.expected[k];
  out.check(f8_counts, "fallback F8 oracle coefficients s=0..16");
  auto pf8 = sample_counts(build_system(Family::PandiagonalFranklin8, {8, 0}), {0, 4, 8, 12});
  bool pf_counts = true;
  std::string vals;
  for (auto s : {0, 4, 8, 12}) {
    pf_counts &= pf8[s] == pf8_formula().eval(s);
    vals += " " + pf8[s].get_str();
  }
  out.check(pf_counts, "fallback PF8 oracle counts at 0,4,8,12:" + vals);
  // the closed-form F8 constituents agree with the oracle where both apply
  bool consistent = true;
  for (std::size_t k = 0; k < f8cases.degrees.size(); ++k) {
    auto s = f8cases.degrees[k];
    if (s == 2) continue;
    consistent &= horner(f8_constituent(s % 12), s) == Rational(f8cases.expected[k]);
  }
  out.check(consistent, "closed-form F8 constituents agree with the oracle at s=0..16");
  return out;
}

// ---------------------------------------------------------------- criterion 5

Outcome criterion5() {
  Outcome out;
  auto g8 = group_g8();
  auto s16 = group_s16();
  auto h16 = group_h16();
  out.check(gf2_order(g8) == Integer(1) << 8, "G8 GF(2) order 2^" + str(gf2_rank(g8)));
  out.check(gf2_order(s16) == Integer(1) << 16, "S16 GF(2) order 2^" + str(gf2_rank(s16)));
  out.check(gf2_order(h16) == Integer(1) << 24, "H16 GF(2) order 2^" + str(gf2_rank(h16)));
  out.info("exact orders: G8 " + group_order(g8).get_str() + ", S16 " + group_order(s16).get_str() +
           ", H16 " + group_order(h16).get_str() + (generators_commute(h16) ? "" : " (H16 generators do not commute)"));

  auto sys = build_system(Family::Franklin8, {8, 0});
  auto group = franklin_group(8);
  PointEnumerator pe(sys);
  std::size_t squares = 0;
  bool closed = true;
  for (std::int64_t s = 0; s <= 8; ++s)
    for (const auto& p : pe.points(s)) {
      ++squares;
      for (const auto& gen : group.generators) closed &= verify_member(sys, act(gen, p)).member;
    }
  out.check(closed, "all " + str(group.generators.size()) + " generators preserve all " + str(squares) +
                        " franklin squares of sum <= 8");

  auto hb = hilbert_basis(sys);
  auto part = orbit_classes(hb.vectors(), group_preset("G8+R:8"), kOrbitCap);
  std::vector<std::size_t> sizes;
  for (const auto& c : part.classes) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  out.check(part.closed && sizes == std::vector<std::size_t>{2, 32, 64},
            "franklin basis orbits under G8+R: " + str(sizes.size()) + " classes");

  auto f1 = flatten(franklin_f1()), f2 = flatten(franklin_f2());
  out.check(verify_member(sys, f1).degree == 260 && verify_member(sys, f2).degree == 260,
            "F1 and F2 are franklin squares of sum 260");
  auto full = franklin_group(8);
  try {
    bool iso = isomorphic(f1, f2, full, kOrbitCap);
    out.check(!iso, "F1 and F2 not isomorphic under a group of order " + group_order(full).get_str());
  } catch (const BudgetExceeded&) {
    out.check(false, "isomorphism search exceeded its cap");
  }
  return out;
}

// ---------------------------------------------------------------- criterion 6

std::vector<std::vector<int>> brute_latin_squares(int n) {
  std::vector<std::vector<int>> rows;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  do rows.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<int>> out;
  std::vector<std::size_t> pick;
  std::function<void()> rec = [&] {
    if (pick.size() == static_cast<std::size_t>(n)) {
      std::vector<int> flat;
      for (auto k : pick) flat.insert(flat.end(), rows[k].begin(), rows[k].end());
      out.push_back(flat);
      return;
    }
    for (std::size_t k = 0; k < rows.size(); ++k) {
      bool ok = true;
      for (auto prev : pick)
        for (int j = 0; j < n; ++j) ok &= rows[prev][static_cast<std::size_t>(j)] != rows[k][static_cast<std::size_t>(j)];
      if (!ok) continue;
      pick.push_back(k);
      rec();
      pick.pop_back();
    }
  };
  rec();
  return out;
}

Outcome criterion6() {
  Outcome out;
  out.check(perfect_matchings(complete(6)).size() == 15, "K6 perfect matchings");
  out.check(perfect_matchings(complete_bipartite(3, 3)).size() == 6, "K33 perfect matchings");
  out.check(perfect_matchings(oriented_octahedron()).size() == 2, "G_DO perfect matchings");

  std::mt19937 rng(6006);
  bool round_trip = true;
  for (int t = 0; t < 100; ++t) {
    std::size_t n = 1 + rng() % 6;
    std::vector<Edge> e;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (rng() % 3 == 0) e.emplace_back(a, b);
    auto d = Graph::make(n, true, e);
    round_trip &= bipartite_to_digraph(digraph_to_bipartite(d)) == d;
  }
  out.check(round_trip, "digraph/bipartite round trip on 100 random digraphs");

  std::vector<std::pair<std::string, Graph>> shipped{
      {"K3", complete(3)}, {"K4", complete(4)}, {"K5", complete(5)}, {"K6", complete(6)},
      {"K33", complete_bipartite(3, 3)}, {"K24", complete_bipartite(2, 4)}, {"Petersen", petersen()},
      {"tetrahedral", platonic("tetrahedral")}, {"cube", platonic("cube")},
      {"octahedral", platonic("octahedral")}, {"dodecahedral", platonic("dodecahedral")},
      {"icosahedral", platonic("icosahedral")}, {"Gamma2", gamma_graph(2)}, {"Gamma3", gamma_graph(3)},
      {"Gamma4", gamma_graph(4)}, {"Gamma5", gamma_graph(5)}, {"DO", oriented_octahedron()}};
  bool dims = true;
  std::size_t tested = 0;
  for (const auto& [name, g] : shipped) {
    if (!is_positive(g)) {
      out.info("  " + name + " has no positive labeling; skipped");
      continue;
    }
    ++tested;
    bool ok = dimension(g) == dimension_formula(g);
    if (!ok) out.info("  dimension mismatch on " + name);
    dims &= ok;
  }
  for (std::size_t n = 1; n <= 5; ++n) {
    ++tested;
    dims &= dimension(pi(n)) == static_cast<std::int64_t>((n - 1) * (n - 1)) &&
            dimension_formula(pi(n)) == static_cast<std::int64_t>((n - 1) * (n - 1));
  }
  out.check(dims, "dimension formulas on " + str(tested) + " graphs");

  auto p3 = pi(3);
  out.check(birkhoff_vertices(p3).size() == 6 && faces(p3, 3).size() == 9 && dimension(p3) == 4,
            "B3: 6 vertices, 9 facets, dimension 4");
  out.check(birkhoff_faces(gamma_graph(4)).size() == 3, "Gamma4 Birkhoff B2 faces");

  auto g6 = gamma_graph(6);
  auto lab = [&](std::vector<Edge> es) {
    Point l(g6.size(), 0);
    for (auto [a, b] : es) l[*g6.edge_index(a, b)] = 1;
    return l;
  };
  Point host(g6.size(), 0);
  for (auto e : platonic("octahedral").edges) host[*g6.edge_index(e.first, e.second)] = 1;
  auto o1 = orbit_count_in_host(lab({{0, 3}, {1, 2}, {4, 5}}), host, 6);
  auto o2 = orbit_count_in_host(lab({{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}), host, 6);
  out.check(o1 == 8 && o2 == 4, "octahedral orbit counts " + str(o1) + " and " + str(o2));
  auto octa = hilbert_basis(labeling_cone(platonic("octahedral")));
  out.check(octa.size() == o1 + o2, "octahedral basis has " + str(octa.size()) + " elements");

  auto cay = cayley_digraph(s3_table());
  auto sum = magic_sum(cay.graph, cay.labeling);
  out.check(sum == 15, "Cayley(S3) labeling magic with sum " + (sum ? str(*sum) : std::string("none")));

  auto sh = build_system(Family::SemiMagicHypercube, {3, 3});
  auto hb = hilbert_basis(sh);
  std::set<Point> degree_one;
  for (const auto& e : hb.elements)
    if (e.degree == 1) degree_one.insert(e.vector);
  auto latins = brute_latin_squares(3);
  std::set<Point> images;
  bool bij = true;
  for (const auto& flat : latins) {
    LatinSquare l(3);
    for (std::size_t i = 0; i < 3; ++i) l[i].assign(flat.begin() + static_cast<long>(3 * i), flat.begin() + static_cast<long>(3 * i + 3));
    auto cube = latin_square_to_cube(l);
    bij &= degree_one.count(cube) == 1 && cube_to_latin_square(cube, 3) == l;
    images.insert(cube);
  }
  out.check(bij && images.size() == latins.size() && latins.size() == degree_one.size() && latins.size() == 12,
            "latin squares n=3: " + str(latins.size()) + " <-> " + str(degree_one.size()));
  return out;
}

// ---------------------------------------------------------------- criterion 7

Outcome criterion7() {
  Outcome out;
  std::string cmd = std::string("\"") + MAGIC_PROPERTY_BINARY + "\" --minimal >/dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  out.check(rc == 0, "property suites (7 suites of 200 cases, exit " + str(rc) + ")");
  return out;
}

// ---------------------------------------------------------------- criterion 8

Outcome criterion8() {
  Outcome out;
  auto g7 = truncated_hilbert_basis(labeling_cone(gamma_graph(7)), 3);
  auto hist = g7.degree_histogram();
  out.check(hist.count(3) && hist[3] > 0, "Gamma7 has " + str(hist[3]) + " basis elements of degree 3");

  const double budget = stretch_seconds();
  HilbertOptions ho;
  ho.budget = Budget::time_limit(budget);
  try {
    auto t0 = Clock::now();
    auto ico = hilbert_basis(labeling_cone(platonic("icosahedral")), ho);
    out.check(ico.size() == 4195, "icosahedral basis size " + str(ico.size()) + " in " + str(since(t0)) + " s");
  } catch (const BudgetExceeded&) {
    out.check(false, "icosahedral basis exceeded " + str(budget) + " s");
  }

  std::vector<Rational> even{1, q(9, 2), q(4691, 560), q(1513, 168), q(27625, 4032), q(255, 64),
                             q(3361, 1920), q(9, 16), q(225, 1792), q(47, 2688), q(47, 40320)};
  auto odd = even;
  odd[1] = q(567, 128);
  odd[0] = q(229, 256);
  auto expected = qp_of(2, {even, odd});
  std::string note;
  auto dodeca = labeling_cone(platonic("dodecahedral"));
  auto c = full_series(dodeca, 21, budget, note);
  if (c) {
    auto qp = minimize_period(interpolate_series(*c, 2, 10, {}));
    out.check(qp == expected, "dodecahedral constituents (" + note + ")");
  } else {
    out.check(false, "dodecahedral series: " + note);
  }
  return out;
}

void report(int k, const Outcome& o, const std::string& tag = "") {
  std::cout << "criterion " << k << ": " << (o.pass ? "PASS" : "FAIL") << tag << "\n";
  for (const auto& n : o.notes) std::cout << "    " << n << "\n";
  std::cout.flush();
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  auto want = [&](int k) { return only.empty() || only.count(k); };
  bool gating_ok = true;
  auto run = [&](int k, const std::function<Outcome()>& f) {
    if (!want(k)) return;
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    report(k, o);
    gating_ok &= o.pass;
  };
  run(1, criterion1);
  run(2, criterion2);
  run(3, criterion3);
  if (want(4)) {
    bool met = false;
    Outcome o;
    try {
      o = criterion4(met);
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    report(4, o, o.pass ? (met ? " (stretch met)" : " (fallback; stretch not met, not gating)")
                        : " (fallback failed)");
    gating_ok &= o.pass;
  }
  run(5, criterion5);
  run(6, criterion6);
  run(7, criterion7);
  if (want(8)) {
    Outcome o;
    try {
      o = criterion8();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    report(8, o, " (stretch, not gating)");
  }
  return gating_ok ? 0 : 1;
}
