#include "magic/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <regex>
#include <set>

namespace magic {

Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (auto v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Permutation inverse(const Permutation& p) {
  Permutation q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = i;
  return q;
}

Permutation then(const Permutation& first, const Permutation& second) {
  if (first.size() != second.size()) throw InvalidArgument("permutation degree mismatch");
  Permutation r(first.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = first[second[i]];
  return r;
}

Point act(const Permutation& p, const Point& x) {
  if (p.size() != x.size())
    throw InvalidArgument("permutation of degree " + std::to_string(p.size()) +
                          " applied to a vector of length " + std::to_string(x.size()));
  Point y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[p[i]];
  return y;
}

SquareOp SquareOp::identity(std::size_t n) {
  return {identity_permutation(n), identity_permutation(n), false};
}

Permutation SquareOp::cells() const {
  const std::size_t n = rows.size();
  Permutation c(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      c[i * n + j] = transpose ? rows[j] * n + cols[i] : rows[i] * n + cols[j];
  return c;
}

SquareOp SquareOp::from_cells(const Permutation& c, std::size_t n) {
  if (c.size() != n * n || !is_permutation(c))
    throw InvalidArgument("SquareOp: not a permutation of the cells of an n x n square");
  SquareOp op;
  op.rows.resize(n);
  op.cols.resize(n);
  op.transpose = n > 1 && c[1] / n != c[0] / n;
  for (std::size_t k = 0; k < n; ++k) {
    if (op.transpose) {
      op.rows[k] = c[k] / n;
      op.cols[k] = c[k * n] % n;
    } else {
      op.rows[k] = c[k * n] / n;
      op.cols[k] = c[k] % n;
    }
  }
  if (!is_permutation(op.rows) || !is_permutation(op.cols) || op.cells() != c)
    throw InvalidArgument("SquareOp: cell permutation does not come from row, column and transpose moves");
  return op;
}

SquareOp SquareOp::then(const SquareOp& next) const {
  if (n() != next.n()) throw InvalidArgument("SquareOp: size mismatch in composition");
  return from_cells(magic::then(cells(), next.cells()), n());
}

bool SquareOp::is_identity() const { return *this == identity(n()); }

Square apply(const SquareOp& op, const Square& a) {
  const std::size_t n = op.n();
  if (a.size() != n)
    throw InvalidArgument("apply: operation is for " + std::to_string(n) + "x" + std::to_string(n) +
                          " squares");
  for (const auto& row : a)
    if (row.size() != n) throw InvalidArgument("apply: input is not square");
  return unflatten(act(op.cells(), flatten(a)), n);
}

namespace {

std::vector<std::size_t> swapped(std::size_t n, std::size_t i, std::size_t j) {
  if (i >= n || j >= n) throw InvalidArgument("line index out of range");
  auto p = identity_permutation(n);
  std::swap(p[i], p[j]);
  return p;
}

std::vector<std::size_t> reversed(std::size_t n) {
  auto p = identity_permutation(n);
  std::reverse(p.begin(), p.end());
  return p;
}

std::vector<std::size_t> halves_swapped(std::size_t n) {
  if (n % 2) throw InvalidArgument("half swap needs an even side length");
  Permutation p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = (i + n / 2) % n;
  return p;
}

std::vector<std::size_t> adjacent_swapped(std::size_t n) {
  if (n % 2) throw InvalidArgument("adjacent swap needs an even side length");
  Permutation p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i ^ 1;
  return p;
}

}  // namespace

SquareOp row_swap(std::size_t n, std::size_t i, std::size_t j) {
  return {swapped(n, i, j), identity_permutation(n), false};
}
SquareOp col_swap(std::size_t n, std::size_t i, std::size_t j) {
  return {identity_permutation(n), swapped(n, i, j), false};
}
SquareOp transpose_op(std::size_t n) { return {identity_permutation(n), identity_permutation(n), true}; }
SquareOp rotate90(std::size_t n) { return {identity_permutation(n), reversed(n), true}; }
SquareOp reflect_rows(std::size_t n) { return {reversed(n), identity_permutation(n), false}; }
SquareOp reflect_cols(std::size_t n) { return {identity_permutation(n), reversed(n), false}; }
SquareOp half_swap_rows(std::size_t n) { return {halves_swapped(n), identity_permutation(n), false}; }
SquareOp half_swap_cols(std::size_t n) { return {identity_permutation(n), halves_swapped(n), false}; }
SquareOp adjacent_swap_rows(std::size_t n) { return {adjacent_swapped(n), identity_permutation(n), false}; }
SquareOp adjacent_swap_cols(std::size_t n) { return {identity_permutation(n), adjacent_swapped(n), false}; }

SquareOp parse_square_op(const std::string& name, std::size_t n) {
  if (name == "identity") return SquareOp::identity(n);
  if (name == "R" || name == "rotate") return rotate90(n);
  if (name == "transpose") return transpose_op(n);
  if (name == "reflect-rows") return reflect_rows(n);
  if (name == "reflect-cols" || name == "reflect") return reflect_cols(n);
  if (name == "half-rows") return half_swap_rows(n);
  if (name == "half-cols") return half_swap_cols(n);
  if (name == "adjacent-rows") return adjacent_swap_rows(n);
  if (name == "adjacent-cols") return adjacent_swap_cols(n);
  static const std::regex swap_re(R"(\(\s*([rc])(\d+)\s*,\s*([rc])(\d+)\s*\))");
  std::smatch m;
  if (std::regex_match(name, m, swap_re) && m[1] == m[3]) {
    std::size_t i = std::stoul(m[2]), j = std::stoul(m[4]);
    if (i == 0 || j == 0 || i > n || j > n)
      throw InvalidArgument("square op '" + name + "': line index out of range 1.." + std::to_string(n));
    return m[1] == "r" ? row_swap(n, i - 1, j - 1) : col_swap(n, i - 1, j - 1);
  }
  throw InvalidArgument("unknown square op '" + name + "'");
}

GroupSpec square_group(std::string name, std::size_t n, std::vector<SquareOp> ops) {
  GroupSpec g;
  g.name = std::move(name);
  g.degree = n * n;
  g.side = n;
  for (const auto& op : ops) {
    if (op.n() != n) throw InvalidArgument("square_group: operation of the wrong size");
    g.generators.push_back(op.cells());
  }
  g.square_generators = std::move(ops);
  return g;
}

namespace {

void add_line_swaps(std::vector<SquareOp>& ops, std::size_t n,
                    const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  for (const auto& [i, j] : pairs) ops.push_back(col_swap(n, i, j));
  for (const auto& [i, j] : pairs) ops.push_back(row_swap(n, i, j));
}

std::vector<std::pair<std::size_t, std::size_t>> g8_pairs() { return {{0, 2}, {4, 6}, {1, 3}, {5, 7}}; }

std::vector<std::pair<std::size_t, std::size_t>> h16_pairs() {
  std::vector<std::pair<std::size_t, std::size_t>> p;
  for (std::size_t h : {0, 8})
    for (std::size_t i = 0; i < 6; ++i) p.emplace_back(h + i, h + i + 2);
  return p;
}

std::vector<std::pair<std::size_t, std::size_t>> s16_pairs() {
  std::vector<std::pair<std::size_t, std::size_t>> p;
  for (std::size_t h : {0, 8})
    for (std::size_t i = 0; i < 4; ++i) p.emplace_back(h + i, h + i + 4);
  return p;
}

}  // namespace

GroupSpec group_g8() {
  std::vector<SquareOp> ops;
  add_line_swaps(ops, 8, g8_pairs());
  return square_group("G8", 8, std::move(ops));
}

GroupSpec group_h16() {
  std::vector<SquareOp> ops;
  add_line_swaps(ops, 16, h16_pairs());
  return square_group("H16", 16, std::move(ops));
}

GroupSpec group_s16() {
  std::vector<SquareOp> ops;
  add_line_swaps(ops, 16, s16_pairs());
  return square_group("S16", 16, std::move(ops));
}

GroupSpec dihedral_group(std::size_t n) {
  return square_group("dihedral:" + std::to_string(n), n, {rotate90(n), reflect_cols(n)});
}

GroupSpec franklin_group(std::size_t n) {
  if (n != 8 && n != 16) throw InvalidArgument("franklin_group: n must be 8 or 16");
  std::vector<SquareOp> ops{rotate90(n), reflect_cols(n), transpose_op(n)};
  if (n == 8) {
    add_line_swaps(ops, n, g8_pairs());
  } else {
    add_line_swaps(ops, n, h16_pairs());
    add_line_swaps(ops, n, s16_pairs());
  }
  for (auto op : {half_swap_rows(n), half_swap_cols(n), adjacent_swap_rows(n), adjacent_swap_cols(n)})
    ops.push_back(op);
  return square_group("franklin:" + std::to_string(n), n, std::move(ops));
}

GroupSpec cube_rotation_group(std::size_t n) {
  if (n == 0) throw InvalidArgument("cube_rotation_group: n must be positive");
  auto idx = [n](std::size_t i, std::size_t j, std::size_t k) { return (i * n + j) * n + k; };
  Permutation a(n * n * n), b(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        a[idx(i, j, k)] = idx(j, n - 1 - i, k);
        b[idx(i, j, k)] = idx(i, k, n - 1 - j);
      }
  return group_from_generators("cube24:" + std::to_string(n), {a, b});
}

GroupSpec symmetric_group_on_gamma(std::size_t n) {
  if (n == 0) throw InvalidArgument("symmetric_group_on_gamma: n must be positive");
  std::vector<std::vector<std::size_t>> index(n, std::vector<std::size_t>(n));
  std::size_t q = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) index[i][j] = index[j][i] = q++;
  auto induced = [&](const Permutation& sigma) {
    Permutation p(q);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) p[index[i][j]] = index[sigma[i]][sigma[j]];
    return p;
  };
  std::vector<Permutation> gens;
  if (n > 1) {
    Permutation swap01 = identity_permutation(n), cycle(n);
    std::swap(swap01[0], swap01[1]);
    for (std::size_t i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    gens = {induced(swap01), induced(cycle)};
  }
  auto g = group_from_generators("symmetric:" + std::to_string(n), std::move(gens));
  g.degree = q;
  return g;
}

GroupSpec group_from_generators(std::string name, std::vector<Permutation> gens) {
  GroupSpec g;
  g.name = std::move(name);
  if (!gens.empty()) g.degree = gens.front().size();
  for (const auto& p : gens)
    if (p.size() != g.degree || !is_permutation(p))
      throw InvalidArgument("group '" + g.name + "': generators must be permutations of one degree");
  g.generators = std::move(gens);
  return g;
}

GroupSpec join(const GroupSpec& a, const GroupSpec& b) {
  if (a.degree != b.degree) throw InvalidArgument("join: groups act on different point sets");
  GroupSpec g = a;
  g.name = a.name + "+" + b.name;
  g.generators.insert(g.generators.end(), b.generators.begin(), b.generators.end());
  if (a.side && b.side && *a.side == *b.side) {
    g.square_generators.insert(g.square_generators.end(), b.square_generators.begin(),
                               b.square_generators.end());
  } else {
    g.side.reset();
    g.square_generators.clear();
  }
  return g;
}

GroupSpec group_preset(const std::string& name) {
  auto plus = name.find('+');
  if (plus != std::string::npos)
    return join(group_preset(name.substr(0, plus)), group_preset(name.substr(plus + 1)));
  if (name == "G8") return group_g8();
  if (name == "H16") return group_h16();
  if (name == "S16") return group_s16();
  auto colon = name.find(':');
  if (colon != std::string::npos) {
    const std::string base = name.substr(0, colon);
    std::size_t n = 0;
    try {
      n = std::stoul(name.substr(colon + 1));
    } catch (const std::exception&) {
      throw InvalidArgument("group preset '" + name + "': bad size");
    }
    if (base == "dihedral") return dihedral_group(n);
    if (base == "franklin") return franklin_group(n);
    if (base == "cube24") return cube_rotation_group(n);
    if (base == "symmetric") return symmetric_group_on_gamma(n);
    if (base == "R") return square_group("R:" + std::to_string(n), n, {rotate90(n)});
  }
  throw InvalidArgument("unknown group preset '" + name +
                        "' (G8, H16, S16, dihedral:n, franklin:n, cube24:n, symmetric:n, R:n)");
}

namespace {

// Stabilizer chain; permutations are maps point -> image, multiplied left to right.
class StabilizerChain {
 public:
  StabilizerChain(std::size_t degree, const Budget& budget)
      : n_(degree), clock_(budget, "group_order") {}

  void build(const std::vector<Permutation>& gens) {
    std::vector<Permutation> moving;
    for (const auto& g : gens)
      if (g != identity_permutation(n_)) moving.push_back(g);
    for (const auto& g : moving)
      if (std::none_of(levels_.begin(), levels_.end(), [&](const Level& l) { return g[l.base] != l.base; }))
        add_level(first_moved(g));
    for (std::size_t i = 0; i < levels_.size(); ++i)
      for (const auto& g : moving) {
        bool fixes = true;
        for (std::size_t k = 0; k < i && fixes; ++k) fixes = g[levels_[k].base] == levels_[k].base;
        if (fixes) levels_[i].gens.push_back(g);
      }
    for (auto& l : levels_) recompute_orbit(l);
    std::size_t i = levels_.size();
    while (i-- > 0) {
      auto restart = check_level(i);
      if (restart) i = *restart + 1;
    }
  }

  Integer order() const {
    Integer o = 1;
    for (const auto& l : levels_) o *= static_cast<unsigned long>(l.orbit.size());
    return o;
  }

 private:
  struct Level {
    std::size_t base = 0;
    std::vector<Permutation> gens;
    std::vector<std::size_t> orbit;
    std::vector<std::optional<Permutation>> transversal;  // maps base to the point
  };

  static Permutation mul(const Permutation& a, const Permutation& b) {
    Permutation r(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) r[x] = b[a[x]];
    return r;
  }

  std::size_t first_moved(const Permutation& g) const {
    for (std::size_t x = 0; x < n_; ++x)
      if (g[x] != x) return x;
    return 0;
  }

  void add_level(std::size_t base) {
    Level l;
    l.base = base;
    levels_.push_back(std::move(l));
  }

  void recompute_orbit(Level& l) {
    l.transversal.assign(n_, std::nullopt);
    l.transversal[l.base] = identity_permutation(n_);
    l.orbit = {l.base};
    for (std::size_t k = 0; k < l.orbit.size(); ++k) {
      const std::size_t x = l.orbit[k];
      for (const auto& g : l.gens) {
        const std::size_t y = g[x];
        if (l.transversal[y]) continue;
        l.transversal[y] = mul(*l.transversal[x], g);
        l.orbit.push_back(y);
      }
    }
  }

  // Residue of g after sifting through levels from `start`, and the level where it stuck.
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t start) const {
    for (std::size_t i = start; i < levels_.size(); ++i) {
      const auto& l = levels_[i];
      const std::size_t x = g[l.base];
      if (!l.transversal[x]) return {std::move(g), i};
      g = mul(g, inverse(*l.transversal[x]));
    }
    return {std::move(g), levels_.size()};
  }

  // Checks the Schreier generators of level i; returns the level to resume from on a change.
  std::optional<std::size_t> check_level(std::size_t i) {
    const auto id = identity_permutation(n_);
    for (std::size_t k = 0; k < levels_[i].orbit.size(); ++k) {
      for (std::size_t s = 0; s < levels_[i].gens.size(); ++s) {
        clock_.tick();
        const auto& l = levels_[i];
        const std::size_t x = l.orbit[k];
        const auto& gen = l.gens[s];
        Permutation sg = mul(mul(*l.transversal[x], gen), inverse(*l.transversal[gen[x]]));
        auto [h, j] = strip(std::move(sg), i + 1);
        if (h == id) continue;
        if (j == levels_.size()) add_level(first_moved(h));
        for (std::size_t t = i + 1; t <= j; ++t) {
          levels_[t].gens.push_back(h);
          recompute_orbit(levels_[t]);
        }
        return j;
      }
    }
    return std::nullopt;
  }

  std::size_t n_;
  std::vector<Level> levels_;
  BudgetClock clock_;
};

}  // namespace

Integer group_order(const GroupSpec& g, const Budget& budget) {
  StabilizerChain chain(g.degree, budget);
  chain.build(g.generators);
  return chain.order();
}

bool generators_commute(const GroupSpec& g) {
  for (std::size_t i = 0; i < g.generators.size(); ++i)
    for (std::size_t j = i + 1; j < g.generators.size(); ++j)
      if (then(g.generators[i], g.generators[j]) != then(g.generators[j], g.generators[i])) return false;
  return true;
}

bool generators_are_involutions(const GroupSpec& g) {
  return std::all_of(g.generators.begin(), g.generators.end(), [](const Permutation& p) {
    return then(p, p) == identity_permutation(p.size());
  });
}

std::size_t gf2_rank(const GroupSpec& g) {
  if (!g.side || g.square_generators.size() != g.generators.size())
    throw InvalidArgument("gf2_rank: group '" + g.name + "' is not given by square operations");
  const std::size_t n = *g.side;
  std::vector<std::vector<bool>> rows;
  for (const auto& op : g.square_generators) {
    if (op.transpose) throw InvalidArgument("gf2_rank: transposing generators have no line support");
    std::vector<bool> v(2 * n, false);
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = op.rows[i] != i;
      v[n + i] = op.cols[i] != i;
    }
    rows.push_back(std::move(v));
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < 2 * n && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && !rows[p][c]) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r][c])
        for (std::size_t k = 0; k < 2 * n; ++k) rows[r][k] = rows[r][k] != rows[rank][k];
    ++rank;
  }
  return rank;
}

Integer gf2_order(const GroupSpec& g) {
  Integer o;
  mpz_ui_pow_ui(o.get_mpz_t(), 2, gf2_rank(g));
  return o;
}

namespace {

// Breadth-first closure; stops early when `target` is reached.
std::set<Point> closure(const Point& x, const GroupSpec& g, std::size_t cap, const Point* target,
                        bool* found) {
  if (cap == 0) throw InvalidArgument("orbit: cap must be at least 1");
  if (x.size() != g.degree)
    throw InvalidArgument("orbit: vector of length " + std::to_string(x.size()) + " for a group on " +
                          std::to_string(g.degree) + " points");
  std::set<Point> seen{x};
  std::deque<Point> queue{x};
  if (target && *target == x) {
    *found = true;
    return seen;
  }
  while (!queue.empty()) {
    Point cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& p : g.generators) {
      Point y = act(p, cur);
      if (!seen.insert(y).second) continue;
      if (target && y == *target) {
        *found = true;
        return seen;
      }
      if (seen.size() > cap)
        throw BudgetExceeded("orbit: more than " + std::to_string(cap) + " images under group '" +
                             g.name + "'");
      queue.push_back(std::move(y));
    }
  }
  return seen;
}

}  // namespace

std::vector<Point> orbit(const Point& x, const GroupSpec& g, std::size_t cap) {
  auto s = closure(x, g, cap, nullptr, nullptr);
  return {s.begin(), s.end()};
}

bool isomorphic(const Point& x, const Point& y, const GroupSpec& g, std::size_t cap) {
  if (x.size() != y.size()) throw InvalidArgument("isomorphic: shapes differ");
  if (std::multiset<std::int64_t>(x.begin(), x.end()) != std::multiset<std::int64_t>(y.begin(), y.end()))
    return false;
  bool found = false;
  closure(x, g, cap, &y, &found);
  return found;
}

OrbitPartition orbit_classes(const std::vector<Point>& points, const GroupSpec& g, std::size_t cap) {
  OrbitPartition out;
  std::vector<bool> done(points.size(), false);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (done[i]) continue;
    auto orb = closure(points[i], g, cap, nullptr, nullptr);
    std::vector<std::size_t> cls;
    for (std::size_t j = i; j < points.size(); ++j)
      if (!done[j] && orb.count(points[j])) {
        done[j] = true;
        cls.push_back(j);
      }
    std::set<Point> distinct;
    for (auto j : cls) distinct.insert(points[j]);
    if (distinct.size() != orb.size()) out.closed = false;
    out.classes.push_back(std::move(cls));
  }
  return out;
}

std::size_t orbit_count_in_host(const Point& l, const Point& host, std::size_t n, std::size_t cap) {
  const std::size_t q = n * (n + 1) / 2;
  if (l.size() != q || host.size() != q)
    throw InvalidArgument("orbit_count_in_host: labelings must have " + std::to_string(q) + " entries");
  for (std::size_t k = 0; k < q; ++k)
    if ((l[k] != 0 && l[k] != 1) || (host[k] != 0 && host[k] != 1))
      throw InvalidArgument("orbit_count_in_host: labelings must be 0/1");
  std::size_t count = 0;
  for (const auto& img : orbit(l, symmetric_group_on_gamma(n), cap)) {
    bool inside = true;
    for (std::size_t k = 0; k < q && inside; ++k) inside = img[k] == 0 || host[k] == 1;
    if (inside) ++count;
  }
  return count;
}

}  // namespace magic
