#include "magic/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace magic {

std::int64_t weighted_degree(const Monomial& m, const std::vector<std::int64_t>& weights) {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += weights[i] * m[i];
  return d;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Monomial monomial_gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

// ---------------------------------------------------------------- term orders

namespace {

std::vector<std::size_t> identity_priority(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

void check_priority(const std::vector<std::size_t>& p) {
  std::vector<bool> seen(p.size(), false);
  for (auto v : p) {
    if (v >= p.size() || seen[v]) throw InvalidArgument("term order: priority is not a permutation");
    seen[v] = true;
  }
}

void check_weights(const std::vector<std::int64_t>& w) {
  for (auto x : w)
    if (x <= 0) throw InvalidArgument("term order: weights must be strictly positive");
}

}  // namespace

TermOrder TermOrder::lex(std::size_t n) { return lex(identity_priority(n)); }

TermOrder TermOrder::lex(std::vector<std::size_t> priority) {
  check_priority(priority);
  TermOrder o;
  o.kind_ = Kind::Lex;
  o.weights_.assign(priority.size(), 1);
  o.priority_ = std::move(priority);
  return o;
}

TermOrder TermOrder::degrevlex(std::vector<std::int64_t> weights) {
  auto p = identity_priority(weights.size());
  return degrevlex(std::move(weights), std::move(p));
}

TermOrder TermOrder::degrevlex(std::vector<std::int64_t> weights, std::vector<std::size_t> priority) {
  if (weights.size() != priority.size()) throw InvalidArgument("term order: size mismatch");
  check_weights(weights);
  check_priority(priority);
  TermOrder o;
  o.kind_ = Kind::DegRevLex;
  o.weights_ = std::move(weights);
  o.priority_ = std::move(priority);
  o.blocks_ = {o.priority_.size()};
  return o;
}

TermOrder TermOrder::blocks(std::vector<std::int64_t> weights, std::vector<std::size_t> priority,
                            std::vector<std::size_t> block_sizes) {
  TermOrder o = degrevlex(std::move(weights), std::move(priority));
  if (std::accumulate(block_sizes.begin(), block_sizes.end(), std::size_t{0}) != o.priority_.size())
    throw InvalidArgument("term order: block sizes do not cover all variables");
  o.kind_ = Kind::Blocks;
  o.blocks_ = std::move(block_sizes);
  return o;
}

int TermOrder::compare_range(const Monomial& a, const Monomial& b, std::size_t lo,
                             std::size_t hi) const {
  std::int64_t da = 0, db = 0;
  for (std::size_t k = lo; k < hi; ++k) {
    const auto v = priority_[k];
    da += weights_[v] * a[v];
    db += weights_[v] * b[v];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t k = hi; k-- > lo;) {
    const auto v = priority_[k];
    if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
  }
  return 0;
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind_ == Kind::Lex) {
    for (auto v : priority_)
      if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
    return 0;
  }
  std::size_t lo = 0;
  for (auto sz : blocks_) {
    if (int c = compare_range(a, b, lo, lo + sz)) return c;
    lo += sz;
  }
  return 0;
}

std::string TermOrder::describe() const {
  std::ostringstream os;
  os << (kind_ == Kind::Lex ? "lex" : kind_ == Kind::DegRevLex ? "degrevlex" : "blocks");
  os << " priority=[";
  for (std::size_t i = 0; i < priority_.size(); ++i) os << (i ? "," : "") << priority_[i];
  os << "]";
  if (kind_ != Kind::Lex) {
    os << " weights=[";
    for (std::size_t i = 0; i < weights_.size(); ++i) os << (i ? "," : "") << weights_[i];
    os << "]";
  }
  if (kind_ == Kind::Blocks) {
    os << " blocks=[";
    for (std::size_t i = 0; i < blocks_.size(); ++i) os << (i ? "," : "") << blocks_[i];
    os << "]";
  }
  return os.str();
}

std::optional<Binomial> make_binomial(Monomial a, Monomial b, const TermOrder& order) {
  int c = order.compare(a, b);
  if (c == 0) return std::nullopt;
  if (c < 0) std::swap(a, b);
  return Binomial{std::move(a), std::move(b)};
}

Binomial binomial_from_vector(const std::vector<std::int64_t>& u, const TermOrder& order) {
  Monomial p(u.size()), q(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] > 0) p[i] = static_cast<std::int32_t>(u[i]);
    else q[i] = static_cast<std::int32_t>(-u[i]);
  }
  auto b = make_binomial(std::move(p), std::move(q), order);
  if (!b) throw InvalidArgument("binomial_from_vector: zero vector");
  return *b;
}

// ---------------------------------------------------------------- Buchberger

namespace {

// Buchberger with the Gebauer-Moeller pair update. Elements whose lead becomes divisible by a
// newer lead leave the active set but stay addressable by the pairs that still mention them.
class Engine {
 public:
  Engine(const TermOrder& order, const Budget& budget)
      : order_(order), n_(order.variables()), clock_(budget, "buchberger") {}

  // Bit (i mod 64) set when x_i occurs; a divisor's signature is a subset of the multiple's.
  std::uint64_t signature(const Monomial& m) const {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < n_; ++i)
      if (m[i] > 0) r |= std::uint64_t{1} << (i % 64);
    return r;
  }

  Monomial reduce(Monomial m) {
    std::uint64_t sig = signature(m);
    for (;;) {
      bool changed = false;
      for (auto k : active_) {
        const Elem& e = g_[k];
        if ((e.sig & ~sig) != 0 || !divides(e.lead, m)) continue;
        for (std::size_t i = 0; i < n_; ++i) m[i] += e.trail[i] - e.lead[i];
        sig = signature(m);
        changed = true;
        clock_.tick();
      }
      if (!changed) return m;
    }
  }

  void insert(Monomial a, Monomial b) {
    a = reduce(std::move(a));
    b = reduce(std::move(b));
    auto bin = make_binomial(std::move(a), std::move(b), order_);
    if (!bin) return;
    Elem e;
    e.lead = std::move(bin->lead);
    e.trail = std::move(bin->trail);
    e.sig = signature(e.lead);
    const std::size_t h = g_.size();
    g_.push_back(std::move(e));
    update(h);
    clock_.check_elements(g_.size());
  }

  void run() {
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t p = 1; p < pairs_.size(); ++p)
        if (pairs_[p].before(pairs_[best])) best = p;
      Pair pr = std::move(pairs_[best]);
      pairs_[best] = std::move(pairs_.back());
      pairs_.pop_back();
      clock_.tick();
      const Elem& a = g_[pr.i];
      const Elem& b = g_[pr.j];
      Monomial s1(n_), s2(n_);
      for (std::size_t v = 0; v < n_; ++v) {
        s1[v] = pr.lcm[v] - a.lead[v] + a.trail[v];
        s2[v] = pr.lcm[v] - b.lead[v] + b.trail[v];
      }
      insert(std::move(s1), std::move(s2));
    }
  }

  std::vector<Binomial> reduced() {
    std::vector<Binomial> out;
    for (auto k : active_) out.push_back({g_[k].lead, reduce(g_[k].trail)});
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  struct Elem {
    Monomial lead, trail;
    std::uint64_t sig = 0;
  };
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::int64_t deg;
    std::uint64_t sig;
    bool before(const Pair& o) const {
      if (deg != o.deg) return deg < o.deg;
      if (j != o.j) return j < o.j;
      return i < o.i;
    }
  };

  bool coprime(const Monomial& a, const Monomial& b) const {
    for (std::size_t v = 0; v < n_; ++v)
      if (a[v] > 0 && b[v] > 0) return false;
    return true;
  }

  void update(std::size_t h) {
    const Monomial& lh = g_[h].lead;
    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
      std::uint64_t sig;
      std::int64_t deg;
      bool keep = true;
    };
    std::vector<Cand> c;
    c.reserve(active_.size());
    for (auto g : active_) {
      Monomial l = monomial_lcm(g_[g].lead, lh);
      std::uint64_t sig = signature(l);
      std::int64_t deg = weighted_degree(l, order_.weights());
      c.push_back({g, std::move(l), coprime(g_[g].lead, lh), sig, deg});
    }
    // drop pairs whose lcm is a proper multiple of another new pair's lcm (ties keep the later)
    for (std::size_t x = 0; x < c.size(); ++x) {
      if (c[x].coprime) continue;
      for (std::size_t y = 0; y < c.size(); ++y) {
        if (y == x || !c[y].keep || c[y].deg > c[x].deg || (c[y].sig & ~c[x].sig) != 0) continue;
        if (!divides(c[y].lcm, c[x].lcm)) continue;
        if (c[y].lcm == c[x].lcm && y < x) continue;
        c[x].keep = false;
        break;
      }
    }
    // old pairs made superfluous by the new lead
    std::vector<Pair> kept;
    kept.reserve(pairs_.size());
    const std::uint64_t hsig = g_[h].sig;
    for (auto& p : pairs_) {
      bool drop = (hsig & ~p.sig) == 0 && divides(lh, p.lcm) && monomial_lcm(g_[p.i].lead, lh) != p.lcm &&
                  monomial_lcm(g_[p.j].lead, lh) != p.lcm;
      if (!drop) kept.push_back(std::move(p));
    }
    pairs_ = std::move(kept);
    for (auto& x : c) {
      if (!x.keep || x.coprime) continue;
      pairs_.push_back({x.g, h, std::move(x.lcm), x.deg, x.sig});
    }
    std::vector<std::size_t> act;
    for (auto g : active_)
      if ((hsig & ~g_[g].sig) != 0 || !divides(lh, g_[g].lead)) act.push_back(g);
    act.push_back(h);
    active_ = std::move(act);
  }

  const TermOrder& order_;
  std::size_t n_;
  BudgetClock clock_;
  std::vector<Elem> g_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
};

void check_sizes(const std::vector<Binomial>& gens, std::size_t n) {
  for (const auto& g : gens)
    if (g.lead.size() != n || g.trail.size() != n)
      throw InvalidArgument("binomial has the wrong number of variables");
}

bool homogeneous(const std::vector<Binomial>& gens, const std::vector<std::int64_t>& w) {
  for (const auto& g : gens)
    if (weighted_degree(g.lead, w) != weighted_degree(g.trail, w)) return false;
  return true;
}

}  // namespace

std::vector<Binomial> buchberger(const std::vector<Binomial>& gens, const TermOrder& order,
                                 const Budget& budget) {
  check_sizes(gens, order.variables());
  Engine eng(order, budget);
  std::vector<Binomial> sorted = gens;
  std::sort(sorted.begin(), sorted.end(), [&](const Binomial& a, const Binomial& b) {
    auto da = weighted_degree(a.lead, order.weights());
    auto db = weighted_degree(b.lead, order.weights());
    return da != db ? da < db : a < b;
  });
  for (const auto& g : sorted) {
    eng.insert(g.lead, g.trail);
    eng.run();
  }
  return eng.reduced();
}

Monomial normal_form(const Monomial& m, const std::vector<Binomial>& gb, const TermOrder& order) {
  (void)order;
  Monomial r = m;
  for (;;) {
    bool changed = false;
    for (const auto& g : gb) {
      if (!divides(g.lead, r)) continue;
      for (std::size_t i = 0; i < r.size(); ++i) r[i] += g.trail[i] - g.lead[i];
      changed = true;
      break;
    }
    if (!changed) return r;
  }
}

bool ideal_contains(const std::vector<Binomial>& gb, const TermOrder& order, const Monomial& a,
                    const Monomial& b) {
  return normal_form(a, gb, order) == normal_form(b, gb, order);
}

bool is_groebner_basis(const std::vector<Binomial>& gb, const TermOrder& order) {
  for (const auto& g : gb)
    if (order.compare(g.lead, g.trail) <= 0) return false;
  for (std::size_t i = 0; i < gb.size(); ++i) {
    for (std::size_t j = i + 1; j < gb.size(); ++j) {
      Monomial l = monomial_lcm(gb[i].lead, gb[j].lead);
      Monomial s1(l.size()), s2(l.size());
      for (std::size_t v = 0; v < l.size(); ++v) {
        s1[v] = l[v] - gb[i].lead[v] + gb[i].trail[v];
        s2[v] = l[v] - gb[j].lead[v] + gb[j].trail[v];
      }
      if (!ideal_contains(gb, order, s1, s2)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- saturation

std::vector<Binomial> saturate_variable(const std::vector<Binomial>& gens, std::size_t var,
                                        const std::vector<std::int64_t>& weights,
                                        const Budget& budget) {
  const std::size_t n = weights.size();
  if (var >= n) throw InvalidArgument("saturate_variable: variable out of range");
  if (!homogeneous(gens, weights))
    throw InvalidArgument("saturate_variable: ideal is not homogeneous for the weights");
  std::vector<std::size_t> pri;
  for (std::size_t i = 0; i < n; ++i)
    if (i != var) pri.push_back(i);
  pri.push_back(var);
  TermOrder ord = TermOrder::degrevlex(weights, pri);
  std::vector<Binomial> oriented;
  for (const auto& g : gens)
    if (auto b = make_binomial(g.lead, g.trail, ord)) oriented.push_back(*b);
  auto gb = buchberger(oriented, ord, budget);
  std::vector<Binomial> out;
  for (auto g : gb) {
    std::int32_t k = std::min(g.lead[var], g.trail[var]);
    g.lead[var] -= k;
    g.trail[var] -= k;
    if (auto b = make_binomial(g.lead, g.trail, ord)) out.push_back(*b);
  }
  return out;
}

std::vector<Binomial> saturate(const std::vector<Binomial>& gens, const TermOrder& order,
                               const Budget& budget) {
  std::vector<Binomial> cur = gens;
  for (std::size_t v = 0; v < order.variables(); ++v)
    cur = saturate_variable(cur, v, order.weights(), budget);
  std::vector<Binomial> oriented;
  for (const auto& g : cur)
    if (auto b = make_binomial(g.lead, g.trail, order)) oriented.push_back(*b);
  return buchberger(oriented, order, budget);
}

std::vector<Binomial> saturate_homogenizing(const std::vector<Binomial>& gens,
                                            const TermOrder& order, const Budget& budget) {
  const std::size_t n = order.variables();
  const auto& w = order.weights();
  if (!homogeneous(gens, w))
    throw InvalidArgument("saturate_homogenizing: ideal is not homogeneous for the weights");
  std::vector<std::int64_t> w2 = w;
  w2.push_back(std::accumulate(w.begin(), w.end(), std::int64_t{0}));
  std::vector<Binomial> ext;
  for (const auto& g : gens) {
    Binomial b = g;
    b.lead.push_back(0);
    b.trail.push_back(0);
    ext.push_back(std::move(b));
  }
  Monomial all(n + 1, 1), u(n + 1, 0);
  all[n] = 0;
  u[n] = 1;
  ext.push_back({all, u});
  auto sat = saturate_variable(ext, n, w2, budget);
  std::vector<Binomial> back;
  for (const auto& g : sat) {
    Monomial a(g.lead.begin(), g.lead.end() - 1), b(g.trail.begin(), g.trail.end() - 1);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] += g.lead[n];
      b[i] += g.trail[n];
    }
    if (auto bin = make_binomial(std::move(a), std::move(b), order)) back.push_back(*bin);
  }
  return buchberger(back, order, budget);
}

// ---------------------------------------------------------------- toric ideals

namespace {

void check_points(const std::vector<Point>& points) {
  if (points.empty()) return;
  for (const auto& p : points)
    if (p.size() != points[0].size()) throw InvalidArgument("toric ideal: points of unequal length");
}

}  // namespace

std::vector<Binomial> toric_ideal(const std::vector<Point>& points, const TermOrder& order,
                                  const Budget& budget) {
  check_points(points);
  const std::size_t r = points.size();
  if (order.variables() != r) throw InvalidArgument("toric_ideal: order size mismatch");
  if (r == 0) return {};
  const std::size_t d = points[0].size();
  IntMatrix a(d, r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < d; ++i) a.at(i, j) = static_cast<long>(points[j][i]);
  const auto kernel = integer_kernel_basis(a);
  if (kernel.empty()) return {};
  // A lattice basis that is the identity on a coordinate set tau makes every x_tau a Laurent
  // monomial in the others once those are inverted, so only variables outside tau need saturating.
  std::vector<std::vector<std::size_t>> orders;
  std::vector<std::size_t> nat(r);
  std::iota(nat.begin(), nat.end(), 0);
  orders.push_back(nat);
  orders.emplace_back(nat.rbegin(), nat.rend());
  orders.push_back(order.priority());
  orders.emplace_back(order.priority().rbegin(), order.priority().rend());
  std::vector<std::vector<std::int64_t>> best_basis;
  std::vector<bool> best_unit;
  std::size_t best_count = 0;
  for (const auto& ord : orders) {
    IntMatrix km(0, r);
    for (const auto& v : kernel) {
      IntVector p(r);
      for (std::size_t j = 0; j < r; ++j) p[j] = v[ord[j]];
      km.append_row(p);
    }
    HermiteForm hf = hermite_form(km);
    std::vector<bool> unit(r, false);
    std::size_t count = 0;
    std::vector<std::vector<std::int64_t>> basis;
    for (std::size_t k = 0; k < hf.pivots.size(); ++k) {
      if (hf.h.at(k, hf.pivots[k]) == 1) {
        unit[ord[hf.pivots[k]]] = true;
        ++count;
      }
      std::vector<std::int64_t> u(r);
      for (std::size_t j = 0; j < r; ++j) {
        if (!hf.h.at(k, j).fits_slong_p()) throw BudgetExceeded("toric_ideal: lattice entries too large");
        u[ord[j]] = hf.h.at(k, j).get_si();
      }
      basis.push_back(std::move(u));
    }
    if (best_basis.empty() || count > best_count) {
      best_basis = std::move(basis);
      best_unit = std::move(unit);
      best_count = count;
    }
    if (best_count == kernel.size()) break;
  }
  std::vector<Binomial> cur;
  for (const auto& u : best_basis) cur.push_back(binomial_from_vector(u, order));
  // Saturate from the last variable down.
  for (std::size_t v = r; v-- > 0;)
    if (!best_unit[v]) cur = saturate_variable(cur, v, order.weights(), budget);
  std::vector<Binomial> oriented;
  for (const auto& g : cur)
    if (auto b = make_binomial(g.lead, g.trail, order)) oriented.push_back(*b);
  return buchberger(oriented, order, budget);
}

std::vector<Binomial> toric_ideal_elimination(const std::vector<Point>& points,
                                              const TermOrder& order, const Budget& budget) {
  check_points(points);
  const std::size_t r = points.size();
  if (order.variables() != r) throw InvalidArgument("toric_ideal_elimination: order size mismatch");
  if (r == 0) return {};
  const std::size_t d = points[0].size();
  bool negative = false;
  for (const auto& p : points)
    for (auto v : p) negative |= v < 0;
  const std::size_t nt = d + (negative ? 1 : 0);
  const std::size_t n = nt + r;
  std::vector<std::int64_t> w(n, 1);
  std::vector<std::size_t> pri;
  for (std::size_t i = 0; i < nt; ++i) pri.push_back(i);
  for (auto v : order.priority()) pri.push_back(nt + v);
  for (std::size_t v = 0; v < r; ++v) w[nt + v] = order.weights()[v];
  TermOrder big = TermOrder::blocks(w, pri, {nt, r});
  const std::size_t off = negative ? 1 : 0;
  std::vector<Binomial> gens;
  if (negative) {
    Monomial a(n, 0), one(n, 0);
    for (std::size_t i = 0; i < nt; ++i) a[i] = 1;
    gens.push_back(*make_binomial(a, one, big));
  }
  for (std::size_t j = 0; j < r; ++j) {
    Monomial a(n, 0), b(n, 0);
    a[nt + j] = 1;
    for (std::size_t i = 0; i < d; ++i) {
      if (points[j][i] < 0) a[off + i] = static_cast<std::int32_t>(-points[j][i]);
      else b[off + i] = static_cast<std::int32_t>(points[j][i]);
    }
    if (auto bin = make_binomial(a, b, big)) gens.push_back(*bin);
  }
  auto gb = buchberger(gens, big, budget);
  std::vector<Binomial> xs;
  for (const auto& g : gb) {
    bool pure = true;
    for (std::size_t i = 0; i < nt && pure; ++i) pure = g.lead[i] == 0 && g.trail[i] == 0;
    if (!pure) continue;
    Monomial a(g.lead.begin() + static_cast<long>(nt), g.lead.end());
    Monomial b(g.trail.begin() + static_cast<long>(nt), g.trail.end());
    if (auto bin = make_binomial(a, b, order)) xs.push_back(*bin);
  }
  return buchberger(xs, order, budget);
}

std::vector<Binomial> toric_ideal_truncated(const std::vector<Point>& points,
                                            const TermOrder& order, std::int64_t max_degree,
                                            const Budget& budget) {
  check_points(points);
  const std::size_t r = points.size();
  if (order.variables() != r) throw InvalidArgument("toric_ideal_truncated: order size mismatch");
  if (r == 0 || max_degree <= 0) return {};
  if (r > 65535) throw InvalidArgument("toric_ideal_truncated: too many variables");
  const auto& w = order.weights();
  const std::size_t d = points[0].size();
  BudgetClock clock(budget, "toric_ideal_truncated");
  using Word = std::u16string;  // nondecreasing variable indices
  std::unordered_set<Word> standard;
  standard.insert(Word{});
  std::vector<std::size_t> by_weight(r);
  std::iota(by_weight.begin(), by_weight.end(), 0);
  std::vector<Binomial> out;
  auto to_monomial = [&](const Word& word) {
    Monomial m(r, 0);
    for (auto c : word) ++m[c];
    return m;
  };
  for (std::int64_t e = 1; e <= max_degree; ++e) {
    std::unordered_map<std::string, std::vector<Word>> fibers;
    Word cur;
    std::vector<std::int64_t> image(d, 0);
    auto rec = [&](auto&& self, std::size_t from, std::int64_t left) -> void {
      if (left == 0) {
        std::string key(reinterpret_cast<const char*>(image.data()), d * sizeof(std::int64_t));
        fibers[key].push_back(cur);
        clock.tick();
        return;
      }
      for (std::size_t v = from; v < r; ++v) {
        if (w[v] > left) continue;
        cur.push_back(static_cast<char16_t>(v));
        for (std::size_t i = 0; i < d; ++i) image[i] += points[v][i];
        self(self, v, left - w[v]);
        for (std::size_t i = 0; i < d; ++i) image[i] -= points[v][i];
        cur.pop_back();
      }
    };
    rec(rec, 0, e);
    clock.check_time();
    for (auto& [key, mons] : fibers) {
      std::vector<Monomial> exps;
      exps.reserve(mons.size());
      for (const auto& word : mons) exps.push_back(to_monomial(word));
      std::size_t best = 0;
      for (std::size_t k = 1; k < exps.size(); ++k)
        if (order.compare(exps[k], exps[best]) < 0) best = k;
      standard.insert(mons[best]);
      clock.check_elements(standard.size());
      for (std::size_t k = 0; k < mons.size(); ++k) {
        if (k == best) continue;
        const Word& word = mons[k];
        bool minimal = true;
        for (std::size_t p = 0; p < word.size() && minimal; ++p) {
          if (p > 0 && word[p] == word[p - 1]) continue;
          Word sub = word;
          sub.erase(p, 1);
          minimal = standard.count(sub) > 0;
        }
        if (minimal) out.push_back({exps[k], exps[best]});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::int64_t> basis_degrees(const HilbertBasis& hb) {
  std::vector<std::int64_t> w;
  for (const auto& e : hb.elements) w.push_back(e.degree);
  return w;
}

TermOrder default_order(const HilbertBasis& hb) { return TermOrder::degrevlex(basis_degrees(hb)); }

std::vector<Binomial> lattice_ideal(const HilbertBasis& hb, const TermOrder& order,
                                    const Budget& budget) {
  return toric_ideal(hb.vectors(), order, budget);
}

std::vector<Point> hilbert_basis_by_elimination(const ConeSystem& sys, const Budget& budget) {
  const std::size_t m = sys.matrix.rows();
  const std::size_t n = sys.variables();
  const std::size_t nt = m + 1;
  const std::size_t nv = nt + 2 * n;
  std::vector<std::int64_t> w(nv, 1);
  std::vector<std::size_t> pri(nv);
  std::iota(pri.begin(), pri.end(), 0);
  TermOrder ord = TermOrder::blocks(w, pri, {nt, n, n});
  std::vector<Binomial> gens;
  {
    Monomial a(nv, 0), one(nv, 0);
    for (std::size_t i = 0; i < nt; ++i) a[i] = 1;
    gens.push_back(*make_binomial(a, one, ord));
  }
  for (std::size_t j = 0; j < n; ++j) {
    Monomial a(nv, 0), b(nv, 0);
    a[nt + j] = 1;
    b[nt + n + j] = 1;
    for (std::size_t i = 0; i < m; ++i) {
      long v = sys.matrix.at(i, j).get_si();
      if (v < 0) a[1 + i] = static_cast<std::int32_t>(-v);
      else b[1 + i] = static_cast<std::int32_t>(v);
    }
    if (auto bin = make_binomial(a, b, ord)) gens.push_back(*bin);
  }
  auto gb = buchberger(gens, ord, budget);
  std::vector<Point> out;
  for (const auto& g : gb) {
    bool ok = true;
    for (std::size_t i = 0; i < nt && ok; ++i) ok = g.lead[i] == 0 && g.trail[i] == 0;
    for (std::size_t j = 0; j < n && ok; ++j)
      ok = g.lead[nt + n + j] == 0 && g.trail[nt + j] == 0 && g.lead[nt + j] == g.trail[nt + n + j];
    if (!ok) continue;
    Point p(n);
    for (std::size_t j = 0; j < n; ++j) p[j] = g.lead[nt + j];
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace magic
