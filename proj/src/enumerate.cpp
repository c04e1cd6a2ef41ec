#include "magic/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>

namespace magic {

namespace {

constexpr std::int64_t kInf = std::int64_t{1} << 40;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  // b > 0
  std::int64_t q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

std::int64_t mod_pos(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

PointEnumerator::PointEnumerator(const ConeSystem& sys) : vars_(sys.variables()) {
  const std::size_t n = vars_;
  // Column order: grading support first, so those coordinates become pivots.
  std::vector<std::size_t> order;
  for (std::size_t j = 0; j < n; ++j)
    if (sys.grading[j] != 0) order.push_back(j);
  for (std::size_t j = 0; j < n; ++j)
    if (sys.grading[j] == 0) order.push_back(j);

  std::vector<RationalVector> rows;
  for (std::size_t i = 0; i < sys.matrix.rows(); ++i) {
    RationalVector r(n + 1);
    for (std::size_t j = 0; j < n; ++j) r[j] = Rational(sys.matrix.at(i, order[j]));
    r[n] = 0;
    rows.push_back(std::move(r));
  }
  {
    RationalVector r(n + 1);
    for (std::size_t j = 0; j < n; ++j) r[j] = Rational(static_cast<long>(sys.grading[order[j]]));
    r[n] = 1;
    rows.push_back(std::move(r));
  }
  RowEchelon ech = reduced_row_echelon(rows, n + 1);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t k = 0; k < ech.pivots.size(); ++k) {
    if (ech.pivots[k] == n) {
      consistent_ = false;  // 0 = s forced
      continue;
    }
    is_pivot[ech.pivots[k]] = true;
  }
  std::vector<std::size_t> free_pos(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    if (!is_pivot[j]) {
      free_pos[j] = free_.size();
      free_.push_back(order[j]);
    }
  }
  deps_of_free_.assign(free_.size(), {});
  for (std::size_t k = 0; k < ech.pivots.size(); ++k) {
    const std::size_t pc = ech.pivots[k];
    if (pc == n) continue;
    const auto& r = ech.rows[k];
    // y_p = r[n]*s - sum_{free j} r[j] y_j
    Integer l = r[n].get_den();
    for (std::size_t j = 0; j < n; ++j)
      if (!is_pivot[j] && sgn(r[j]) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r[j].get_den_mpz_t());
    Dependent d;
    d.var = order[pc];
    d.den = l.get_si();
    Rational rs = r[n] * l;
    d.rhs = rs.get_num().get_si();
    for (std::size_t j = 0; j < n; ++j) {
      if (is_pivot[j] || sgn(r[j]) == 0) continue;
      Rational c = -r[j] * l;
      d.terms.emplace_back(free_pos[j], c.get_num().get_si());
    }
    for (const auto& t : d.terms) deps_of_free_[t.first].push_back(deps_.size());
    deps_.push_back(std::move(d));
  }
}

struct PointEnumerator::Search {
  const PointEnumerator& pe;
  std::int64_t s;
  const EnumOptions& opts;
  const std::function<bool(const Point&)>* visit = nullptr;
  BudgetClock clock;
  std::vector<std::int64_t> dep_upper;  // upper bound on numerator, kInf-scaled when unbounded
  std::vector<std::int64_t> const_part;
  std::vector<std::size_t> congruence_deps;
  Integer total = 0;
  std::uint64_t partial = 0;
  bool stopped = false;

  Search(const PointEnumerator& e, std::int64_t s_, const EnumOptions& o)
      : pe(e), s(s_), opts(o), clock(o.budget, "count_points") {
    dep_upper.resize(pe.deps_.size());
    const_part.resize(pe.deps_.size());
    for (std::size_t k = 0; k < pe.deps_.size(); ++k) {
      const auto& d = pe.deps_[k];
      const_part[k] = d.rhs * s;
      dep_upper[k] = opts.upper ? (*opts.upper)[d.var] * d.den : -1;
      if (d.den > 1) congruence_deps.push_back(k);
    }
  }

  void add(std::uint64_t c) {
    partial += c;
    if (partial > (std::uint64_t{1} << 62)) flush();
  }
  void flush() {
    total += Integer(static_cast<unsigned long>(partial));
    partial = 0;
  }

  // Bounds propagation to a fixpoint. Returns false on infeasibility.
  bool propagate(std::vector<std::int64_t>& lo, std::vector<std::int64_t>& hi) const {
    bool changed = true;
    int rounds = 0;
    while (changed) {
      changed = false;
      if (++rounds > 64) break;
      for (std::size_t k = 0; k < pe.deps_.size(); ++k) {
        const auto& d = pe.deps_[k];
        std::int64_t mn = const_part[k];
        std::int64_t mx = const_part[k];
        for (const auto& [j, c] : d.terms) {
          if (c > 0) {
            mn += c * lo[j];
            mx += c * hi[j];
          } else {
            mn += c * hi[j];
            mx += c * lo[j];
          }
        }
        const std::int64_t up = dep_upper[k];
        if (mx < 0) return false;
        if (up >= 0 && mn > up) return false;
        for (const auto& [j, c] : d.terms) {
          if (lo[j] == hi[j]) continue;
          std::int64_t nlo = lo[j];
          std::int64_t nhi = hi[j];
          if (c > 0) {
            // c f >= -(mx - c hi)
            nlo = std::max(nlo, ceil_div(-(mx - c * hi[j]), c));
            if (up >= 0) nhi = std::min(nhi, floor_div(up - (mn - c * lo[j]), c));
          } else {
            const std::int64_t a = -c;
            // c f >= -(mx - c lo)  <=>  f <= (mx - c lo) / a
            nhi = std::min(nhi, floor_div(mx + a * lo[j], a));
            // c f <= up - (mn - c hi)  <=>  f >= (mn - c hi - up) / a
            if (up >= 0) nlo = std::max(nlo, ceil_div(mn + a * hi[j] - up, a));
          }
          if (nlo > nhi) return false;
          if (nlo != lo[j] || nhi != hi[j]) {
            lo[j] = nlo;
            hi[j] = nhi;
            changed = true;
            // refresh bounds of this dependent for the remaining terms
            mn = const_part[k];
            mx = const_part[k];
            for (const auto& [jj, cc] : d.terms) {
              if (cc > 0) {
                mn += cc * lo[jj];
                mx += cc * hi[jj];
              } else {
                mn += cc * hi[jj];
                mx += cc * lo[jj];
              }
            }
          }
        }
      }
    }
    return true;
  }

  std::int64_t dep_value_numerator(std::size_t k, const std::vector<std::int64_t>& val) const {
    std::int64_t v = const_part[k];
    for (const auto& [j, c] : pe.deps_[k].terms) v += c * val[j];
    return v;
  }

  void emit(const std::vector<std::int64_t>& val) {
    if (!visit) {
      add(1);
      return;
    }
    Point p(pe.vars_, 0);
    for (std::size_t j = 0; j < pe.free_.size(); ++j) p[pe.free_[j]] = val[j];
    for (std::size_t k = 0; k < pe.deps_.size(); ++k)
      p[pe.deps_[k].var] = dep_value_numerator(k, val) / pe.deps_[k].den;
    add(1);
    if (!(*visit)(p)) stopped = true;
  }

  bool congruences_hold(const std::vector<std::int64_t>& val) const {
    for (auto k : congruence_deps)
      if (mod_pos(dep_value_numerator(k, val), pe.deps_[k].den) != 0) return false;
    return true;
  }

  void leaf_interval(std::vector<std::int64_t>& lo, std::vector<std::int64_t>& hi, std::size_t v) {
    const std::int64_t a = lo[v], b = hi[v];
    if (congruence_deps.empty() && !visit) {
      add(static_cast<std::uint64_t>(b - a + 1));
      return;
    }
    std::int64_t period = 1;
    for (auto k : congruence_deps) period = std::lcm(period, pe.deps_[k].den);
    std::vector<std::int64_t> val(lo);
    if (visit || b - a + 1 <= period) {
      for (std::int64_t x = a; x <= b && !stopped; ++x) {
        val[v] = x;
        if (congruences_hold(val)) emit(val);
      }
      return;
    }
    for (std::int64_t r = 0; r < period; ++r) {
      val[v] = a + r;
      if (!congruences_hold(val)) continue;
      add(static_cast<std::uint64_t>((b - (a + r)) / period + 1));
    }
  }

  void node(std::vector<std::int64_t> lo, std::vector<std::int64_t> hi) {
    if (stopped) return;
    clock.tick();
    if (!propagate(lo, hi)) return;
    std::size_t best = lo.size();
    std::size_t open = 0;
    for (std::size_t j = 0; j < lo.size(); ++j) {
      if (lo[j] == hi[j]) continue;
      ++open;
      if (best == lo.size() || hi[j] - lo[j] < hi[best] - lo[best]) best = j;
    }
    if (open == 0) {
      if (congruences_hold(lo)) emit(lo);
      return;
    }
    if (hi[best] >= kInf) throw InvalidArgument("count_points: unbounded coordinate (system not pointed?)");
    if (open == 1) {
      leaf_interval(lo, hi, best);
      return;
    }
    for (std::int64_t x = lo[best]; x <= hi[best] && !stopped; ++x) {
      std::vector<std::int64_t> l2(lo), h2(hi);
      l2[best] = h2[best] = x;
      node(std::move(l2), std::move(h2));
    }
  }

  bool root_bounds(std::vector<std::int64_t>& lo, std::vector<std::int64_t>& hi) {
    const std::size_t f = pe.free_.size();
    lo.assign(f, 0);
    hi.assign(f, kInf);
    if (opts.upper)
      for (std::size_t j = 0; j < f; ++j) hi[j] = std::min(hi[j], (*opts.upper)[pe.free_[j]]);
    return propagate(lo, hi);
  }
};

Integer PointEnumerator::count(std::int64_t s, const EnumOptions& opts) const {
  if (s < 0) throw InvalidArgument("count_points: s must be nonnegative");
  if (opts.upper && opts.upper->size() != vars_) throw InvalidArgument("count_points: bound size");
  if (!consistent_) return s == 0 ? Integer(1) : Integer(0);
  Search root(*this, s, opts);
  std::vector<std::int64_t> lo, hi;
  if (!root.root_bounds(lo, hi)) return 0;
  if (opts.threads <= 1 || free_.size() < 2) {
    root.node(lo, hi);
    root.flush();
    return root.total;
  }
  // Split on the coordinate with the widest root interval.
  std::size_t v = 0;
  for (std::size_t j = 1; j < lo.size(); ++j)
    if (hi[j] - lo[j] > hi[v] - lo[v]) v = j;
  if (hi[v] >= kInf) throw InvalidArgument("count_points: unbounded coordinate (system not pointed?)");
  std::atomic<std::int64_t> next{lo[v]};
  std::mutex mu;
  Integer total = 0;
  std::exception_ptr failure;
  auto worker = [&] {
    try {
      Search local(*this, s, opts);
      for (;;) {
        std::int64_t x = next.fetch_add(1);
        if (x > hi[v]) break;
        std::vector<std::int64_t> l2(lo), h2(hi);
        l2[v] = h2[v] = x;
        local.node(std::move(l2), std::move(h2));
      }
      local.flush();
      std::lock_guard<std::mutex> g(mu);
      total += local.total;
    } catch (...) {
      std::lock_guard<std::mutex> g(mu);
      if (!failure) failure = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < opts.threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return total;
}

void PointEnumerator::enumerate(std::int64_t s, const std::function<bool(const Point&)>& visit,
                                const EnumOptions& opts) const {
  if (s < 0) throw InvalidArgument("enumerate_points: s must be nonnegative");
  if (!consistent_) {
    if (s == 0) visit(Point(vars_, 0));
    return;
  }
  Search root(*this, s, opts);
  root.visit = &visit;
  std::vector<std::int64_t> lo, hi;
  if (!root.root_bounds(lo, hi)) return;
  root.node(lo, hi);
}

std::vector<Point> PointEnumerator::points(std::int64_t s, const EnumOptions& opts) const {
  std::vector<Point> out;
  enumerate(s, [&](const Point& p) {
    out.push_back(p);
    return true;
  }, opts);
  std::sort(out.begin(), out.end());
  return out;
}

Integer count_points(const ConeSystem& sys, std::int64_t s, const EnumOptions& opts) {
  return PointEnumerator(sys).count(s, opts);
}

std::vector<Point> enumerate_points(const ConeSystem& sys, std::int64_t s, const EnumOptions& opts) {
  return PointEnumerator(sys).points(s, opts);
}

}  // namespace magic
