#include "magic/hilbert.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "magic/enumerate.hpp"
#include "magic/linalg.hpp"

namespace magic {

namespace {

using Vec32 = std::vector<std::int32_t>;
constexpr std::int64_t kEntryLimit = std::int64_t{1} << 30;

std::uint64_t hash_range(const std::int32_t* v, std::size_t m) {
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < m; ++i) {
    h ^= static_cast<std::uint32_t>(v[i]);
    h *= 1099511628211ull;
  }
  return h;
}

// Sublattice L = ker A together with a coordinate set sigma on which L projects injectively.
struct Frame {
  std::size_t m = 0;
  std::size_t d = 0;
  std::vector<std::size_t> sigma;                // pivot coordinates
  std::vector<std::vector<std::int64_t>> rows;   // lattice basis, upper triangular on sigma
  std::int64_t det = 1;

  std::int64_t piv(std::size_t k) const { return rows[k][sigma[k]]; }
};

Frame make_frame(const ConeSystem& sys) {
  Frame f;
  f.m = sys.variables();
  auto kernel = integer_kernel_basis(sys.matrix);
  f.d = kernel.size();
  if (f.d == 0) return f;
  const std::size_t m = f.m;
  std::vector<std::vector<std::size_t>> orders;
  std::vector<std::size_t> nat(m), rev(m), grade_first, grade_last;
  std::iota(nat.begin(), nat.end(), 0);
  std::iota(rev.rbegin(), rev.rend(), 0);
  for (auto j : nat)
    if (sys.grading[j] != 0) grade_first.push_back(j);
  for (auto j : nat)
    if (sys.grading[j] == 0) grade_first.push_back(j);
  grade_last.assign(grade_first.rbegin(), grade_first.rend());
  orders = {grade_first, nat, rev, grade_last};
  bool have = false;
  Integer best_det;
  for (const auto& ord : orders) {
    IntMatrix km(0, m);
    for (const auto& v : kernel) {
      IntVector p(m);
      for (std::size_t j = 0; j < m; ++j) p[j] = v[ord[j]];
      km.append_row(p);
    }
    HermiteForm hf = hermite_form(km);
    Integer det = 1;
    for (std::size_t k = 0; k < hf.pivots.size(); ++k) det *= hf.h.at(k, hf.pivots[k]);
    if (have && det >= best_det) continue;
    have = true;
    best_det = det;
    f.sigma.clear();
    f.rows.assign(f.d, std::vector<std::int64_t>(m, 0));
    for (std::size_t k = 0; k < f.d; ++k) {
      f.sigma.push_back(ord[hf.pivots[k]]);
      for (std::size_t j = 0; j < m; ++j) {
        const Integer& e = hf.h.at(k, j);
        if (!e.fits_slong_p()) throw BudgetExceeded("hilbert: lattice basis entries too large");
        f.rows[k][ord[j]] = e.get_si();
      }
    }
    if (det == 1) break;
  }
  if (!best_det.fits_slong_p()) throw BudgetExceeded("hilbert: lattice index too large");
  f.det = best_det.get_si();
  return f;
}

// Lift a point of the projected lattice (given on sigma) to the unique lattice vector.
bool lift(const Frame& f, const std::vector<std::int64_t>& x, Vec32& out) {
  std::vector<std::int64_t> c(f.d, 0);
  for (std::size_t k = 0; k < f.d; ++k) {
    std::int64_t acc = x[k];
    for (std::size_t i = 0; i < k; ++i) acc -= c[i] * f.rows[i][f.sigma[k]];
    if (acc % f.piv(k) != 0) return false;
    c[k] = acc / f.piv(k);
  }
  out.assign(f.m, 0);
  for (std::size_t j = 0; j < f.m; ++j) {
    std::int64_t v = 0;
    for (std::size_t k = 0; k < f.d; ++k) v += c[k] * f.rows[k][j];
    if (v >= kEntryLimit || v <= -kEntryLimit) throw BudgetExceeded("hilbert: entry overflow");
    out[j] = static_cast<std::int32_t>(v);
  }
  return true;
}

// Smallest positive multiple of the k-th unit vector (on sigma) inside the projected lattice.
std::int64_t unit_multiple(const Frame& f, std::size_t k) {
  for (std::int64_t t = 1; t <= f.det; ++t) {
    std::vector<std::int64_t> c(f.d, 0);
    c[k] = t;
    bool ok = true;
    for (std::size_t j = k + 1; j < f.d && ok; ++j) {
      std::int64_t acc = 0;
      for (std::size_t i = k; i < j; ++i) acc -= c[i] * f.rows[i][f.sigma[j]];
      if (acc % f.piv(j) != 0) ok = false;
      else c[j] = acc / f.piv(j);
    }
    if (ok) return t * f.piv(k);
  }
  throw Error("hilbert: no lattice multiple of a unit vector found");
}

// Minimal nonzero points of the projected lattice in the nonnegative orthant.
std::vector<Vec32> initial_basis(const Frame& f, BudgetClock& clock) {
  std::vector<Vec32> out;
  if (f.det == 1) {
    for (std::size_t k = 0; k < f.d; ++k) {
      std::vector<std::int64_t> x(f.d, 0);
      x[k] = 1;
      Vec32 y;
      lift(f, x, y);
      out.push_back(std::move(y));
    }
    return out;
  }
  std::vector<std::int64_t> bound(f.d);
  for (std::size_t k = 0; k < f.d; ++k) bound[k] = unit_multiple(f, k);
  std::vector<std::vector<std::int64_t>> box;
  std::vector<std::int64_t> x(f.d, 0), c(f.d, 0);
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == f.d) {
      if (std::any_of(x.begin(), x.end(), [](std::int64_t v) { return v != 0; })) box.push_back(x);
      clock.tick();
      clock.check_elements(box.size());
      return;
    }
    std::int64_t partial = 0;
    for (std::size_t i = 0; i < k; ++i) partial += c[i] * f.rows[i][f.sigma[k]];
    const std::int64_t h = f.piv(k);
    std::int64_t r = ((partial % h) + h) % h;
    for (std::int64_t v = r; v <= bound[k]; v += h) {
      x[k] = v;
      c[k] = (v - partial) / h;
      self(self, k + 1);
    }
    x[k] = 0;
  };
  rec(rec, 0);
  // keep componentwise-minimal
  std::sort(box.begin(), box.end(), [](const auto& a, const auto& b) {
    return std::accumulate(a.begin(), a.end(), std::int64_t{0}) <
           std::accumulate(b.begin(), b.end(), std::int64_t{0});
  });
  std::vector<std::vector<std::int64_t>> mins;
  for (const auto& p : box) {
    bool dominated = false;
    for (const auto& q : mins) {
      bool le = true;
      for (std::size_t i = 0; i < f.d && le; ++i) le = q[i] <= p[i];
      if (le) {
        dominated = true;
        break;
      }
    }
    if (!dominated) mins.push_back(p);
  }
  for (const auto& p : mins) {
    Vec32 y;
    if (!lift(f, p, y)) throw Error("hilbert: lift failed for a projected lattice point");
    out.push_back(std::move(y));
  }
  return out;
}

// Project-and-lift completion. Elements are lattice vectors nonnegative on the processed
// coordinates J; each stage adds one coordinate and closes the set under the sums that can
// produce new minimal elements for the order u <= x on J, sign-compatible and no larger on j.
class Completion {
 public:
  Completion(const ConeSystem& sys, std::optional<std::int64_t> dmax, const HilbertOptions& opts)
      : sys_(sys), dmax_(dmax), clock_(opts.budget, "hilbert_basis") {}

  std::vector<Point> run() {
    Frame f = make_frame(sys_);
    m_ = f.m;
    words_ = (m_ + 63) / 64;
    if (f.d == 0) return {};
    if (dmax_ && *dmax_ <= 0) return {};
    in_j_.assign(m_, false);
    cur_ = initial_basis(f, clock_);
    for (auto s : f.sigma) mark(s);
    for (;;) {
      auto j = next_coordinate();
      if (!j) break;
      stage(*j);
      mark(*j);
      clock_.check_time();
    }
    std::vector<Point> out;
    for (const auto& v : cur_) {
      Point p(v.begin(), v.end());
      if (dmax_ && sys_.degree(p) > *dmax_) continue;
      out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void mark(std::size_t j) {
    in_j_[j] = true;
    j_list_.push_back(j);
    std::sort(j_list_.begin(), j_list_.end());
    grading_done_ = true;
    for (std::size_t i = 0; i < m_; ++i)
      if (sys_.grading[i] != 0 && !in_j_[i]) grading_done_ = false;
    if (grading_done_ && dmax_) prune_degree();
  }

  std::int64_t degree_of(const Vec32& v) const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < m_; ++i) s += sys_.grading[i] * v[i];
    return s;
  }

  void prune_degree() {
    std::vector<Vec32> keep;
    for (auto& v : cur_)
      if (degree_of(v) <= *dmax_) keep.push_back(std::move(v));
    cur_ = std::move(keep);
  }

  std::optional<std::size_t> next_coordinate() const {
    std::optional<std::size_t> best;
    std::uint64_t best_cost = std::numeric_limits<std::uint64_t>::max();
    bool restrict_to_grading = dmax_.has_value() && !grading_done_;
    for (std::size_t j = 0; j < m_; ++j) {
      if (in_j_[j]) continue;
      if (restrict_to_grading && sys_.grading[j] == 0) continue;
      std::uint64_t pos = 0, neg = 0;
      for (const auto& v : cur_) {
        if (v[j] > 0) ++pos;
        else if (v[j] < 0) ++neg;
      }
      std::uint64_t cost = pos * neg;
      if (cost < best_cost) {
        best_cost = cost;
        best = j;
      }
    }
    return best;
  }

  struct Pool {
    std::size_t m = 0, words = 0;
    std::vector<std::int32_t> vals;
    std::vector<std::int64_t> norm;
    std::vector<std::uint64_t> mask;
    std::size_t size() const { return norm.size(); }
    const std::int32_t* at(std::size_t i) const { return vals.data() + i * m; }
    const std::uint64_t* mask_at(std::size_t i) const { return mask.data() + i * words; }
  };

  void stage(std::size_t j) {
    Pool pool;
    pool.m = m_;
    pool.words = words_;
    std::vector<std::size_t> pos_old, neg_old, zero_old;
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> index;
    auto add = [&](const std::int32_t* v, std::uint64_t h) {
      std::size_t id = pool.size();
      pool.vals.insert(pool.vals.end(), v, v + m_);
      std::int64_t nrm = 0;
      std::vector<std::uint64_t> msk(words_, 0);
      for (auto i : j_list_) {
        nrm += v[i];
        if (v[i] > 0) msk[i / 64] |= std::uint64_t{1} << (i % 64);
      }
      pool.norm.push_back(nrm);
      pool.mask.insert(pool.mask.end(), msk.begin(), msk.end());
      index[h].push_back(id);
      return id;
    };
    bool any_neg = false, any_pos = false;
    for (const auto& v : cur_) {
      if (v[j] < 0) any_neg = true;
      if (v[j] > 0) any_pos = true;
    }
    if (!any_neg) return;
    if (!any_pos) {
      std::vector<Vec32> keep;
      for (auto& v : cur_)
        if (v[j] == 0) keep.push_back(std::move(v));
      cur_ = std::move(keep);
      return;
    }
    for (const auto& v : cur_) {
      std::size_t id = add(v.data(), hash_range(v.data(), m_));
      (v[j] > 0 ? pos_old : v[j] < 0 ? neg_old : zero_old).push_back(id);
    }
    auto by_norm = [&](std::vector<std::size_t>& ids) {
      std::sort(ids.begin(), ids.end(),
                [&](std::size_t a, std::size_t b) { return pool.norm[a] < pool.norm[b]; });
    };
    by_norm(pos_old);
    by_norm(neg_old);
    by_norm(zero_old);
    std::vector<std::size_t> pos_new, neg_new, zero_new;
    std::map<std::int64_t, std::vector<std::size_t>> pos_levels, neg_levels;
    for (auto id : pos_old) pos_levels[pool.norm[id]].push_back(id);
    for (auto id : neg_old) neg_levels[pool.norm[id]].push_back(id);

    Vec32 x(m_);
    std::vector<std::uint64_t> xmask(words_);
    auto dominated_in = [&](const std::vector<std::size_t>& ids, std::int64_t level, int sign,
                            std::int32_t xj) {
      for (auto id : ids) {
        if (pool.norm[id] >= level) break;
        const std::uint64_t* um = pool.mask_at(id);
        bool sub = true;
        for (std::size_t w = 0; w < words_ && sub; ++w) sub = (um[w] & ~xmask[w]) == 0;
        if (!sub) continue;
        const std::int32_t* u = pool.at(id);
        if (sign > 0 && u[j] > xj) continue;
        if (sign < 0 && u[j] < xj) continue;
        bool le = true;
        for (auto i : j_list_) {
          if (u[i] > x[i]) {
            le = false;
            break;
          }
        }
        if (le) return true;
      }
      return false;
    };

    std::int64_t level = pos_levels.begin()->first + neg_levels.begin()->first;
    std::size_t total = pool.size();
    for (;; ++level) {
      const std::int64_t top = pos_levels.rbegin()->first + neg_levels.rbegin()->first;
      if (level > top) break;
      for (auto& [a, plist] : pos_levels) {
        if (a >= level) break;
        auto it = neg_levels.find(level - a);
        if (it == neg_levels.end()) continue;
        const std::vector<std::size_t> ylist = plist;  // copy: plist may grow at this level
        const std::vector<std::size_t>& zlist = it->second;
        for (auto yi : ylist) {
          for (auto zi : zlist) {
            clock_.tick();
            const std::int32_t* y = pool.at(yi);
            const std::int32_t* z = pool.at(zi);
            for (std::size_t i = 0; i < m_; ++i) {
              std::int64_t s = static_cast<std::int64_t>(y[i]) + z[i];
              if (s >= kEntryLimit || s <= -kEntryLimit)
                throw BudgetExceeded("hilbert: entry overflow during completion");
              x[i] = static_cast<std::int32_t>(s);
            }
            if (grading_done_ && dmax_ && degree_of(x) > *dmax_) continue;
            const std::uint64_t* ym = pool.mask_at(yi);
            const std::uint64_t* zm = pool.mask_at(zi);
            for (std::size_t w = 0; w < words_; ++w) xmask[w] = ym[w] | zm[w];
            const std::int32_t xj = x[j];
            const int sign = xj > 0 ? 1 : xj < 0 ? -1 : 0;
            if (dominated_in(zero_old, level, 0, 0) || dominated_in(zero_new, level, 0, 0))
              continue;
            if (sign > 0 && (dominated_in(pos_old, level, 1, xj) ||
                             dominated_in(pos_new, level, 1, xj)))
              continue;
            if (sign < 0 && (dominated_in(neg_old, level, -1, xj) ||
                             dominated_in(neg_new, level, -1, xj)))
              continue;
            const std::uint64_t h = hash_range(x.data(), m_);
            bool dup = false;
            if (auto hit = index.find(h); hit != index.end()) {
              for (auto id : hit->second)
                if (std::equal(x.begin(), x.end(), pool.at(id))) dup = true;
            }
            if (dup) continue;
            std::size_t id = add(x.data(), h);
            ++total;
            clock_.check_elements(total);
            if (sign > 0) {
              pos_new.push_back(id);
              pos_levels[level].push_back(id);
            } else if (sign < 0) {
              neg_new.push_back(id);
              neg_levels[level].push_back(id);
            } else {
              zero_new.push_back(id);
            }
          }
        }
      }
      clock_.check_time();
    }
    std::vector<Vec32> next;
    for (const auto* list : {&pos_old, &zero_old, &pos_new, &zero_new})
      for (auto id : *list) next.emplace_back(pool.at(id), pool.at(id) + m_);
    cur_ = std::move(next);
  }

  const ConeSystem& sys_;
  std::optional<std::int64_t> dmax_;
  BudgetClock clock_;
  std::size_t m_ = 0;
  std::size_t words_ = 0;
  std::vector<bool> in_j_;
  std::vector<std::size_t> j_list_;
  bool grading_done_ = false;
  std::vector<Vec32> cur_;
};

HilbertBasis make_basis(const ConeSystem& sys, BasisKind kind, std::int64_t dmax,
                        std::vector<Point> pts) {
  HilbertBasis hb;
  hb.system = sys;
  hb.kind = kind;
  hb.dmax = dmax;
  std::sort(pts.begin(), pts.end());
  for (auto& p : pts) {
    LatticePoint lp;
    lp.degree = sys.degree(p);
    lp.vector = std::move(p);
    hb.elements.push_back(std::move(lp));
  }
  return hb;
}

std::int64_t gcd_all(const std::vector<std::int64_t>& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

}  // namespace

std::int64_t HilbertBasis::max_degree() const {
  std::int64_t d = 0;
  for (const auto& e : elements) d = std::max(d, e.degree);
  return d;
}

std::vector<Point> HilbertBasis::vectors() const {
  std::vector<Point> out;
  for (const auto& e : elements) out.push_back(e.vector);
  return out;
}

std::map<std::int64_t, std::size_t> HilbertBasis::degree_histogram() const {
  std::map<std::int64_t, std::size_t> h;
  for (const auto& e : elements) ++h[e.degree];
  return h;
}

HilbertBasis hilbert_basis(const ConeSystem& sys, const HilbertOptions& opts) {
  Completion c(sys, std::nullopt, opts);
  return make_basis(sys, BasisKind::Minimal, 0, c.run());
}

HilbertBasis truncated_hilbert_basis(const ConeSystem& sys, std::int64_t dmax,
                                     const HilbertOptions& opts) {
  if (dmax < 0) throw InvalidArgument("truncated_hilbert_basis: dmax must be nonnegative");
  Completion c(sys, dmax, opts);
  return make_basis(sys, BasisKind::Truncated, dmax, c.run());
}

HilbertBasis hilbert_basis_by_degree(const ConeSystem& sys, std::int64_t dmax,
                                     const HilbertOptions& opts) {
  PointEnumerator pe(sys);
  EnumOptions eo;
  eo.budget = opts.budget;
  std::vector<Point> basis;
  for (std::int64_t s = 1; s <= dmax; ++s) {
    std::vector<Point> fresh;
    pe.enumerate(s, [&](const Point& p) {
      for (const auto& h : basis) {
        bool le = true;
        for (std::size_t i = 0; i < p.size() && le; ++i) le = h[i] <= p[i];
        if (le) return true;
      }
      fresh.push_back(p);
      return true;
    }, eo);
    basis.insert(basis.end(), fresh.begin(), fresh.end());
  }
  return make_basis(sys, BasisKind::Truncated, dmax, std::move(basis));
}

std::size_t cone_dimension(const ConeSystem& sys) {
  return sys.variables() - rational_rank(sys.matrix);
}

std::vector<Point> extreme_rays(const ConeSystem& sys, const Budget& budget) {
  BudgetClock clock(budget, "extreme_rays");
  Frame f = make_frame(sys);
  if (f.d == 0) return {};
  const std::size_t m = f.m;
  const std::size_t words = (m + 63) / 64;
  using Ray = std::vector<std::int64_t>;
  std::vector<Ray> rays;
  for (std::size_t k = 0; k < f.d; ++k) {
    std::vector<std::int64_t> x(f.d, 0);
    x[k] = unit_multiple(f, k);
    Vec32 y;
    lift(f, x, y);
    Ray r(y.begin(), y.end());
    std::int64_t g = gcd_all(r);
    for (auto& e : r) e /= g;
    rays.push_back(std::move(r));
  }
  std::vector<bool> in_j(m, false);
  for (auto s : f.sigma) in_j[s] = true;
  auto zero_mask = [&](const Ray& r) {
    std::vector<std::uint64_t> z(words, 0);
    for (std::size_t i = 0; i < m; ++i)
      if (in_j[i] && r[i] == 0) z[i / 64] |= std::uint64_t{1} << (i % 64);
    return z;
  };
  for (;;) {
    // cheapest remaining coordinate
    std::optional<std::size_t> pick;
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    for (std::size_t j = 0; j < m; ++j) {
      if (in_j[j]) continue;
      std::uint64_t p = 0, n = 0;
      for (const auto& r : rays) {
        if (r[j] > 0) ++p;
        else if (r[j] < 0) ++n;
      }
      if (p * n < best) {
        best = p * n;
        pick = j;
      }
    }
    if (!pick) break;
    const std::size_t j = *pick;
    std::vector<std::size_t> pos, neg, zero;
    for (std::size_t i = 0; i < rays.size(); ++i)
      (rays[i][j] > 0 ? pos : rays[i][j] < 0 ? neg : zero).push_back(i);
    std::vector<std::vector<std::uint64_t>> zm;
    for (const auto& r : rays) zm.push_back(zero_mask(r));
    std::vector<Ray> next;
    for (auto i : pos) next.push_back(rays[i]);
    for (auto i : zero) next.push_back(rays[i]);
    std::vector<std::uint64_t> common(words);
    for (auto p : pos) {
      for (auto q : neg) {
        clock.tick();
        std::size_t card = 0;
        for (std::size_t w = 0; w < words; ++w) {
          common[w] = zm[p][w] & zm[q][w];
          card += static_cast<std::size_t>(__builtin_popcountll(common[w]));
        }
        if (card + 2 < f.d) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          bool sup = true;
          for (std::size_t w = 0; w < words && sup; ++w) sup = (common[w] & ~zm[r][w]) == 0;
          if (sup) adjacent = false;
        }
        if (!adjacent) continue;
        const std::int64_t a = rays[p][j];
        const std::int64_t b = -rays[q][j];
        Ray r(m);
        for (std::size_t i = 0; i < m; ++i) {
          __int128 v = static_cast<__int128>(b) * rays[p][i] + static_cast<__int128>(a) * rays[q][i];
          if (v > (static_cast<__int128>(1) << 62) || v < -(static_cast<__int128>(1) << 62))
            throw BudgetExceeded("extreme_rays: entry overflow");
          r[i] = static_cast<std::int64_t>(v);
        }
        std::int64_t g = gcd_all(r);
        for (auto& e : r) e /= g;
        next.push_back(std::move(r));
      }
    }
    rays = std::move(next);
    in_j[j] = true;
    clock.check_elements(rays.size());
  }
  std::vector<Point> out(rays.begin(), rays.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_irreducible(const ConeSystem& sys, const Point& p, const Budget& budget) {
  const std::int64_t deg = require_member(sys, p);
  if (deg == 0) throw InvalidArgument("is_irreducible: the zero vector is not a basis candidate");
  PointEnumerator pe(sys);
  EnumOptions eo;
  eo.budget = budget;
  eo.upper = p;
  for (std::int64_t k = 1; 2 * k <= deg; ++k) {
    bool found = false;
    pe.enumerate(k, [&](const Point&) {
      found = true;
      return false;
    }, eo);
    if (found) return false;
  }
  return true;
}

std::optional<Decomposition> decompose(const Point& p, const HilbertBasis& hb, const Budget& budget) {
  const ConeSystem& sys = hb.system;
  if (p.size() != sys.variables()) throw InvalidArgument("decompose: dimension mismatch");
  auto chk = verify_member(sys, p);
  if (!chk.member) return std::nullopt;
  BudgetClock clock(budget, "decompose");
  std::vector<std::size_t> order(hb.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return hb.elements[a].degree > hb.elements[b].degree;
  });
  std::unordered_set<std::string> failed;
  std::vector<std::size_t> chosen;
  Point residual = p;
  auto key = [&](std::size_t start) {
    std::string k(reinterpret_cast<const char*>(residual.data()), residual.size() * sizeof(std::int64_t));
    k.append(reinterpret_cast<const char*>(&start), sizeof(start));
    return k;
  };
  auto rec = [&](auto&& self, std::size_t start) -> bool {
    if (std::all_of(residual.begin(), residual.end(), [](std::int64_t v) { return v == 0; }))
      return true;
    std::string k = key(start);
    if (failed.count(k)) return false;
    clock.tick();
    for (std::size_t oi = start; oi < order.size(); ++oi) {
      const Point& h = hb.elements[order[oi]].vector;
      bool fits = true;
      for (std::size_t i = 0; i < h.size() && fits; ++i) fits = h[i] <= residual[i];
      if (!fits) continue;
      for (std::size_t i = 0; i < h.size(); ++i) residual[i] -= h[i];
      chosen.push_back(order[oi]);
      if (self(self, oi)) return true;
      chosen.pop_back();
      for (std::size_t i = 0; i < h.size(); ++i) residual[i] += h[i];
    }
    failed.insert(std::move(k));
    return false;
  };
  if (!rec(rec, 0)) {
    if (hb.kind == BasisKind::Minimal)
      throw Error("decompose: member has no decomposition; the basis is incomplete");
    return std::nullopt;
  }
  Decomposition d;
  for (auto i : chosen) ++d.coefficients[i];
  return d;
}

Point recombine(const Decomposition& d, const HilbertBasis& hb) {
  Point out(hb.system.variables(), 0);
  for (const auto& [i, c] : d.coefficients) {
    const auto& h = hb.elements.at(i).vector;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += c * h[k];
  }
  return out;
}

std::vector<Point> minimal_elements(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<Point> out;
  for (std::size_t a = 0; a < pts.size(); ++a) {
    bool dominated = false;
    for (std::size_t b = 0; b < pts.size() && !dominated; ++b) {
      if (a == b) continue;
      bool le = true;
      for (std::size_t i = 0; i < pts[a].size() && le; ++i) le = pts[b][i] <= pts[a][i];
      dominated = le;
    }
    if (!dominated) out.push_back(pts[a]);
  }
  return out;
}

}  // namespace magic
