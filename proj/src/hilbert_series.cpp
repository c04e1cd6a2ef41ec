#include <algorithm>
#include <limits>
#include <numeric>

#include "magic/algebra.hpp"

namespace magic {

MonomialIdeal MonomialIdeal::from(std::size_t nvars, std::vector<Monomial> gens) {
  for (const auto& g : gens)
    if (g.size() != nvars) throw InvalidArgument("monomial ideal: generator of the wrong length");
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    auto da = std::accumulate(a.begin(), a.end(), std::int64_t{0});
    auto db = std::accumulate(b.begin(), b.end(), std::int64_t{0});
    return da != db ? da < db : a < b;
  });
  MonomialIdeal mi;
  mi.nvars = nvars;
  for (auto& g : gens) {
    bool covered = false;
    for (const auto& h : mi.gens)
      if (divides(h, g)) {
        covered = true;
        break;
      }
    if (!covered) mi.gens.push_back(std::move(g));
  }
  std::sort(mi.gens.begin(), mi.gens.end());
  return mi;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return divides(g, m); });
}

MonomialIdeal initial_ideal(const std::vector<Binomial>& gb, std::size_t nvars) {
  std::vector<Monomial> leads;
  for (const auto& g : gb) leads.push_back(g.lead);
  return MonomialIdeal::from(nvars, std::move(leads));
}

std::string pivot_name(PivotStrategy p) {
  switch (p) {
    case PivotStrategy::VariablePower: return "variable-power";
    case PivotStrategy::Variable: return "variable";
    case PivotStrategy::PairGcd: return "pair-gcd";
  }
  return "?";
}

namespace {

constexpr std::int64_t kNoBound = std::numeric_limits<std::int64_t>::max();

void trim(Polynomial& p, std::int64_t bound) {
  if (bound != kNoBound && static_cast<std::int64_t>(p.size()) > bound + 1)
    p.resize(static_cast<std::size_t>(bound + 1));
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Polynomial mul(const Polynomial& a, const Polynomial& b, std::int64_t bound) {
  if (a.empty() || b.empty()) return {};
  std::size_t len = a.size() + b.size() - 1;
  if (bound != kNoBound) len = std::min(len, static_cast<std::size_t>(bound + 1));
  Polynomial r(len, 0);
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) r[i + j] += a[i] * b[j];
  }
  trim(r, bound);
  return r;
}

// p += t^shift q
void add_shifted(Polynomial& p, const Polynomial& q, std::int64_t shift, std::int64_t bound) {
  std::size_t need = q.size() + static_cast<std::size_t>(shift);
  if (bound != kNoBound) need = std::min(need, static_cast<std::size_t>(bound + 1));
  if (p.size() < need) p.resize(need, 0);
  for (std::size_t i = 0; i < q.size() && i + static_cast<std::size_t>(shift) < need; ++i)
    p[i + static_cast<std::size_t>(shift)] += q[i];
  trim(p, bound);
}

Polynomial one_minus_t(std::int64_t d, std::int64_t bound) {
  Polynomial p(static_cast<std::size_t>(d + 1), 0);
  p[0] = 1;
  p[static_cast<std::size_t>(d)] = -1;
  trim(p, bound);
  return p;
}

class Numerator {
 public:
  Numerator(const std::vector<std::int64_t>& w, PivotStrategy s, const Budget& b)
      : w_(w), strategy_(s), clock_(b, "hilbert_numerator") {}

  Polynomial run(std::vector<Monomial> gens, std::int64_t bound) {
    clock_.tick();
    if (bound < 0) return {};
    if (bound != kNoBound) {
      gens.erase(std::remove_if(gens.begin(), gens.end(),
                                [&](const Monomial& g) { return weighted_degree(g, w_) > bound; }),
                 gens.end());
    }
    if (gens.empty()) return {1};
    const std::size_t n = w_.size();
    // connected components through shared variables
    std::vector<std::size_t> parent(gens.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::vector<std::size_t> owner(n, gens.size());
    std::vector<std::size_t> freq(n, 0);
    for (std::size_t g = 0; g < gens.size(); ++g) {
      for (std::size_t v = 0; v < n; ++v) {
        if (gens[g][v] == 0) continue;
        ++freq[v];
        if (owner[v] == gens.size()) owner[v] = g;
        else parent[find(g)] = find(owner[v]);
      }
    }
    std::vector<std::vector<Monomial>> comps;
    {
      std::vector<std::size_t> slot(gens.size(), gens.size());
      for (std::size_t g = 0; g < gens.size(); ++g) {
        std::size_t r = find(g);
        if (slot[r] == gens.size()) {
          slot[r] = comps.size();
          comps.emplace_back();
        }
        comps[slot[r]].push_back(gens[g]);
      }
    }
    if (comps.size() > 1) {
      Polynomial acc{1};
      for (auto& c : comps) {
        if (c.size() == 1) acc = mul(acc, one_minus_t(weighted_degree(c[0], w_), bound), bound);
        else acc = mul(acc, run(std::move(c), bound), bound);
        if (acc.empty()) break;
      }
      return acc;
    }
    if (gens.size() == 1) return one_minus_t(weighted_degree(gens[0], w_), bound);

    Monomial pivot = choose(gens, freq);
    const std::int64_t pd = weighted_degree(pivot, w_);
    std::vector<Monomial> plus{pivot}, quot;
    for (const auto& g : gens) {
      if (!divides(pivot, g)) plus.push_back(g);
      Monomial q(n);
      for (std::size_t v = 0; v < n; ++v) q[v] = std::max(0, g[v] - pivot[v]);
      quot.push_back(std::move(q));
    }
    Polynomial a = run(minimalize(std::move(plus)), bound);
    Polynomial b = run(minimalize(std::move(quot)), bound == kNoBound ? kNoBound : bound - pd);
    add_shifted(a, b, pd, bound);
    return a;
  }

 private:
  Monomial choose(const std::vector<Monomial>& gens, const std::vector<std::size_t>& freq) const {
    const std::size_t n = w_.size();
    std::size_t best = 0;
    for (std::size_t v = 1; v < n; ++v)
      if (freq[v] > freq[best]) best = v;
    Monomial p(n, 0);
    switch (strategy_) {
      case PivotStrategy::Variable:
        p[best] = 1;
        break;
      case PivotStrategy::VariablePower: {
        std::int32_t k = std::numeric_limits<std::int32_t>::max();
        for (const auto& g : gens)
          if (g[best] > 0) k = std::min(k, g[best]);
        p[best] = k;
        break;
      }
      case PivotStrategy::PairGcd: {
        const Monomial* first = nullptr;
        for (const auto& g : gens) {
          if (g[best] == 0) continue;
          if (!first) {
            first = &g;
            continue;
          }
          p = monomial_gcd(*first, g);
          break;
        }
        break;
      }
    }
    return p;
  }

  static std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
      auto da = std::accumulate(a.begin(), a.end(), std::int64_t{0});
      auto db = std::accumulate(b.begin(), b.end(), std::int64_t{0});
      return da != db ? da < db : a < b;
    });
    std::vector<Monomial> out;
    for (auto& g : gens) {
      bool covered = false;
      for (const auto& h : out)
        if (divides(h, g)) {
          covered = true;
          break;
        }
      if (!covered) out.push_back(std::move(g));
    }
    return out;
  }

  const std::vector<std::int64_t>& w_;
  PivotStrategy strategy_;
  BudgetClock clock_;
};

}  // namespace

Polynomial hilbert_numerator(const MonomialIdeal& mi, const std::vector<std::int64_t>& weights,
                             const NumeratorOptions& opts) {
  if (weights.size() != mi.nvars) throw InvalidArgument("hilbert_numerator: weight count mismatch");
  for (auto w : weights)
    if (w <= 0) throw InvalidArgument("hilbert_numerator: weights must be strictly positive");
  if (opts.truncate && *opts.truncate < 0)
    throw InvalidArgument("hilbert_numerator: truncation degree must be nonnegative");
  Numerator num(weights, opts.pivot, opts.budget);
  return num.run(mi.gens, opts.truncate ? *opts.truncate : kNoBound);
}

RationalGenFn hilbert_series(const HilbertBasis& hb, const SeriesOptions& opts) {
  RationalGenFn g;
  const auto w = basis_degrees(hb);
  g.denominator = w;
  if (hb.size() == 0) {
    g.numerator = {1};
    return g;
  }
  TermOrder order = TermOrder::degrevlex(w);
  bool full = opts.route == SeriesOptions::Route::Full ||
              (opts.route == SeriesOptions::Route::Auto && hb.size() <= opts.full_route_max_variables);
  if (hb.kind == BasisKind::Truncated) full = false;
  NumeratorOptions no;
  no.pivot = opts.pivot;
  no.budget = opts.budget;
  if (full) {
    auto gb = lattice_ideal(hb, order, opts.budget);
    g.numerator = hilbert_numerator(initial_ideal(gb, hb.size()), w, no);
    return g;
  }
  if (!opts.degree)
    throw InvalidArgument("hilbert_series: the truncated route needs a degree bound");
  if (hb.kind == BasisKind::Truncated && hb.dmax < *opts.degree)
    throw InvalidArgument("hilbert_series: truncated basis does not reach the requested degree");
  auto gb = toric_ideal_truncated(hb.vectors(), order, *opts.degree, opts.budget);
  no.truncate = *opts.degree;
  g.numerator = hilbert_numerator(initial_ideal(gb, hb.size()), w, no);
  g.exact_through = *opts.degree;
  return g;
}

RationalGenFn hilbert_series(const ConeSystem& sys, const SeriesOptions& opts) {
  HilbertOptions ho;
  ho.budget = opts.budget;
  return hilbert_series(hilbert_basis(sys, ho), opts);
}

}  // namespace magic
