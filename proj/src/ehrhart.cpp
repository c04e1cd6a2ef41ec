#include "magic/ehrhart.hpp"

#include <numeric>
#include <sstream>

#include "magic/hilbert.hpp"

namespace magic {

std::vector<Integer> expand_series(const RationalGenFn& g, std::int64_t dmax) {
  if (dmax < 0) throw InvalidArgument("expand_series: dmax must be nonnegative");
  if (g.exact_through && dmax > *g.exact_through)
    throw InvalidArgument("expand_series: series is only valid through degree " +
                          std::to_string(*g.exact_through));
  const std::size_t len = static_cast<std::size_t>(dmax) + 1;
  std::vector<Integer> c(len, 0);
  for (std::size_t i = 0; i < g.numerator.size() && i < len; ++i) c[i] = g.numerator[i];
  for (auto d : g.denominator) {
    if (d <= 0) throw InvalidArgument("expand_series: denominator exponents must be positive");
    for (std::size_t i = static_cast<std::size_t>(d); i < len; ++i) c[i] += c[i - static_cast<std::size_t>(d)];
  }
  return c;
}

const std::vector<Rational>& QuasiPolynomial::constituent(std::int64_t s) const {
  std::int64_t r = ((s % period) + period) % period;
  return constituents.at(static_cast<std::size_t>(r));
}

Rational QuasiPolynomial::value(std::int64_t s) const {
  const auto& c = constituent(s);
  Rational acc = 0, x = s;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

Integer QuasiPolynomial::eval(std::int64_t s) const {
  Rational v = value(s);
  if (v.get_den() != 1)
    throw Error("quasi-polynomial value at " + std::to_string(s) + " is not an integer: " + v.get_str());
  return v.get_num();
}

std::size_t QuasiPolynomial::degree() const {
  std::size_t d = 0;
  for (const auto& c : constituents)
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] != 0) d = std::max(d, i);
  return d;
}

std::string format_rational_poly(const std::vector<Rational>& c, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    Rational a = abs(c[i]);
    if (!first) os << (c[i] < 0 ? " - " : " + ");
    else if (c[i] < 0) os << "-";
    first = false;
    bool unit = a == 1;
    if (!unit || i == 0) os << a.get_str();
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

std::string QuasiPolynomial::to_string(const std::string& var) const {
  std::ostringstream os;
  for (std::int64_t r = 0; r < period; ++r) {
    if (period > 1) os << var << " = " << r << " mod " << period << ": ";
    os << format_rational_poly(constituents[static_cast<std::size_t>(r)], var) << "\n";
  }
  return os.str();
}

std::int64_t quasi_period(const ConeSystem& sys, const Budget& budget) {
  std::int64_t n = 1;
  for (const auto& ray : extreme_rays(sys, budget)) {
    std::int64_t deg = sys.degree(ray);
    if (deg <= 0) throw InvalidArgument("quasi_period: cone is not graded positively");
    std::int64_t g = 0;
    for (auto v : ray) g = std::gcd(g, v);
    g = std::gcd(g, deg);
    n = std::lcm(n, deg / g);
  }
  return n;
}

std::int64_t polytope_dimension(const ConeSystem& sys) {
  return static_cast<std::int64_t>(cone_dimension(sys)) - 1;
}

namespace {

// Coefficients of the interpolating polynomial through (x_i, y_i), ascending.
std::vector<Rational> lagrange(const std::vector<std::int64_t>& xs, const std::vector<Rational>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> dd(ys);
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i)
      dd[i] = (dd[i] - dd[i - 1]) / Rational(xs[i] - xs[i - k]);
  std::vector<Rational> coef(n, 0);
  std::vector<Rational> basis{1};
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < basis.size(); ++i) coef[i] += dd[k] * basis[i];
    std::vector<Rational> next(basis.size() + 1, 0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      next[i + 1] += basis[i];
      next[i] -= basis[i] * Rational(xs[k]);
    }
    basis = std::move(next);
  }
  while (!coef.empty() && coef.back() == 0) coef.pop_back();
  return coef;
}

Rational horner(const std::vector<Rational>& c, std::int64_t s) {
  Rational acc = 0, x = s;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

}  // namespace

QuasiPolynomial interpolate(const std::map<std::int64_t, Integer>& samples, std::int64_t period,
                            std::size_t degree) {
  if (period <= 0) throw InvalidArgument("interpolate: period must be positive");
  QuasiPolynomial qp;
  qp.period = period;
  qp.constituents.assign(static_cast<std::size_t>(period), {});
  for (std::int64_t r = 0; r < period; ++r) {
    std::vector<std::int64_t> xs;
    std::vector<Rational> ys;
    bool nonzero = false;
    for (const auto& [s, v] : samples) {
      if (((s % period) + period) % period != r) continue;
      xs.push_back(s);
      ys.push_back(Rational(v));
      nonzero |= v != 0;
    }
    if (!nonzero) continue;
    if (xs.size() < degree + 1)
      throw InvalidArgument("insufficient samples for residue class " + std::to_string(r) + " mod " +
                            std::to_string(period) + ": have " + std::to_string(xs.size()) +
                            ", need " + std::to_string(degree + 1));
    std::vector<std::int64_t> fx(xs.begin(), xs.begin() + static_cast<long>(degree + 1));
    std::vector<Rational> fy(ys.begin(), ys.begin() + static_cast<long>(degree + 1));
    auto c = lagrange(fx, fy);
    for (std::size_t i = degree + 1; i < xs.size(); ++i)
      if (horner(c, xs[i]) != ys[i])
        throw Error("inconsistent samples for residue class " + std::to_string(r) + " mod " +
                    std::to_string(period) + " at s=" + std::to_string(xs[i]) +
                    "; the degree bound is too low");
    qp.constituents[static_cast<std::size_t>(r)] = std::move(c);
  }
  return qp;
}

QuasiPolynomial minimize_period(const QuasiPolynomial& qp) {
  for (std::int64_t p = 1; p < qp.period; ++p) {
    if (qp.period % p != 0) continue;
    bool ok = true;
    for (std::int64_t i = p; i < qp.period && ok; ++i)
      ok = qp.constituents[static_cast<std::size_t>(i)] == qp.constituents[static_cast<std::size_t>(i % p)];
    if (!ok) continue;
    QuasiPolynomial out;
    out.period = p;
    out.constituents.assign(qp.constituents.begin(), qp.constituents.begin() + p);
    return out;
  }
  return qp;
}

std::map<std::int64_t, Integer> sample_counts(const ConeSystem& sys,
                                              const std::vector<std::int64_t>& degrees,
                                              const EnumOptions& opts) {
  PointEnumerator pe(sys);
  std::map<std::int64_t, Integer> out;
  for (auto s : degrees) out[s] = pe.count(s, opts);
  return out;
}

QuasiPolynomial formula_from_oracle(const ConeSystem& sys, std::int64_t period, std::size_t degree,
                                    const EnumOptions& opts) {
  std::vector<std::int64_t> degs;
  for (std::int64_t r = 0; r < period; ++r)
    for (std::size_t k = 0; k <= degree; ++k) degs.push_back(r + static_cast<std::int64_t>(k) * period);
  return interpolate(sample_counts(sys, degs, opts), period, degree);
}

}  // namespace magic
