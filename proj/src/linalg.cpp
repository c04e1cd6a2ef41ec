#include "magic/linalg.hpp"

#include <algorithm>
#include <utility>

#include "magic/errors.hpp"

namespace magic {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw InvalidArgument("IntMatrix: entry count does not match rows x cols");
  }
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  IntMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(to_int_vector(r));
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  IntMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void IntMatrix::append_row(const IntVector& r) {
  if (r.size() != cols_) throw InvalidArgument("IntMatrix: row length mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

IntVector IntMatrix::apply(const IntVector& x) const {
  if (x.size() != cols_) throw InvalidArgument("IntMatrix: vector length mismatch");
  IntVector out(rows_, Integer(0));
  for (std::size_t i = 0; i < rows_; ++i) {
    Integer acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      const Integer& a = at(i, j);
      if (sgn(a) != 0 && sgn(x[j]) != 0) acc += a * x[j];
    }
    out[i] = acc;
  }
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

std::size_t rational_rank(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<IntVector> a;
  a.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) a.push_back(m.row(i));
  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && sgn(a[piv][c]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer v = a[rank][c] * a[i][j] - a[i][c] * a[rank][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(v);
      }
      a[i][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

namespace {

// Extended gcd with g >= 0 and s*a + t*b = g.
void ext_gcd(const Integer& a, const Integer& b, Integer& g, Integer& s, Integer& t) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

Integer norm2(const IntVector& v) {
  Integer n = 0;
  for (const auto& x : v) n += x * x;
  return n;
}

// Pairwise size reduction; keeps the lattice, shrinks entries.
void pairwise_reduce(std::vector<IntVector>& basis) {
  bool changed = true;
  std::size_t rounds = 0;
  while (changed && rounds < 64) {
    changed = false;
    ++rounds;
    std::sort(basis.begin(), basis.end(),
              [](const IntVector& x, const IntVector& y) { return norm2(x) < norm2(y); });
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (i == j) continue;
        Integer nj = norm2(basis[j]);
        if (sgn(nj) == 0) continue;
        Integer ip = dot(basis[i], basis[j]);
        // q = round(ip / nj)
        Integer q;
        Integer twice = 2 * ip + nj;
        Integer den = 2 * nj;
        mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), den.get_mpz_t());
        if (sgn(q) == 0) continue;
        IntVector cand = basis[i];
        for (std::size_t k = 0; k < cand.size(); ++k) cand[k] -= q * basis[j][k];
        if (norm2(cand) < norm2(basis[i])) {
          basis[i] = std::move(cand);
          changed = true;
        }
      }
    }
  }
}

void normalize_sign(IntVector& v) {
  for (const auto& x : v) {
    if (sgn(x) == 0) continue;
    if (sgn(x) < 0)
      for (auto& y : v) y = -y;
    return;
  }
}

}  // namespace

std::vector<IntVector> integer_kernel_basis(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  // Columnwise transformation: work on (m | U) by unimodular column operations.
  std::vector<IntVector> a(rows, IntVector(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m.at(i, j);
  std::vector<IntVector> u(cols, IntVector(cols, Integer(0)));  // u[j] is column j
  for (std::size_t j = 0; j < cols; ++j) u[j][j] = 1;

  auto combine = [&](std::size_t p, std::size_t j, const Integer& s, const Integer& t,
                     const Integer& x, const Integer& y) {
    // col_p <- s col_p + t col_j ; col_j <- x col_j - y col_p (old)
    for (std::size_t i = 0; i < rows; ++i) {
      Integer cp = a[i][p];
      Integer cj = a[i][j];
      a[i][p] = s * cp + t * cj;
      a[i][j] = x * cj - y * cp;
    }
    for (std::size_t k = 0; k < cols; ++k) {
      Integer cp = u[p][k];
      Integer cj = u[j][k];
      u[p][k] = s * cp + t * cj;
      u[j][k] = x * cj - y * cp;
    }
  };

  std::size_t p = 0;
  for (std::size_t i = 0; i < rows && p < cols; ++i) {
    for (std::size_t j = p + 1; j < cols; ++j) {
      if (sgn(a[i][j]) == 0) continue;
      if (sgn(a[i][p]) == 0) {
        std::swap(u[p], u[j]);
        for (std::size_t r = 0; r < rows; ++r) std::swap(a[r][p], a[r][j]);
        continue;
      }
      Integer g, s, t;
      ext_gcd(a[i][p], a[i][j], g, s, t);
      Integer x = a[i][p] / g;
      Integer y = a[i][j] / g;
      combine(p, j, s, t, x, y);
    }
    if (sgn(a[i][p]) != 0) ++p;
  }
  std::vector<IntVector> basis(u.begin() + static_cast<std::ptrdiff_t>(p), u.end());
  pairwise_reduce(basis);
  for (auto& v : basis) normalize_sign(v);
  std::sort(basis.begin(), basis.end(), [](const IntVector& x, const IntVector& y) {
    Integer nx = norm2(x), ny = norm2(y);
    if (nx != ny) return nx < ny;
    return x > y;
  });
  return basis;
}

HermiteForm hermite_form(const IntMatrix& m) {
  std::vector<IntVector> a;
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(m.row(i));
  const std::size_t cols = m.cols();
  HermiteForm out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    // gcd-eliminate column c among rows r..end
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (sgn(a[i][c]) == 0) continue;
      if (sgn(a[r][c]) == 0) {
        std::swap(a[r], a[i]);
        continue;
      }
      Integer g, s, t;
      ext_gcd(a[r][c], a[i][c], g, s, t);
      Integer x = a[r][c] / g;
      Integer y = a[i][c] / g;
      for (std::size_t k = c; k < cols; ++k) {
        Integer vr = a[r][k];
        Integer vi = a[i][k];
        a[r][k] = s * vr + t * vi;
        a[i][k] = x * vi - y * vr;
      }
    }
    if (sgn(a[r][c]) == 0) continue;
    if (sgn(a[r][c]) < 0)
      for (auto& v : a[r]) v = -v;
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
      if (sgn(q) == 0) continue;
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= q * a[r][k];
    }
    out.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  out.h = IntMatrix::from_rows(a, cols);
  return out;
}

RowEchelon reduced_row_echelon(const std::vector<RationalVector>& input, std::size_t cols) {
  std::vector<RationalVector> a = input;
  RowEchelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && sgn(a[piv][c]) == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    Rational inv = 1 / a[r][c];
    for (std::size_t k = c; k < a[r].size(); ++k) a[r][k] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      Rational f = a[i][c];
      for (std::size_t k = c; k < a[i].size(); ++k) {
        if (sgn(a[r][k]) != 0) a[i][k] -= f * a[r][k];
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

IntVector primitive_ray(const RationalVector& v) {
  Integer l = 1;
  bool nonzero = false;
  for (const auto& x : v) {
    if (sgn(x) != 0) nonzero = true;
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  }
  if (!nonzero) throw InvalidArgument("primitive_ray: zero vector");
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational s = v[i] * l;
    out[i] = s.get_num();
  }
  return primitive_ray(out);
}

IntVector primitive_ray(const IntVector& v) {
  Integer g = vector_gcd(v);
  if (sgn(g) == 0) throw InvalidArgument("primitive_ray: zero vector");
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

Integer lcm_of_denominators(const std::vector<RationalVector>& vs) {
  if (vs.empty()) throw InvalidArgument("lcm_of_denominators: empty list");
  Integer l = 1;
  for (const auto& v : vs)
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

Integer vector_gcd(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return sgn(x) == 0; });
}

IntVector to_int_vector(const std::vector<long>& v) {
  IntVector out;
  out.reserve(v.size());
  for (long x : v) out.emplace_back(x);
  return out;
}

std::vector<long> to_long_vector(const IntVector& v) {
  std::vector<long> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!x.fits_slong_p()) throw InvalidArgument("integer does not fit into a machine word");
    out.push_back(x.get_si());
  }
  return out;
}

std::vector<std::int64_t> to_i64_vector(const IntVector& v) {
  std::vector<std::int64_t> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!x.fits_slong_p()) throw InvalidArgument("integer does not fit into a machine word");
    out.push_back(static_cast<std::int64_t>(x.get_si()));
  }
  return out;
}

}  // namespace magic
