#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace magic {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols = 0);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  IntVector row(std::size_t r) const;
  void append_row(const IntVector& r);
  const std::vector<Integer>& entries() const { return data_; }

  IntVector apply(const IntVector& x) const;
  IntMatrix transposed() const;
  bool operator==(const IntMatrix& o) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t rational_rank(const IntMatrix& m);

// Basis of {x in Z^cols : m x = 0}. Vectors are primitive with positive leading entry.
std::vector<IntVector> integer_kernel_basis(const IntMatrix& m);

// Row-style Hermite normal form of the row lattice of m.
struct HermiteForm {
  IntMatrix h;                    // rank x cols, echelon, positive pivots, reduced above pivots
  std::vector<std::size_t> pivots;  // pivot column of each row
};
HermiteForm hermite_form(const IntMatrix& m);

// Reduced row echelon form over Q.
struct RowEchelon {
  std::vector<RationalVector> rows;  // rank rows, each of length cols
  std::vector<std::size_t> pivots;
};
RowEchelon reduced_row_echelon(const std::vector<RationalVector>& rows, std::size_t cols);

IntVector primitive_ray(const RationalVector& v);
IntVector primitive_ray(const IntVector& v);
Integer lcm_of_denominators(const std::vector<RationalVector>& vs);

Integer vector_gcd(const IntVector& v);
Integer dot(const IntVector& a, const IntVector& b);
bool is_zero(const IntVector& v);

IntVector to_int_vector(const std::vector<long>& v);
std::vector<long> to_long_vector(const IntVector& v);
std::vector<std::int64_t> to_i64_vector(const IntVector& v);

}  // namespace magic
