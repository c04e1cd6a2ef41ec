#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "magic/algebra.hpp"
#include "magic/enumerate.hpp"
#include "magic/linalg.hpp"
#include "magic/models.hpp"

namespace magic {

// Power-series coefficients c_0..c_dmax of numerator / prod (1 - t^d).
std::vector<Integer> expand_series(const RationalGenFn& g, std::int64_t dmax);

struct QuasiPolynomial {
  std::int64_t period = 1;
  std::vector<std::vector<Rational>> constituents;  // ascending coefficients, one per residue

  const std::vector<Rational>& constituent(std::int64_t s) const;
  Rational value(std::int64_t s) const;
  // Throws if the value is not an integer.
  Integer eval(std::int64_t s) const;
  std::size_t degree() const;
  std::string to_string(const std::string& var = "s") const;
  bool operator==(const QuasiPolynomial&) const = default;
};

// Lcm of the vertex denominators of the degree-one slice, from primitive extreme rays.
std::int64_t quasi_period(const ConeSystem& sys, const Budget& budget = {});
// Dimension of the degree-one slice: (cols - rank) - 1.
std::int64_t polytope_dimension(const ConeSystem& sys);

QuasiPolynomial interpolate(const std::map<std::int64_t, Integer>& samples, std::int64_t period,
                            std::size_t degree);
QuasiPolynomial minimize_period(const QuasiPolynomial& qp);

// Samples s -> count_points(sys, s) for the given degrees.
std::map<std::int64_t, Integer> sample_counts(const ConeSystem& sys,
                                              const std::vector<std::int64_t>& degrees,
                                              const EnumOptions& opts = {});

// Interpolates from oracle counts: for each residue class, degree + 1 degrees (shifted by the
// period) starting at the class representative.
QuasiPolynomial formula_from_oracle(const ConeSystem& sys, std::int64_t period, std::size_t degree,
                                    const EnumOptions& opts = {});

std::string format_rational_poly(const std::vector<Rational>& c, const std::string& var);

}  // namespace magic
