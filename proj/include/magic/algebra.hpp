#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "magic/errors.hpp"
#include "magic/hilbert.hpp"
#include "magic/linalg.hpp"
#include "magic/models.hpp"

namespace magic {

using Monomial = std::vector<std::int32_t>;  // exponent vector

std::int64_t weighted_degree(const Monomial& m, const std::vector<std::int64_t>& weights);
bool divides(const Monomial& a, const Monomial& b);
Monomial monomial_lcm(const Monomial& a, const Monomial& b);
Monomial monomial_gcd(const Monomial& a, const Monomial& b);

class TermOrder {
 public:
  enum class Kind { Lex, DegRevLex, Blocks };

  // Lexicographic with x_priority[0] largest.
  static TermOrder lex(std::size_t n);
  static TermOrder lex(std::vector<std::size_t> priority);
  // Weighted degree, ties broken reverse-lexicographically (last priority variable cheapest).
  static TermOrder degrevlex(std::vector<std::int64_t> weights);
  static TermOrder degrevlex(std::vector<std::int64_t> weights, std::vector<std::size_t> priority);
  // Product order: consecutive blocks of the priority list, each compared by weighted degrevlex.
  static TermOrder blocks(std::vector<std::int64_t> weights, std::vector<std::size_t> priority,
                          std::vector<std::size_t> block_sizes);

  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
  std::size_t variables() const { return priority_.size(); }
  Kind kind() const { return kind_; }
  const std::vector<std::int64_t>& weights() const { return weights_; }
  const std::vector<std::size_t>& priority() const { return priority_; }
  const std::vector<std::size_t>& block_sizes() const { return blocks_; }
  std::string describe() const;

 private:
  int compare_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) const;

  Kind kind_ = Kind::Lex;
  std::vector<std::int64_t> weights_;
  std::vector<std::size_t> priority_;
  std::vector<std::size_t> blocks_;
};

// Pure-difference binomial lead - trail with lead > trail in the order it was oriented for.
struct Binomial {
  Monomial lead;
  Monomial trail;
  bool operator==(const Binomial&) const = default;
  bool operator<(const Binomial& o) const {
    return lead != o.lead ? lead < o.lead : trail < o.trail;
  }
};

// Orients a - b; returns nullopt for a == b.
std::optional<Binomial> make_binomial(Monomial a, Monomial b, const TermOrder& order);
Binomial binomial_from_vector(const std::vector<std::int64_t>& u, const TermOrder& order);

// Reduced Groebner basis, sorted.
std::vector<Binomial> buchberger(const std::vector<Binomial>& gens, const TermOrder& order,
                                 const Budget& budget = {});
Monomial normal_form(const Monomial& m, const std::vector<Binomial>& gb, const TermOrder& order);
// Membership of a - b in the ideal with Groebner basis gb.
bool ideal_contains(const std::vector<Binomial>& gb, const TermOrder& order, const Monomial& a,
                    const Monomial& b);
bool is_groebner_basis(const std::vector<Binomial>& gb, const TermOrder& order);

// (I : x_var^inf) for an ideal homogeneous under weights.
std::vector<Binomial> saturate_variable(const std::vector<Binomial>& gens, std::size_t var,
                                        const std::vector<std::int64_t>& weights,
                                        const Budget& budget = {});
// (I : (x_1...x_r)^inf), one variable at a time; result is a reduced basis in `order`.
std::vector<Binomial> saturate(const std::vector<Binomial>& gens, const TermOrder& order,
                               const Budget& budget = {});
// Same ideal through one extra variable u = x_1...x_r of matching weight.
std::vector<Binomial> saturate_homogenizing(const std::vector<Binomial>& gens,
                                            const TermOrder& order, const Budget& budget = {});

// Toric ideal of the points (columns of the exponent map x_i -> t^{a_i}) from a lattice basis of
// the kernel followed by saturation.
std::vector<Binomial> toric_ideal(const std::vector<Point>& points, const TermOrder& order,
                                  const Budget& budget = {});
// Same ideal by eliminating the torus variables.
std::vector<Binomial> toric_ideal_elimination(const std::vector<Point>& points,
                                              const TermOrder& order, const Budget& budget = {});
// Reduced Groebner basis elements of weighted degree <= max_degree, found fiber by fiber.
std::vector<Binomial> toric_ideal_truncated(const std::vector<Point>& points,
                                            const TermOrder& order, std::int64_t max_degree,
                                            const Budget& budget = {});

std::vector<std::int64_t> basis_degrees(const HilbertBasis& hb);
TermOrder default_order(const HilbertBasis& hb);
std::vector<Binomial> lattice_ideal(const HilbertBasis& hb, const TermOrder& order,
                                    const Budget& budget = {});

// Hilbert basis read off a reduced Groebner basis of the kernel of x_i -> y_i t^{a_i}.
std::vector<Point> hilbert_basis_by_elimination(const ConeSystem& sys, const Budget& budget = {});

struct MonomialIdeal {
  std::size_t nvars = 0;
  std::vector<Monomial> gens;  // minimal, sorted

  static MonomialIdeal from(std::size_t nvars, std::vector<Monomial> gens);
  bool contains(const Monomial& m) const;
  bool is_zero() const { return gens.empty(); }
};

MonomialIdeal initial_ideal(const std::vector<Binomial>& gb, std::size_t nvars);

using Polynomial = std::vector<Integer>;  // ascending coefficients

enum class PivotStrategy { VariablePower, Variable, PairGcd };
std::string pivot_name(PivotStrategy p);

struct NumeratorOptions {
  PivotStrategy pivot = PivotStrategy::VariablePower;
  // When set, the numerator is only correct modulo t^{truncate+1}.
  std::optional<std::int64_t> truncate;
  Budget budget;
};

Polynomial hilbert_numerator(const MonomialIdeal& mi, const std::vector<std::int64_t>& weights,
                             const NumeratorOptions& opts = {});

struct RationalGenFn {
  Polynomial numerator;
  std::vector<std::int64_t> denominator;  // factors (1 - t^d)
  std::optional<std::int64_t> exact_through;  // set when only coefficients up to here are valid
};

struct SeriesOptions {
  Budget budget;
  // Degree up to which the series must be correct; required for the truncated route.
  std::optional<std::int64_t> degree;
  enum class Route { Auto, Full, Truncated } route = Route::Auto;
  std::size_t full_route_max_variables = 24;
  PivotStrategy pivot = PivotStrategy::VariablePower;
};

RationalGenFn hilbert_series(const HilbertBasis& hb, const SeriesOptions& opts = {});
RationalGenFn hilbert_series(const ConeSystem& sys, const SeriesOptions& opts = {});

}  // namespace magic
