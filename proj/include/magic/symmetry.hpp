#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "magic/errors.hpp"
#include "magic/linalg.hpp"
#include "magic/models.hpp"

namespace magic {

// Acts on vectors by (p . x)[i] = x[p[i]].
using Permutation = std::vector<std::size_t>;

Permutation identity_permutation(std::size_t n);
bool is_permutation(const Permutation& p);
Permutation inverse(const Permutation& p);
// Permutation acting as `first`, then `second`.
Permutation then(const Permutation& first, const Permutation& second);
Point act(const Permutation& p, const Point& x);

// B(i,j) = A(rows[i], cols[j]), followed by a transpose when the flag is set.
struct SquareOp {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  bool transpose = false;

  static SquareOp identity(std::size_t n);
  static SquareOp from_cells(const Permutation& cells, std::size_t n);
  std::size_t n() const { return rows.size(); }
  Permutation cells() const;
  SquareOp then(const SquareOp& next) const;
  bool is_identity() const;
  bool operator==(const SquareOp&) const = default;
};

Square apply(const SquareOp& op, const Square& a);

SquareOp row_swap(std::size_t n, std::size_t i, std::size_t j);
SquareOp col_swap(std::size_t n, std::size_t i, std::size_t j);
SquareOp transpose_op(std::size_t n);
SquareOp rotate90(std::size_t n);
SquareOp reflect_rows(std::size_t n);
SquareOp reflect_cols(std::size_t n);
SquareOp half_swap_rows(std::size_t n);
SquareOp half_swap_cols(std::size_t n);
SquareOp adjacent_swap_rows(std::size_t n);
SquareOp adjacent_swap_cols(std::size_t n);
// Names such as "R", "transpose", "reflect-rows", "half-cols", "adjacent-rows", "(r1,r3)", "(c2,c4)".
// Line indices inside parentheses are 1-based.
SquareOp parse_square_op(const std::string& name, std::size_t n);

struct GroupSpec {
  std::string name;
  std::size_t degree = 0;                 // number of points acted on
  std::vector<Permutation> generators;
  std::optional<std::size_t> side;        // set for groups of square operations
  std::vector<SquareOp> square_generators;
};

GroupSpec square_group(std::string name, std::size_t n, std::vector<SquareOp> ops);
GroupSpec group_g8();
GroupSpec group_h16();
GroupSpec group_s16();
GroupSpec dihedral_group(std::size_t n);
// Rotation, reflection, transpose, the alternate-line swaps, and the half and adjacent swaps.
GroupSpec franklin_group(std::size_t n);
GroupSpec cube_rotation_group(std::size_t n);
// Vertex permutations acting on the edges of gamma_graph(n).
GroupSpec symmetric_group_on_gamma(std::size_t n);
GroupSpec join(const GroupSpec& a, const GroupSpec& b);
// "G8", "H16", "S16", "dihedral:n", "franklin:n", "cube24:n", "symmetric:n", joined with '+'.
GroupSpec group_preset(const std::string& name);
GroupSpec group_from_generators(std::string name, std::vector<Permutation> gens);

// Exact order by Schreier-Sims.
Integer group_order(const GroupSpec& g, const Budget& budget = {});
bool generators_commute(const GroupSpec& g);
bool generators_are_involutions(const GroupSpec& g);
// Rank over GF(2) of the moved-line indicator vectors of the square generators.
std::size_t gf2_rank(const GroupSpec& g);
Integer gf2_order(const GroupSpec& g);

std::vector<Point> orbit(const Point& x, const GroupSpec& g, std::size_t cap);
bool isomorphic(const Point& x, const Point& y, const GroupSpec& g, std::size_t cap);

struct OrbitPartition {
  std::vector<std::vector<std::size_t>> classes;  // indices into the input, by first member
  bool closed = true;  // every orbit lies inside the input set
};
OrbitPartition orbit_classes(const std::vector<Point>& points, const GroupSpec& g, std::size_t cap);

// Distinct images of l under vertex permutations whose support lies in the support of host.
std::size_t orbit_count_in_host(const Point& l, const Point& host, std::size_t n,
                                std::size_t cap = 1'000'000);

}  // namespace magic
