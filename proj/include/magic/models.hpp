#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "magic/linalg.hpp"

namespace magic {

using Point = std::vector<std::int64_t>;

enum class Family {
  Magic,
  SemiMagic,
  Pandiagonal,
  Franklin8,
  Franklin16,
  PandiagonalFranklin8,
  MagicCube,
  SemiMagicHypercube,
  GraphLabeling,
  DigraphLabeling,
  SymmetricMagic,
  PandiagonalSymmetric,
};

std::string family_name(Family f);
Family family_from_name(const std::string& name);

enum class ShapeKind { Square, Hypercube, Graph };

// Maps matrix columns to cells or edges.
struct Shape {
  ShapeKind kind = ShapeKind::Square;
  std::size_t n = 0;  // side length, or vertex count for graphs
  std::size_t d = 2;  // dimension for hypercubes
  bool directed = false;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // graphs only
  std::optional<std::size_t> part_a;                        // declared bipartition size

  std::size_t size() const;
  bool operator==(const Shape&) const = default;
};

struct Params {
  std::size_t n = 0;
  std::size_t d = 0;
  bool operator==(const Params&) const = default;
};

struct ConeSystem {
  Family family = Family::Magic;
  Params params;
  IntMatrix matrix;
  std::vector<std::int64_t> grading;
  Shape shape;

  std::size_t variables() const { return matrix.cols(); }
  std::size_t equations() const { return matrix.rows(); }
  std::int64_t degree(const Point& p) const;
  // Dense machine-word copy of the matrix (entries are tiny by construction).
  std::vector<std::vector<std::int64_t>> small_matrix() const;
  bool operator==(const ConeSystem&) const = default;
};

struct LatticePoint {
  Point vector;
  std::int64_t degree = 0;
  bool operator==(const LatticePoint&) const = default;
  auto operator<=>(const LatticePoint& o) const { return vector <=> o.vector; }
};

ConeSystem build_system(Family family, const Params& params);
ConeSystem graph_system(std::size_t vertices,
                        const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                        bool directed, std::optional<std::size_t> part_a = std::nullopt);

struct MemberCheck {
  bool member = false;
  std::int64_t degree = 0;
  std::optional<std::size_t> violated_row;    // first equation not satisfied
  std::optional<std::size_t> negative_entry;  // first negative coordinate
};

MemberCheck verify_member(const ConeSystem& sys, const Point& p);
// Throws Infeasible when p is not a member; returns its degree otherwise.
std::int64_t require_member(const ConeSystem& sys, const Point& p);

using Square = std::vector<std::vector<std::int64_t>>;
Point flatten(const Square& sq);
Square unflatten(const Point& p, std::size_t n);

Square natural_square_odd(std::size_t n);
Square natural_square_even(std::size_t n);

Point franklin_block_lift(const Point& m8);

using LatinSquare = std::vector<std::vector<int>>;
LatinSquare cube_to_latin_square(const Point& cube, std::size_t n);
Point latin_square_to_cube(const LatinSquare& l);
bool is_latin_square(const LatinSquare& l);

}  // namespace magic
