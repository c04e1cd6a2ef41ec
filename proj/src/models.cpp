#include "magic/models.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "magic/errors.hpp"

namespace magic {

namespace {

const std::array<std::pair<Family, const char*>, 12> kFamilyNames{{
    {Family::Magic, "magic"},
    {Family::SemiMagic, "semi-magic"},
    {Family::Pandiagonal, "pandiagonal"},
    {Family::Franklin8, "franklin8"},
    {Family::Franklin16, "franklin16"},
    {Family::PandiagonalFranklin8, "pandiagonal-franklin8"},
    {Family::MagicCube, "magic-cube"},
    {Family::SemiMagicHypercube, "semi-magic-hypercube"},
    {Family::GraphLabeling, "graph-labeling"},
    {Family::DigraphLabeling, "digraph-labeling"},
    {Family::SymmetricMagic, "symmetric-magic"},
    {Family::PandiagonalSymmetric, "pandiagonal-symmetric"},
}};

// Accumulates equations of the form  sum_k weight_k * y_k - reference = 0.
class EquationBuilder {
 public:
  EquationBuilder(std::size_t vars, std::vector<std::size_t> reference)
      : vars_(vars), reference_(std::move(reference)), m_(0, vars) {}

  void equal_to_reference(const std::vector<std::size_t>& cells, long weight = 1) {
    std::vector<long> row(vars_, 0);
    for (auto c : cells) row[c] += weight;
    for (auto c : reference_) row[c] -= 1;
    m_.append_row(to_int_vector(row));
  }

  void raw(const std::vector<long>& row) { m_.append_row(to_int_vector(row)); }

  IntMatrix take() { return std::move(m_); }

  std::vector<std::int64_t> grading() const {
    std::vector<std::int64_t> w(vars_, 0);
    for (auto c : reference_) w[c] += 1;
    return w;
  }

 private:
  std::size_t vars_;
  std::vector<std::size_t> reference_;
  IntMatrix m_;
};

std::size_t cell(std::size_t n, std::size_t i, std::size_t j) { return i * n + j; }

std::vector<std::size_t> row_cells(std::size_t n, std::size_t i, std::size_t from, std::size_t to) {
  std::vector<std::size_t> out;
  for (std::size_t j = from; j < to; ++j) out.push_back(cell(n, i, j));
  return out;
}

std::vector<std::size_t> col_cells(std::size_t n, std::size_t j, std::size_t from, std::size_t to) {
  std::vector<std::size_t> out;
  for (std::size_t i = from; i < to; ++i) out.push_back(cell(n, i, j));
  return out;
}

void add_rows_cols(EquationBuilder& b, std::size_t n) {
  for (std::size_t i = 1; i < n; ++i) b.equal_to_reference(row_cells(n, i, 0, n));
  for (std::size_t j = 0; j < n; ++j) b.equal_to_reference(col_cells(n, j, 0, n));
}

void add_main_diagonals(EquationBuilder& b, std::size_t n) {
  std::vector<std::size_t> d1, d2;
  for (std::size_t i = 0; i < n; ++i) {
    d1.push_back(cell(n, i, i));
    d2.push_back(cell(n, i, n - 1 - i));
  }
  b.equal_to_reference(d1);
  b.equal_to_reference(d2);
}

void add_wrapped_diagonals(EquationBuilder& b, std::size_t n) {
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::size_t> d;
    for (std::size_t i = 0; i < n; ++i) d.push_back(cell(n, i, (i + c) % n));
    b.equal_to_reference(d);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::size_t> d;
    for (std::size_t i = 0; i < n; ++i) d.push_back(cell(n, i, (c + n - i % n) % n));
    b.equal_to_reference(d);
  }
}

void add_symmetry(EquationBuilder& b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<long> row(n * n, 0);
      row[cell(n, i, j)] = 1;
      row[cell(n, j, i)] = -1;
      b.raw(row);
    }
  }
}

// V-shaped bent diagonals, toroidal. A V with a vertical axis translates along rows, one with a
// horizontal axis along columns.
std::vector<std::vector<std::size_t>> bent_diagonals(std::size_t n) {
  const std::size_t h = n / 2;
  std::vector<std::vector<std::size_t>> out;
  for (int dir = 0; dir < 4; ++dir) {
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<std::size_t> cells;
      for (std::size_t t = 0; t < h; ++t) {
        const std::size_t near = (c + t) % n;
        const std::size_t far = (c + n - 1 - t) % n;
        switch (dir) {
          case 0:  // apex pointing down
            cells.push_back(cell(n, near, t));
            cells.push_back(cell(n, near, n - 1 - t));
            break;
          case 1:  // apex pointing up
            cells.push_back(cell(n, far, t));
            cells.push_back(cell(n, far, n - 1 - t));
            break;
          case 2:  // apex pointing right
            cells.push_back(cell(n, t, near));
            cells.push_back(cell(n, n - 1 - t, near));
            break;
          default:  // apex pointing left
            cells.push_back(cell(n, t, far));
            cells.push_back(cell(n, n - 1 - t, far));
            break;
        }
      }
      out.push_back(cells);
    }
  }
  return out;
}

ConeSystem franklin_system(Family family, std::size_t n) {
  const std::size_t h = n / 2;
  EquationBuilder b(n * n, row_cells(n, 0, 0, n));
  add_rows_cols(b, n);
  for (std::size_t i = 0; i < n; ++i) b.equal_to_reference(row_cells(n, i, 0, h), 2);
  for (std::size_t j = 0; j < n; ++j) b.equal_to_reference(col_cells(n, j, 0, h), 2);
  for (const auto& bent : bent_diagonals(n)) b.equal_to_reference(bent);
  // 2x2 blocks: half the sum for n = 8, a quarter for n = 16 (as twice a block against a half-row).
  const auto first_half = row_cells(n, 0, 0, h);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> blk{cell(n, i, j), cell(n, i, (j + 1) % n),
                                   cell(n, (i + 1) % n, j), cell(n, (i + 1) % n, (j + 1) % n)};
      if (n == 16) {
        std::vector<long> row(n * n, 0);
        for (auto c : blk) row[c] += 2;
        for (auto c : first_half) row[c] -= 1;
        b.raw(row);
      } else {
        b.equal_to_reference(blk, 2);
      }
    }
  }
  if (family == Family::PandiagonalFranklin8) add_wrapped_diagonals(b, n);
  ConeSystem sys;
  sys.family = family;
  sys.params.n = n;
  sys.grading = b.grading();
  sys.matrix = b.take();
  sys.shape.kind = ShapeKind::Square;
  sys.shape.n = n;
  return sys;
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

// Cells of the axis-parallel line through `base` along `axis` in an n^d array.
std::vector<std::size_t> axis_line(std::size_t n, std::size_t d, std::vector<std::size_t> base,
                                   std::size_t axis) {
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < n; ++t) {
    base[axis] = t;
    std::size_t idx = 0;
    for (std::size_t k = 0; k < d; ++k) idx = idx * n + base[k];
    out.push_back(idx);
  }
  return out;
}

// All axis-parallel lines; the first one is the line along the last axis through the origin.
std::vector<std::vector<std::size_t>> hypercube_lines(std::size_t n, std::size_t d) {
  std::vector<std::vector<std::size_t>> lines;
  for (std::size_t axis = d; axis-- > 0;) {
    const std::size_t count = ipow(n, d - 1);
    for (std::size_t code = 0; code < count; ++code) {
      std::vector<std::size_t> base(d, 0);
      std::size_t rest = code;
      for (std::size_t k = d; k-- > 0;) {
        if (k == axis) continue;
        base[k] = rest % n;
        rest /= n;
      }
      lines.push_back(axis_line(n, d, base, axis));
    }
  }
  return lines;
}

ConeSystem hypercube_system(Family family, std::size_t n, std::size_t d) {
  auto lines = hypercube_lines(n, d);
  EquationBuilder b(ipow(n, d), lines.front());
  for (std::size_t k = 1; k < lines.size(); ++k) b.equal_to_reference(lines[k]);
  if (family == Family::MagicCube) {
    for (int mask = 0; mask < 4; ++mask) {
      std::vector<std::size_t> diag;
      for (std::size_t t = 0; t < n; ++t) {
        std::size_t i = t;
        std::size_t j = (mask & 1) ? n - 1 - t : t;
        std::size_t k = (mask & 2) ? n - 1 - t : t;
        diag.push_back((i * n + j) * n + k);
      }
      b.equal_to_reference(diag);
    }
  }
  ConeSystem sys;
  sys.family = family;
  sys.params.n = n;
  sys.params.d = d;
  sys.grading = b.grading();
  sys.matrix = b.take();
  sys.shape.kind = ShapeKind::Hypercube;
  sys.shape.n = n;
  sys.shape.d = d;
  return sys;
}

}  // namespace

std::string family_name(Family f) {
  for (const auto& [fam, name] : kFamilyNames)
    if (fam == f) return name;
  return "unknown";
}

Family family_from_name(const std::string& name) {
  for (const auto& [fam, nm] : kFamilyNames)
    if (name == nm) return fam;
  throw InvalidArgument("unknown family '" + name + "'");
}

std::size_t Shape::size() const {
  switch (kind) {
    case ShapeKind::Square:
      return n * n;
    case ShapeKind::Hypercube:
      return ipow(n, d);
    case ShapeKind::Graph:
      return edges.size();
  }
  return 0;
}

std::int64_t ConeSystem::degree(const Point& p) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < grading.size(); ++i) s += grading[i] * p[i];
  return s;
}

std::vector<std::vector<std::int64_t>> ConeSystem::small_matrix() const {
  std::vector<std::vector<std::int64_t>> out(matrix.rows());
  for (std::size_t i = 0; i < matrix.rows(); ++i) out[i] = to_i64_vector(matrix.row(i));
  return out;
}

ConeSystem build_system(Family family, const Params& params) {
  const std::size_t n = params.n;
  switch (family) {
    case Family::Magic:
    case Family::SemiMagic:
    case Family::Pandiagonal:
    case Family::SymmetricMagic:
    case Family::PandiagonalSymmetric: {
      if (n < 1) throw InvalidArgument("build_system: n must be at least 1");
      EquationBuilder b(n * n, row_cells(n, 0, 0, n));
      add_rows_cols(b, n);
      if (family == Family::Magic) add_main_diagonals(b, n);
      if (family == Family::Pandiagonal || family == Family::PandiagonalSymmetric)
        add_wrapped_diagonals(b, n);
      if (family == Family::SymmetricMagic || family == Family::PandiagonalSymmetric)
        add_symmetry(b, n);
      ConeSystem sys;
      sys.family = family;
      sys.params.n = n;
      sys.grading = b.grading();
      sys.matrix = b.take();
      sys.shape.kind = ShapeKind::Square;
      sys.shape.n = n;
      return sys;
    }
    case Family::Franklin8:
    case Family::PandiagonalFranklin8:
      if (n != 0 && n != 8) throw InvalidArgument("build_system: franklin8 requires n = 8");
      return franklin_system(family, 8);
    case Family::Franklin16:
      if (n != 0 && n != 16) throw InvalidArgument("build_system: franklin16 requires n = 16");
      return franklin_system(family, 16);
    case Family::MagicCube:
      if (n < 1) throw InvalidArgument("build_system: n must be at least 1");
      if (params.d != 0 && params.d != 3)
        throw InvalidArgument("build_system: magic-cube is three-dimensional");
      return hypercube_system(family, n, 3);
    case Family::SemiMagicHypercube:
      if (n < 1 || params.d < 1)
        throw InvalidArgument("build_system: semi-magic-hypercube needs n >= 1 and d >= 1");
      return hypercube_system(family, n, params.d);
    case Family::GraphLabeling:
    case Family::DigraphLabeling:
      throw InvalidArgument("build_system: graph families are built from a graph (see graph_system)");
  }
  throw InvalidArgument("build_system: unsupported family");
}

ConeSystem graph_system(std::size_t vertices,
                        const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                        bool directed, std::optional<std::size_t> part_a) {
  if (vertices == 0) throw InvalidArgument("graph_system: graph has no vertices");
  const std::size_t q = edges.size();
  for (const auto& [a, z] : edges)
    if (a >= vertices || z >= vertices) throw InvalidArgument("graph_system: vertex out of range");
  auto out_sum = [&](std::size_t v) {
    std::vector<long> row(q, 0);
    for (std::size_t e = 0; e < q; ++e) {
      const auto& [a, z] = edges[e];
      if (directed) {
        if (a == v) row[e] = 1;
      } else if (a == v || z == v) {
        row[e] = 1;
      }
    }
    return row;
  };
  auto in_sum = [&](std::size_t v) {
    std::vector<long> row(q, 0);
    for (std::size_t e = 0; e < q; ++e)
      if (edges[e].second == v) row[e] = 1;
    return row;
  };
  const auto ref = out_sum(0);
  IntMatrix m(0, q);
  auto push_diff = [&](const std::vector<long>& r) {
    std::vector<long> row(q);
    for (std::size_t e = 0; e < q; ++e) row[e] = r[e] - ref[e];
    m.append_row(to_int_vector(row));
  };
  for (std::size_t v = 1; v < vertices; ++v) push_diff(out_sum(v));
  if (directed)
    for (std::size_t v = 0; v < vertices; ++v) push_diff(in_sum(v));
  ConeSystem sys;
  sys.family = directed ? Family::DigraphLabeling : Family::GraphLabeling;
  sys.params.n = vertices;
  sys.matrix = std::move(m);
  sys.grading.assign(ref.begin(), ref.end());
  sys.shape.kind = ShapeKind::Graph;
  sys.shape.n = vertices;
  sys.shape.directed = directed;
  sys.shape.edges = edges;
  sys.shape.part_a = part_a;
  return sys;
}

MemberCheck verify_member(const ConeSystem& sys, const Point& p) {
  if (p.size() != sys.variables())
    throw InvalidArgument("verify_member: vector has " + std::to_string(p.size()) +
                          " entries, system has " + std::to_string(sys.variables()) + " variables");
  MemberCheck out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0) {
      out.negative_entry = i;
      return out;
    }
  }
  const auto& m = sys.matrix;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer acc = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (p[c] != 0 && sgn(m.at(r, c)) != 0) acc += m.at(r, c) * Integer(static_cast<long>(p[c]));
    }
    if (sgn(acc) != 0) {
      out.violated_row = r;
      return out;
    }
  }
  out.member = true;
  out.degree = sys.degree(p);
  return out;
}

std::int64_t require_member(const ConeSystem& sys, const Point& p) {
  auto chk = verify_member(sys, p);
  if (chk.member) return chk.degree;
  if (chk.negative_entry)
    throw Infeasible("not a member: negative entry at index " + std::to_string(*chk.negative_entry));
  throw Infeasible("not a member: equation " + std::to_string(*chk.violated_row) + " violated");
}

Point flatten(const Square& sq) {
  Point p;
  for (const auto& r : sq) {
    if (r.size() != sq.size()) throw InvalidArgument("flatten: square expected");
    p.insert(p.end(), r.begin(), r.end());
  }
  return p;
}

Square unflatten(const Point& p, std::size_t n) {
  if (p.size() != n * n) throw InvalidArgument("unflatten: size mismatch");
  Square sq(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sq[i][j] = p[i * n + j];
  return sq;
}

Square natural_square_odd(std::size_t n) {
  if (n % 2 == 0) throw InvalidArgument("natural_square_odd: n must be odd");
  // Numbers run along diagonals of a diamond; cells outside the central square wrap by n.
  Square sq(n, std::vector<std::int64_t>(n, 0));
  const std::size_t off = (n - 1) / 2;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t row = j + (n - 1) - i;
      std::size_t col = i + j;
      std::size_t r = (row + n - off) % n;
      std::size_t c = (col + n - off) % n;
      sq[r][c] = static_cast<std::int64_t>(i * n + j + 1);
    }
  }
  return sq;
}

Square natural_square_even(std::size_t n) {
  if (n == 0 || n % 4 != 0) throw InvalidArgument("natural_square_even: n must be divisible by 4");
  const auto total = static_cast<std::int64_t>(n * n + 1);
  Square sq(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto e = static_cast<std::int64_t>(i * n + j + 1);
      const std::size_t a = i % 4;
      const std::size_t b = j % 4;
      const bool on_diagonal = (a == b) || (a + b == 3);
      sq[i][j] = on_diagonal ? e : total - e;
    }
  }
  return sq;
}

Point franklin_block_lift(const Point& m8) {
  static const ConeSystem f8 = build_system(Family::Franklin8, {8, 0});
  const std::int64_t s = require_member(f8, m8);
  if (s % 2 != 0) throw InvalidArgument("franklin_block_lift: magic sum must be even");
  Point out(256);
  for (std::size_t i = 0; i < 16; ++i)
    for (std::size_t j = 0; j < 16; ++j) out[i * 16 + j] = m8[(i % 8) * 8 + (j % 8)];
  return out;
}

LatinSquare cube_to_latin_square(const Point& cube, std::size_t n) {
  if (cube.size() != n * n * n) throw InvalidArgument("latin square bijection: size mismatch");
  LatinSquare l(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> used(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      int found = -1;
      for (std::size_t k = 0; k < n; ++k) {
        auto v = cube[(i * n + j) * n + k];
        if (v != 0 && v != 1) throw InvalidArgument("latin square bijection: entries must be 0/1");
        if (v == 1) {
          if (found >= 0) throw InvalidArgument("latin square bijection: slice is not a permutation");
          found = static_cast<int>(k);
        }
      }
      if (found < 0 || used[static_cast<std::size_t>(found)])
        throw InvalidArgument("latin square bijection: slice is not a permutation");
      used[static_cast<std::size_t>(found)] = true;
      l[i][j] = found + 1;
    }
  }
  return l;
}

Point latin_square_to_cube(const LatinSquare& l) {
  if (!is_latin_square(l)) throw InvalidArgument("latin_square_to_cube: not a latin square");
  const std::size_t n = l.size();
  Point cube(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      cube[(i * n + j) * n + static_cast<std::size_t>(l[i][j] - 1)] = 1;
  return cube;
}

bool is_latin_square(const LatinSquare& l) {
  const std::size_t n = l.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (l[i].size() != n) return false;
    std::vector<bool> row(n + 1, false), col(n + 1, false);
    for (std::size_t j = 0; j < n; ++j) {
      int a = l[i][j], b = l[j][i];
      if (a < 1 || b < 1 || a > static_cast<int>(n) || b > static_cast<int>(n)) return false;
      if (row[static_cast<std::size_t>(a)] || col[static_cast<std::size_t>(b)]) return false;
      row[static_cast<std::size_t>(a)] = col[static_cast<std::size_t>(b)] = true;
    }
  }
  return true;
}

}  // namespace magic
