#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "magic/errors.hpp"
#include "magic/linalg.hpp"
#include "magic/models.hpp"

namespace magic {

struct EnumOptions {
  Budget budget;
  unsigned threads = 1;
  // Optional componentwise upper bounds on the members searched.
  std::optional<Point> upper;
};

// Depth-first lattice-point search over {y >= 0 : Ay = 0, w.y = s}. The system is solved for a set
// of pivot coordinates in terms of free ones; each node tightens the free-variable intervals by
// bounds propagation on the nonnegativity of the pivot coordinates.
class PointEnumerator {
 public:
  explicit PointEnumerator(const ConeSystem& sys);

  Integer count(std::int64_t s, const EnumOptions& opts = {}) const;
  // Calls visit for each member of degree s; stops early when visit returns false.
  void enumerate(std::int64_t s, const std::function<bool(const Point&)>& visit,
                 const EnumOptions& opts = {}) const;
  std::vector<Point> points(std::int64_t s, const EnumOptions& opts = {}) const;

  std::size_t free_count() const { return free_.size(); }

 private:
  struct Dependent {
    std::size_t var;
    std::int64_t rhs;  // coefficient of s
    std::int64_t den;
    std::vector<std::pair<std::size_t, std::int64_t>> terms;  // (free index, coefficient)
  };
  struct Search;

  std::size_t vars_ = 0;
  bool consistent_ = true;  // false when w lies in the row space of A (only s = 0 feasible)
  std::vector<std::size_t> free_;
  std::vector<Dependent> deps_;
  std::vector<std::vector<std::size_t>> deps_of_free_;
};

Integer count_points(const ConeSystem& sys, std::int64_t s, const EnumOptions& opts = {});
std::vector<Point> enumerate_points(const ConeSystem& sys, std::int64_t s,
                                    const EnumOptions& opts = {});

}  // namespace magic
