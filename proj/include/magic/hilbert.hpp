#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "magic/errors.hpp"
#include "magic/models.hpp"

namespace magic {

enum class BasisKind { Minimal, Truncated };

struct HilbertBasis {
  ConeSystem system;
  BasisKind kind = BasisKind::Minimal;
  std::int64_t dmax = 0;                // meaningful for truncated bases
  std::vector<LatticePoint> elements;   // lexicographically sorted

  std::size_t size() const { return elements.size(); }
  std::int64_t max_degree() const;
  std::vector<Point> vectors() const;
  std::map<std::int64_t, std::size_t> degree_histogram() const;
};

struct HilbertOptions {
  Budget budget;
};

HilbertBasis hilbert_basis(const ConeSystem& sys, const HilbertOptions& opts = {});
HilbertBasis truncated_hilbert_basis(const ConeSystem& sys, std::int64_t dmax,
                                     const HilbertOptions& opts = {});
// Independent strategy: enumerate members degree by degree and keep those not dominated by a
// smaller basis element. Complete only up to dmax.
HilbertBasis hilbert_basis_by_degree(const ConeSystem& sys, std::int64_t dmax,
                                     const HilbertOptions& opts = {});

std::vector<Point> extreme_rays(const ConeSystem& sys, const Budget& budget = {});
std::size_t cone_dimension(const ConeSystem& sys);

bool is_irreducible(const ConeSystem& sys, const Point& p, const Budget& budget = {});

struct Decomposition {
  std::map<std::size_t, std::int64_t> coefficients;  // element index -> multiplicity
};
std::optional<Decomposition> decompose(const Point& p, const HilbertBasis& hb,
                                       const Budget& budget = {});
Point recombine(const Decomposition& d, const HilbertBasis& hb);

// Componentwise-minimal elements of a set of nonnegative vectors.
std::vector<Point> minimal_elements(std::vector<Point> pts);

}  // namespace magic
