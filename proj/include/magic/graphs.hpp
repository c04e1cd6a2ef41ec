#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "magic/errors.hpp"
#include "magic/models.hpp"

namespace magic {

using Edge = std::pair<std::size_t, std::size_t>;

// Simple graph or digraph with optional loops. Undirected edges are stored with first <= second.
struct Graph {
  std::size_t n = 0;
  bool directed = false;
  std::vector<Edge> edges;
  std::optional<std::size_t> part_a;  // vertices [0, part_a) form one side of a bipartition

  static Graph make(std::size_t n, bool directed, std::vector<Edge> edges,
                    std::optional<std::size_t> part_a = std::nullopt);
  std::size_t size() const { return edges.size(); }
  std::optional<std::size_t> edge_index(std::size_t a, std::size_t b) const;
  bool has_loops() const;
  bool operator==(const Graph&) const = default;
};

// Labels are parallel to Graph::edges.
using Labeling = std::vector<std::int64_t>;

Graph gamma_graph(std::size_t n);  // K_n with a loop at every vertex
Graph complete(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph petersen();
// tetrahedral, cube, octahedral, dodecahedral, icosahedral
Graph platonic(const std::string& name);
Graph pi(std::size_t n);  // complete digraph with a loop at every vertex
// Octahedron with the fixed orientation whose labeling count is r + 1.
Graph oriented_octahedron();

struct CayleyDigraph {
  Graph graph;                     // all ordered pairs of distinct elements
  Labeling labeling;               // edge g_i -> g_j carries alpha with g_alpha = g_j g_i^{-1}
  std::vector<std::size_t> label_of;  // element index -> generator label (identity -> n)
  std::size_t identity = 0;
};
// table[a][b] is the index of the product a*b. The table must define a group.
CayleyDigraph cayley_digraph(const std::vector<std::vector<std::size_t>>& table);

Graph digraph_to_bipartite(const Graph& d);
Graph bipartite_to_digraph(const Graph& b);

ConeSystem labeling_cone(const Graph& g);
std::optional<std::int64_t> magic_sum(const Graph& g, const Labeling& l);

// Components of an undirected graph that are bipartite; isolated vertices count.
std::size_t bipartite_components(const Graph& g);
// q - n + b, or q - 2n + b for digraphs with b taken from the bipartite graph of the digraph.
std::int64_t dimension(const Graph& g, const Budget& budget = {});
std::int64_t dimension_formula(const Graph& g);

// Subgraph of the edges that are positive in some magic labeling.
Graph positify(const Graph& g, const Budget& budget = {});
bool is_positive(const Graph& g, const Budget& budget = {});
Graph edge_subgraph(const Graph& g, const std::vector<std::size_t>& keep);

std::vector<Labeling> perfect_matchings(const Graph& g, const Budget& budget = {});
std::vector<Labeling> birkhoff_vertices(const Graph& d);

struct FaceDescriptor {
  std::vector<std::size_t> zero_edges;      // edges of g that vanish on the face
  std::vector<std::size_t> positive_edges;  // complement: the positive subgraph
  std::int64_t dim = 0;
  bool operator==(const FaceDescriptor&) const = default;
};

// Nonempty faces of the polytope of magic labelings of sum 1, sorted by (dim desc, edges).
std::vector<FaceDescriptor> faces(const Graph& g, std::optional<std::int64_t> dim = std::nullopt,
                                  const Budget& budget = {});

struct FacePoset {
  std::vector<FaceDescriptor> faces;
  std::vector<std::pair<std::size_t, std::size_t>> covers;  // (smaller, larger)
};
FacePoset face_poset(const Graph& g, const Budget& budget = {});

// Faces whose positive subgraph is a spanning K_{m,m}.
std::vector<FaceDescriptor> birkhoff_faces(const Graph& g, const Budget& budget = {});

// Extends a magic labeling of g by zeros to gamma_graph(n), or to pi(n) for digraphs.
Labeling lift_labeling(const Graph& g, const Labeling& l);
Labeling restrict_labeling(const Graph& g, const Labeling& lifted);

Square symmetric_square(const Labeling& l, std::size_t n);
Labeling from_symmetric_square(const Square& m);

}  // namespace magic
