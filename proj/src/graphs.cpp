#include "magic/graphs.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "magic/hilbert.hpp"

namespace magic {

Graph Graph::make(std::size_t n, bool directed, std::vector<Edge> edges,
                  std::optional<std::size_t> part_a) {
  if (part_a && *part_a > n) throw InvalidArgument("graph: part size exceeds vertex count");
  std::set<Edge> seen;
  for (auto& e : edges) {
    if (e.first >= n || e.second >= n)
      throw InvalidArgument("graph: edge (" + std::to_string(e.first) + "," +
                            std::to_string(e.second) + ") has a vertex out of range");
    if (!directed && e.first > e.second) std::swap(e.first, e.second);
    if (!seen.insert(e).second)
      throw InvalidArgument("graph: parallel edge (" + std::to_string(e.first) + "," +
                            std::to_string(e.second) + ")");
  }
  Graph g;
  g.n = n;
  g.directed = directed;
  g.edges = std::move(edges);
  g.part_a = part_a;
  return g;
}

std::optional<std::size_t> Graph::edge_index(std::size_t a, std::size_t b) const {
  if (!directed && a > b) std::swap(a, b);
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].first == a && edges[i].second == b) return i;
  return std::nullopt;
}

bool Graph::has_loops() const {
  return std::any_of(edges.begin(), edges.end(), [](const Edge& e) { return e.first == e.second; });
}

Graph gamma_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) e.emplace_back(i, j);
  return Graph::make(n, false, std::move(e));
}

Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::make(n, false, std::move(e));
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph::make(a + b, false, std::move(e), a);
}

namespace {

// Outer k-cycle, spokes, inner vertices joined to the one `step` ahead.
Graph generalized_petersen(std::size_t k, std::size_t step) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < k; ++i) {
    e.emplace_back(i, (i + 1) % k);
    e.emplace_back(i, k + i);
    e.emplace_back(k + i, k + (i + step) % k);
  }
  return Graph::make(2 * k, false, std::move(e));
}

}  // namespace

Graph petersen() { return generalized_petersen(5, 2); }

Graph platonic(const std::string& name) {
  if (name == "tetrahedral") return complete(4);
  if (name == "cube") {
    std::vector<Edge> e;
    for (std::size_t v = 0; v < 8; ++v)
      for (std::size_t b = 1; b < 8; b <<= 1)
        if (!(v & b)) e.emplace_back(v, v | b);
    return Graph::make(8, false, std::move(e));
  }
  if (name == "octahedral") {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = i + 1; j < 6; ++j)
        if (i + j != 5) e.emplace_back(i, j);
    return Graph::make(6, false, std::move(e));
  }
  if (name == "dodecahedral") return generalized_petersen(10, 2);
  if (name == "icosahedral") {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < 5; ++i) {
      const std::size_t up = 1 + i, up_next = 1 + (i + 1) % 5;
      const std::size_t lo = 6 + i, lo_next = 6 + (i + 1) % 5;
      e.emplace_back(0, up);
      e.emplace_back(up, up_next);
      e.emplace_back(up, lo);
      e.emplace_back(up, lo_next);
      e.emplace_back(lo, lo_next);
      e.emplace_back(lo, 11);
    }
    return Graph::make(12, false, std::move(e));
  }
  throw InvalidArgument("platonic: unknown solid '" + name +
                        "' (tetrahedral, cube, octahedral, dodecahedral, icosahedral)");
}

Graph pi(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e.emplace_back(i, j);
  return Graph::make(n, true, std::move(e));
}

Graph oriented_octahedron() {
  return Graph::make(6, true,
                     {{1, 0}, {0, 2}, {0, 3}, {4, 0}, {2, 1}, {1, 3},
                      {5, 1}, {2, 4}, {5, 2}, {3, 4}, {3, 5}, {4, 5}});
}

CayleyDigraph cayley_digraph(const std::vector<std::vector<std::size_t>>& table) {
  const std::size_t n = table.size();
  if (n == 0) throw InvalidArgument("cayley_digraph: empty multiplication table");
  for (const auto& row : table) {
    if (row.size() != n) throw InvalidArgument("cayley_digraph: table is not square");
    for (auto v : row)
      if (v >= n) throw InvalidArgument("cayley_digraph: table entry out of range");
  }
  std::optional<std::size_t> e;
  for (std::size_t a = 0; a < n && !e; ++a) {
    bool ok = true;
    for (std::size_t b = 0; b < n && ok; ++b) ok = table[a][b] == b && table[b][a] == b;
    if (ok) e = a;
  }
  if (!e) throw InvalidArgument("cayley_digraph: table has no identity element");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw InvalidArgument("cayley_digraph: table is not associative");
  std::vector<std::size_t> inv(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (table[a][b] == *e && table[b][a] == *e) inv[a] = b;
  for (auto v : inv)
    if (v == n) throw InvalidArgument("cayley_digraph: some element has no inverse");

  CayleyDigraph out;
  out.identity = *e;
  out.label_of.assign(n, n);
  std::size_t next = 1;
  for (std::size_t a = 0; a < n; ++a)
    if (a != *e) out.label_of[a] = next++;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      edges.emplace_back(i, j);
      out.labeling.push_back(static_cast<std::int64_t>(out.label_of[table[j][inv[i]]]));
    }
  out.graph = Graph::make(n, true, std::move(edges));
  return out;
}

Graph digraph_to_bipartite(const Graph& d) {
  if (!d.directed) throw InvalidArgument("digraph_to_bipartite: input must be directed");
  std::vector<Edge> e;
  for (const auto& [i, j] : d.edges) e.emplace_back(i, d.n + j);
  return Graph::make(2 * d.n, false, std::move(e), d.n);
}

Graph bipartite_to_digraph(const Graph& b) {
  if (b.directed) throw InvalidArgument("bipartite_to_digraph: input must be undirected");
  if (!b.part_a) throw InvalidArgument("bipartite_to_digraph: bipartition must be declared");
  const std::size_t a = *b.part_a;
  if (2 * a != b.n)
    throw InvalidArgument("bipartite_to_digraph: parts have sizes " + std::to_string(a) + " and " +
                          std::to_string(b.n - a) + "; equal parts are required");
  std::vector<Edge> e;
  for (const auto& [u, v] : b.edges) {
    if (!(u < a && v >= a))
      throw InvalidArgument("bipartite_to_digraph: edge (" + std::to_string(u) + "," +
                            std::to_string(v) + ") does not cross the bipartition");
    e.emplace_back(u, v - a);
  }
  return Graph::make(a, true, std::move(e));
}

ConeSystem labeling_cone(const Graph& g) { return graph_system(g.n, g.edges, g.directed, g.part_a); }

std::optional<std::int64_t> magic_sum(const Graph& g, const Labeling& l) {
  if (l.size() != g.size())
    throw InvalidArgument("magic_sum: labeling has " + std::to_string(l.size()) +
                          " entries, graph has " + std::to_string(g.size()) + " edges");
  std::vector<std::int64_t> out(g.n, 0), in(g.n, 0);
  for (std::size_t k = 0; k < l.size(); ++k) {
    if (l[k] < 0) return std::nullopt;
    const auto& [a, b] = g.edges[k];
    out[a] += l[k];
    if (g.directed) in[b] += l[k];
    else if (a != b) out[b] += l[k];
  }
  const std::int64_t r = g.n ? out[0] : 0;
  for (std::size_t v = 0; v < g.n; ++v) {
    if (out[v] != r) return std::nullopt;
    if (g.directed && in[v] != r) return std::nullopt;
  }
  return r;
}

std::size_t bipartite_components(const Graph& g) {
  if (g.directed) throw InvalidArgument("bipartite_components: graph must be undirected");
  std::vector<std::vector<std::size_t>> adj(g.n);
  std::vector<bool> loop(g.n, false);
  for (const auto& [a, b] : g.edges) {
    if (a == b) {
      loop[a] = true;
      continue;
    }
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> color(g.n, -1);
  std::size_t count = 0;
  for (std::size_t s = 0; s < g.n; ++s) {
    if (color[s] >= 0) continue;
    bool bip = true;
    std::deque<std::size_t> q{s};
    color[s] = 0;
    while (!q.empty()) {
      auto v = q.front();
      q.pop_front();
      if (loop[v]) bip = false;
      for (auto w : adj[v]) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          q.push_back(w);
        } else if (color[w] == color[v]) {
          bip = false;
        }
      }
    }
    if (bip) ++count;
  }
  return count;
}

std::int64_t dimension_formula(const Graph& g) {
  const auto q = static_cast<std::int64_t>(g.size());
  const auto n = static_cast<std::int64_t>(g.n);
  if (g.directed) return q - 2 * n + static_cast<std::int64_t>(bipartite_components(digraph_to_bipartite(g)));
  return q - n + static_cast<std::int64_t>(bipartite_components(g));
}

std::int64_t dimension(const Graph& g, const Budget& budget) {
  if (!is_positive(g, budget))
    throw InvalidArgument("dimension: graph is not positive; apply positify first");
  return dimension_formula(g);
}

Graph edge_subgraph(const Graph& g, const std::vector<std::size_t>& keep) {
  std::vector<Edge> e;
  for (auto k : keep) {
    if (k >= g.size()) throw InvalidArgument("edge_subgraph: edge index out of range");
    e.push_back(g.edges[k]);
  }
  return Graph::make(g.n, g.directed, std::move(e), g.part_a);
}

namespace {

std::vector<std::size_t> positive_edges(const Graph& g, const Budget& budget) {
  if (g.edges.empty()) return {};
  std::vector<bool> pos(g.size(), false);
  for (const auto& ray : extreme_rays(labeling_cone(g), budget))
    for (std::size_t k = 0; k < ray.size(); ++k)
      if (ray[k] > 0) pos[k] = true;
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < pos.size(); ++k)
    if (pos[k]) out.push_back(k);
  return out;
}

}  // namespace

Graph positify(const Graph& g, const Budget& budget) { return edge_subgraph(g, positive_edges(g, budget)); }

bool is_positive(const Graph& g, const Budget& budget) {
  return positive_edges(g, budget).size() == g.size();
}

std::vector<Labeling> perfect_matchings(const Graph& g, const Budget& budget) {
  if (g.edges.empty()) return {};
  HilbertOptions ho;
  ho.budget = budget;
  auto hb = truncated_hilbert_basis(labeling_cone(g), 1, ho);
  std::vector<Labeling> out;
  for (const auto& e : hb.elements)
    if (e.degree == 1) out.push_back(e.vector);
  return out;
}

std::vector<Labeling> birkhoff_vertices(const Graph& d) {
  if (!d.directed) throw InvalidArgument("birkhoff_vertices: input must be a digraph");
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> out_edges(d.n);
  for (std::size_t k = 0; k < d.size(); ++k) out_edges[d.edges[k].first].emplace_back(d.edges[k].second, k);
  for (auto& v : out_edges) std::sort(v.begin(), v.end());
  std::vector<Labeling> result;
  Labeling cur(d.size(), 0);
  std::vector<bool> used(d.n, false);
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == d.n) {
      result.push_back(cur);
      return;
    }
    for (const auto& [j, k] : out_edges[i]) {
      if (used[j]) continue;
      used[j] = true;
      cur[k] = 1;
      go(i + 1);
      cur[k] = 0;
      used[j] = false;
    }
  };
  go(0);
  std::sort(result.begin(), result.end());
  return result;
}

namespace {

FaceDescriptor describe_face(const Graph& g, std::vector<std::size_t> pos) {
  FaceDescriptor f;
  std::sort(pos.begin(), pos.end());
  std::vector<bool> in(g.size(), false);
  for (auto k : pos) in[k] = true;
  for (std::size_t k = 0; k < g.size(); ++k)
    if (!in[k]) f.zero_edges.push_back(k);
  f.dim = dimension_formula(edge_subgraph(g, pos));
  f.positive_edges = std::move(pos);
  return f;
}

std::vector<FaceDescriptor> all_faces(const Graph& g, const Budget& budget) {
  BudgetClock clock(budget, "faces");
  auto top = positive_edges(g, budget);
  if (top.empty()) return {};
  std::set<std::vector<std::size_t>> seen{top};
  std::deque<std::vector<std::size_t>> queue{top};
  while (!queue.empty()) {
    auto cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t drop = 0; drop < cur.size(); ++drop) {
      clock.tick();
      std::vector<std::size_t> rest;
      for (std::size_t k = 0; k < cur.size(); ++k)
        if (k != drop) rest.push_back(cur[k]);
      auto local = positive_edges(edge_subgraph(g, rest), budget);
      if (local.empty()) continue;
      std::vector<std::size_t> sub;
      for (auto k : local) sub.push_back(rest[k]);
      if (seen.insert(sub).second) queue.push_back(std::move(sub));
    }
    clock.check_elements(seen.size());
  }
  std::vector<FaceDescriptor> out;
  for (const auto& s : seen) out.push_back(describe_face(g, s));
  std::sort(out.begin(), out.end(), [](const FaceDescriptor& a, const FaceDescriptor& b) {
    return a.dim != b.dim ? a.dim > b.dim : a.positive_edges < b.positive_edges;
  });
  return out;
}

bool spanning_balanced_complete_bipartite(const Graph& sub) {
  const Graph u = sub.directed ? digraph_to_bipartite(sub) : sub;
  if (u.n % 2 != 0 || u.has_loops()) return false;
  std::vector<std::vector<std::size_t>> adj(u.n);
  for (const auto& [a, b] : u.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> color(u.n, -1);
  std::deque<std::size_t> q{0};
  color[0] = 0;
  std::size_t reached = 0, side0 = 0;
  while (!q.empty()) {
    auto v = q.front();
    q.pop_front();
    ++reached;
    if (color[v] == 0) ++side0;
    for (auto w : adj[v]) {
      if (color[w] < 0) {
        color[w] = 1 - color[v];
        q.push_back(w);
      } else if (color[w] == color[v]) {
        return false;
      }
    }
  }
  const std::size_t m = u.n / 2;
  return reached == u.n && side0 == m && u.size() == m * m;
}

}  // namespace

std::vector<FaceDescriptor> faces(const Graph& g, std::optional<std::int64_t> dim, const Budget& budget) {
  auto all = all_faces(g, budget);
  if (!dim) return all;
  std::vector<FaceDescriptor> out;
  for (auto& f : all)
    if (f.dim == *dim) out.push_back(std::move(f));
  return out;
}

FacePoset face_poset(const Graph& g, const Budget& budget) {
  FacePoset p;
  p.faces = all_faces(g, budget);
  for (std::size_t i = 0; i < p.faces.size(); ++i)
    for (std::size_t j = 0; j < p.faces.size(); ++j) {
      const auto& a = p.faces[i];
      const auto& b = p.faces[j];
      if (a.dim + 1 != b.dim) continue;
      if (std::includes(b.positive_edges.begin(), b.positive_edges.end(), a.positive_edges.begin(),
                        a.positive_edges.end()))
        p.covers.emplace_back(i, j);
    }
  return p;
}

std::vector<FaceDescriptor> birkhoff_faces(const Graph& g, const Budget& budget) {
  std::vector<FaceDescriptor> out;
  for (auto& f : all_faces(g, budget))
    if (spanning_balanced_complete_bipartite(edge_subgraph(g, f.positive_edges))) out.push_back(std::move(f));
  return out;
}

Labeling lift_labeling(const Graph& g, const Labeling& l) {
  if (!magic_sum(g, l)) throw Infeasible("lift_labeling: labeling is not magic");
  const Graph target = g.directed ? pi(g.n) : gamma_graph(g.n);
  Labeling out(target.size(), 0);
  for (std::size_t k = 0; k < g.size(); ++k)
    out[*target.edge_index(g.edges[k].first, g.edges[k].second)] = l[k];
  return out;
}

Labeling restrict_labeling(const Graph& g, const Labeling& lifted) {
  const Graph target = g.directed ? pi(g.n) : gamma_graph(g.n);
  if (lifted.size() != target.size())
    throw InvalidArgument("restrict_labeling: labeling does not match the complete graph");
  Labeling out(g.size(), 0);
  std::vector<bool> hit(target.size(), false);
  for (std::size_t k = 0; k < g.size(); ++k) {
    auto t = *target.edge_index(g.edges[k].first, g.edges[k].second);
    out[k] = lifted[t];
    hit[t] = true;
  }
  for (std::size_t t = 0; t < target.size(); ++t)
    if (!hit[t] && lifted[t] != 0)
      throw InvalidArgument("restrict_labeling: nonzero label on an edge outside the graph");
  return out;
}

Square symmetric_square(const Labeling& l, std::size_t n) {
  if (l.size() != n * (n + 1) / 2)
    throw InvalidArgument("symmetric_square: labeling does not match gamma(" + std::to_string(n) + ")");
  Square m(n, std::vector<std::int64_t>(n, 0));
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j, ++k) m[i][j] = m[j][i] = l[k];
  return m;
}

Labeling from_symmetric_square(const Square& m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw InvalidArgument("from_symmetric_square: matrix is not square");
    for (std::size_t j = 0; j < i; ++j)
      if (m[i][j] != m[j][i]) throw InvalidArgument("from_symmetric_square: matrix is not symmetric");
  }
  Labeling l;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) l.push_back(m[i][j]);
  return l;
}

}  // namespace magic
