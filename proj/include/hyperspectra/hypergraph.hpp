#ifndef HYPERSPECTRA_HYPERGRAPH_HPP
#define HYPERSPECTRA_HYPERGRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyperspectra/errors.hpp"

namespace hyperspectra {

using Vertex = std::uint32_t;
using EdgeIndex = std::size_t;
using Edge = std::vector<Vertex>;

/// A simple k-uniform hypergraph on vertices 0..n-1.
///
/// Storage is canonical: each edge is sorted ascending and the edge list is
/// sorted lexicographically, so two objects with the same edge set compare
/// equal. Instances are immutable once constructed.
class UniformHypergraph {
 public:
  /// Validates and canonicalizes. Rejects edges of the wrong size, repeated
  /// or out-of-range vertices, multiple edges and isolated vertices.
  UniformHypergraph(int k, std::size_t n, std::vector<Edge> edges)
      : UniformHypergraph(k, n, std::move(edges), true) {}

  /// Same validation but isolated vertices are kept. Used by transformations
  /// whose output may strand a vertex; callers decide what to do with it.
  static UniformHypergraph allowing_isolated(int k, std::size_t n, std::vector<Edge> edges) {
    return UniformHypergraph(k, n, std::move(edges), false);
  }

  int k() const noexcept { return k_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeIndex e) const { return edges_.at(e); }

  /// Indices of the edges containing v, ascending.
  std::span<const EdgeIndex> incident(Vertex v) const {
    check_vertex(v);
    return incidence_[v];
  }

  std::size_t degree(Vertex v) const { return incident(v).size(); }

  bool contains(EdgeIndex e, Vertex v) const {
    const Edge& ed = edges_.at(e);
    return std::binary_search(ed.begin(), ed.end(), v);
  }

  /// Index of the edge with exactly this vertex set, if present.
  std::optional<EdgeIndex> find_edge(Edge vertices) const {
    std::sort(vertices.begin(), vertices.end());
    auto it = std::lower_bound(edges_.begin(), edges_.end(), vertices);
    if (it == edges_.end() || *it != vertices) return std::nullopt;
    return static_cast<EdgeIndex>(it - edges_.begin());
  }

  void check_vertex(Vertex v) const {
    if (v >= n_) {
      throw InputError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
    }
  }

  friend bool operator==(const UniformHypergraph& a, const UniformHypergraph& b) {
    return a.k_ == b.k_ && a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  UniformHypergraph(int k, std::size_t n, std::vector<Edge> edges, bool reject_isolated)
      : k_(k), n_(n), edges_(std::move(edges)) {
    if (k_ < 2) throw InputError("uniformity k must be at least 2");
    for (Edge& e : edges_) {
      if (e.size() != static_cast<std::size_t>(k_)) {
        throw InputError("edge of size " + std::to_string(e.size()) + " in a " + std::to_string(k_) +
                         "-uniform hypergraph");
      }
      std::sort(e.begin(), e.end());
      if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
        throw InputError("edge repeats a vertex");
      }
      if (e.back() >= n_) throw InputError("edge vertex out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
      throw StructureError("multiple edges are not allowed");
    }
    incidence_.assign(n_, {});
    for (EdgeIndex i = 0; i < edges_.size(); ++i) {
      for (Vertex v : edges_[i]) incidence_[v].push_back(i);
    }
    if (reject_isolated) {
      for (Vertex v = 0; v < n_; ++v) {
        if (incidence_[v].empty()) throw InputError("vertex " + std::to_string(v) + " is isolated");
      }
    }
  }

  int k_;
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeIndex>> incidence_;
};

/// Pairwise disjoint edges of a host, by index into host.edges().
struct Matching {
  std::vector<EdgeIndex> edges;
  bool perfect = false;
};

inline std::size_t degree(const UniformHypergraph& g, Vertex v) { return g.degree(v); }

inline bool is_core(const UniformHypergraph& g, Vertex v) { return g.degree(v) == 1; }

/// An edge with exactly one vertex of degree >= 2.
inline bool is_pendent_edge(const UniformHypergraph& g, EdgeIndex e) {
  std::size_t intersection = 0;
  for (Vertex v : g.edge(e)) {
    if (g.degree(v) >= 2) ++intersection;
  }
  return intersection == 1;
}

inline bool is_linear(const UniformHypergraph& g) {
  for (Vertex v = 0; v < g.n(); ++v) {
    auto inc = g.incident(v);
    for (std::size_t a = 0; a < inc.size(); ++a) {
      for (std::size_t b = a + 1; b < inc.size(); ++b) {
        const Edge& e1 = g.edge(inc[a]);
        const Edge& e2 = g.edge(inc[b]);
        std::size_t shared = 0;
        std::size_t i = 0, j = 0;
        while (i < e1.size() && j < e2.size()) {
          if (e1[i] == e2[j]) {
            ++shared;
            ++i;
            ++j;
          } else if (e1[i] < e2[j]) {
            ++i;
          } else {
            ++j;
          }
        }
        if (shared > 1) return false;
      }
    }
  }
  return true;
}

namespace detail {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }

  std::vector<std::size_t> parent;
};

}  // namespace detail

/// Maximal connected vertex sets, each sorted, ordered by smallest member.
inline std::vector<std::vector<Vertex>> connected_components(const UniformHypergraph& g) {
  detail::DisjointSets sets(g.n());
  for (const Edge& e : g.edges()) {
    for (std::size_t i = 1; i < e.size(); ++i) sets.unite(e[0], e[i]);
  }
  std::vector<std::vector<Vertex>> parts;
  std::vector<std::size_t> slot(g.n(), SIZE_MAX);
  for (Vertex v = 0; v < g.n(); ++v) {
    std::size_t root = sets.find(v);
    if (slot[root] == SIZE_MAX) {
      slot[root] = parts.size();
      parts.emplace_back();
    }
    parts[slot[root]].push_back(v);
  }
  return parts;
}

inline bool is_connected(const UniformHypergraph& g) { return connected_components(g).size() == 1; }

/// a(k-1) - n + omega. Equals 1 exactly for unicyclic hypergraphs.
inline long long cyclomatic_number(const UniformHypergraph& g) {
  const auto a = static_cast<long long>(g.num_edges());
  const auto n = static_cast<long long>(g.n());
  const auto omega = static_cast<long long>(connected_components(g).size());
  return a * (g.k() - 1) - n + omega;
}

/// The unique cycle v_0 e_1 v_1 ... e_l v_0 of the vertex/edge incidence graph.
/// edges[i] joins vertices[i] and vertices[(i+1) % l]. A C_2 has l = 2.
struct IncidenceCycle {
  std::vector<Vertex> vertices;
  std::vector<EdgeIndex> edges;

  std::size_t length() const { return edges.size(); }
};

/// Returns the unique incidence cycle, nothing for acyclic hosts, and throws
/// UnsupportedStructureError when more than one independent cycle exists.
inline std::optional<IncidenceCycle> unique_cycle(const UniformHypergraph& g) {
  const long long r = cyclomatic_number(g);
  if (r == 0) return std::nullopt;
  if (r > 1) {
    throw UnsupportedStructureError("host has " + std::to_string(r) + " independent cycles");
  }
  // Incidence graph nodes: vertices 0..n-1, edges n..n+a-1. Peel leaves.
  const std::size_t n = g.n();
  const std::size_t total = n + g.num_edges();
  std::vector<std::size_t> deg(total);
  std::vector<bool> removed(total, false);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) deg[n + e] = g.edge(e).size();
  std::vector<std::size_t> stack;
  for (std::size_t node = 0; node < total; ++node) {
    if (deg[node] <= 1) stack.push_back(node);
  }
  while (!stack.empty()) {
    std::size_t node = stack.back();
    stack.pop_back();
    if (removed[node]) continue;
    removed[node] = true;
    auto touch = [&](std::size_t other) {
      if (!removed[other] && --deg[other] <= 1) stack.push_back(other);
    };
    if (node < n) {
      for (EdgeIndex e : g.incident(static_cast<Vertex>(node))) touch(n + e);
    } else {
      for (Vertex v : g.edge(node - n)) touch(v);
    }
  }
  IncidenceCycle cycle;
  Vertex start = 0;
  while (start < n && removed[start]) ++start;
  if (start == n) throw UnsupportedStructureError("no incidence cycle found");
  Vertex current = start;
  std::optional<EdgeIndex> previous;
  do {
    cycle.vertices.push_back(current);
    EdgeIndex next_edge = SIZE_MAX;
    for (EdgeIndex e : g.incident(current)) {
      if (!removed[n + e] && (!previous || e != *previous)) {
        next_edge = e;
        break;
      }
    }
    cycle.edges.push_back(next_edge);
    Vertex next = current;
    for (Vertex w : g.edge(next_edge)) {
      if (w != current && !removed[w]) {
        next = w;
        break;
      }
    }
    previous = next_edge;
    current = next;
  } while (current != start);
  return cycle;
}

/// Checks that m is a perfect matching of g. Throws InputError otherwise.
inline void require_perfect(const UniformHypergraph& g, const Matching& m) {
  std::vector<bool> covered(g.n(), false);
  for (EdgeIndex e : m.edges) {
    for (Vertex v : g.edge(e)) {
      if (covered[v]) throw InputError("matching edges are not disjoint");
      covered[v] = true;
    }
  }
  if (!std::all_of(covered.begin(), covered.end(), [](bool c) { return c; })) {
    throw InputError("matching does not cover every vertex");
  }
  if (!m.perfect) throw InputError("matching is not flagged perfect");
}

/// Backtracking exact-cover search: branch on the lowest uncovered vertex and
/// try its incident edges in canonical order.
inline std::optional<Matching> find_perfect_matching(const UniformHypergraph& g) {
  const std::size_t k = static_cast<std::size_t>(g.k());
  if (g.n() % k != 0) return std::nullopt;
  std::vector<bool> covered(g.n(), false);
  std::vector<EdgeIndex> chosen;
  auto search = [&](auto&& self, Vertex from) -> bool {
    Vertex v = from;
    while (v < g.n() && covered[v]) ++v;
    if (v == g.n()) return true;
    for (EdgeIndex e : g.incident(v)) {
      const Edge& ed = g.edge(e);
      if (std::any_of(ed.begin(), ed.end(), [&](Vertex w) { return covered[w]; })) continue;
      for (Vertex w : ed) covered[w] = true;
      chosen.push_back(e);
      if (self(self, v + 1)) return true;
      chosen.pop_back();
      for (Vertex w : ed) covered[w] = false;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return Matching{std::move(chosen), true};
}

/// The hypergraph induced by E(G) - M with the stranded vertices dropped.
/// Surviving vertices keep their relative order.
inline UniformHypergraph capped_hypergraph(const UniformHypergraph& g, const Matching& m) {
  require_perfect(g, m);
  std::vector<bool> in_matching(g.num_edges(), false);
  for (EdgeIndex e : m.edges) in_matching[e] = true;
  std::vector<Vertex> relabel(g.n(), 0);
  std::vector<bool> kept(g.n(), false);
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
    if (in_matching[e]) continue;
    for (Vertex v : g.edge(e)) kept[v] = true;
  }
  Vertex next = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (kept[v]) relabel[v] = next++;
  }
  std::vector<Edge> edges;
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
    if (in_matching[e]) continue;
    Edge mapped;
    for (Vertex v : g.edge(e)) mapped.push_back(relabel[v]);
    edges.push_back(std::move(mapped));
  }
  return UniformHypergraph(g.k(), next, std::move(edges));
}

/// Applies a vertex permutation: vertex v becomes perm[v].
inline UniformHypergraph relabel(const UniformHypergraph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.n()) throw InputError("permutation length mismatch");
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const Edge& e : g.edges()) {
    Edge mapped;
    for (Vertex v : e) mapped.push_back(perm[v]);
    edges.push_back(std::move(mapped));
  }
  return UniformHypergraph::allowing_isolated(g.k(), g.n(), std::move(edges));
}

}  // namespace hyperspectra

#endif  // HYPERSPECTRA_HYPERGRAPH_HPP
