#ifndef HYPERSPECTRA_FAMILIES_HPP
#define HYPERSPECTRA_FAMILIES_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperspectra/errors.hpp"
#include "hyperspectra/hypergraph.hpp"

namespace hyperspectra {

enum class Family { S, CLinear, C2, A, B, D, I, J, L };

inline std::string to_string(Family f) {
  switch (f) {
    case Family::S: return "S";
    case Family::CLinear: return "C";
    case Family::C2: return "C2";
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::D: return "D";
    case Family::I: return "I";
    case Family::J: return "J";
    case Family::L: return "L";
  }
  return "?";
}

inline Family parse_family(std::string_view s) {
  static const std::pair<std::string_view, Family> table[] = {
      {"S", Family::S}, {"C", Family::CLinear}, {"C_linear", Family::CLinear}, {"C2", Family::C2},
      {"A", Family::A}, {"B", Family::B},       {"D", Family::D},              {"I", Family::I},
      {"J", Family::J}, {"L", Family::L}};
  for (const auto& [name, f] : table) {
    if (name == s) return f;
  }
  throw InputError("unknown family '" + std::string(s) + "'");
}

/// Family plus its size parameter: a for S, l for C, m for A/B/D/I/J/L and
/// unused for C2.
struct FamilySpec {
  Family family = Family::L;
  int size = 2;
  int k = 3;
};

/// Smallest legal size parameter for each family.
inline int min_size(Family f) {
  switch (f) {
    case Family::S: return 1;
    case Family::CLinear: return 3;
    case Family::C2: return 0;
    case Family::A: return 3;
    case Family::B:
    case Family::D:
    case Family::L: return 2;
    case Family::I:
    case Family::J: return 1;
  }
  return 0;
}

inline void validate(const FamilySpec& spec) {
  if (spec.k < 3) throw InputError("families require k >= 3");
  if (spec.family != Family::C2 && spec.size < min_size(spec.family)) {
    throw InputError("family " + to_string(spec.family) + " requires size parameter >= " +
                     std::to_string(min_size(spec.family)) + ", got " + std::to_string(spec.size));
  }
}

/// A hypergraph together with the named vertices and edges of its
/// construction. Vertex names follow the figures: v1, v1_1 (v_{1,1}), u0,
/// u2_1 (u_{2,1}); star branch i is edge g<i>; the pendent edge hung at x is
/// p(x) with core vertices x'1 ... x'(k-1).
struct LabeledHypergraph {
  UniformHypergraph graph;
  std::vector<std::string> vertex_names;       // index -> name
  std::map<std::string, Vertex> labels;        // name -> index
  std::map<std::string, EdgeIndex> edge_labels;  // name -> index
  std::optional<Matching> matching;

  Vertex vertex(const std::string& name) const {
    auto it = labels.find(name);
    if (it == labels.end()) throw InputError("no vertex named '" + name + "'");
    return it->second;
  }

  EdgeIndex edge(const std::string& name) const {
    auto it = edge_labels.find(name);
    if (it == edge_labels.end()) throw InputError("no edge named '" + name + "'");
    return it->second;
  }

  std::string edge_name(EdgeIndex e) const {
    for (const auto& [name, idx] : edge_labels) {
      if (idx == e) return name;
    }
    throw InputError("edge has no name");
  }
};

namespace detail {

class LabeledBuilder {
 public:
  explicit LabeledBuilder(int k) : k_(k) {}

  static LabeledBuilder from(const LabeledHypergraph& g) {
    LabeledBuilder b(g.graph.k());
    for (const auto& name : g.vertex_names) b.add_vertex(name);
    std::vector<std::pair<EdgeIndex, std::string>> by_index;
    for (const auto& [name, idx] : g.edge_labels) by_index.emplace_back(idx, name);
    std::sort(by_index.begin(), by_index.end());
    for (const auto& [idx, name] : by_index) b.add_edge(name, g.graph.edge(idx));
    return b;
  }

  int k() const { return k_; }
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::pair<std::string, Edge>>& edges() const { return edges_; }

  bool has_vertex(const std::string& name) const { return index_.count(name) != 0; }
  bool has_edge(const std::string& name) const {
    return std::any_of(edges_.begin(), edges_.end(), [&](const auto& p) { return p.first == name; });
  }

  Vertex add_vertex(const std::string& name) {
    if (has_vertex(name)) throw InputError("duplicate vertex name '" + name + "'");
    Vertex v = static_cast<Vertex>(names_.size());
    names_.push_back(name);
    index_[name] = v;
    return v;
  }

  Vertex at(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw InputError("no vertex named '" + name + "'");
    return it->second;
  }

  void add_edge(const std::string& name, Edge vertices) {
    if (has_edge(name)) throw InputError("duplicate edge name '" + name + "'");
    edges_.emplace_back(name, std::move(vertices));
  }

  void set_matching(std::vector<std::string> edge_names) { matching_ = std::move(edge_names); }

  LabeledHypergraph finish() const {
    std::vector<Edge> raw;
    for (const auto& [name, e] : edges_) raw.push_back(e);
    UniformHypergraph g(k_, names_.size(), std::move(raw));
    LabeledHypergraph out{std::move(g), names_, index_, {}, std::nullopt};
    for (const auto& [name, e] : edges_) out.edge_labels[name] = *out.graph.find_edge(e);
    if (matching_) {
      Matching m;
      for (const auto& name : *matching_) m.edges.push_back(out.edge_labels.at(name));
      std::sort(m.edges.begin(), m.edges.end());
      m.perfect = true;
      require_perfect(out.graph, m);
      out.matching = std::move(m);
    }
    return out;
  }

 private:
  int k_;
  std::vector<std::string> names_;
  std::map<std::string, Vertex> index_;
  std::vector<std::pair<std::string, Edge>> edges_;
  std::optional<std::vector<std::string>> matching_;
};

inline std::string pendent_name(const std::string& at) { return "p(" + at + ")"; }

// Adds a pendent edge at `at`, naming fresh vertices after it.
inline std::string add_pendent(LabeledBuilder& b, const std::string& at) {
  std::string edge = pendent_name(at);
  std::string stem = at;
  for (int copy = 2; b.has_edge(edge); ++copy) {
    edge = pendent_name(at) + "#" + std::to_string(copy);
    stem = at + "#" + std::to_string(copy);
  }
  Edge e{b.at(at)};
  for (int j = 1; j < b.k(); ++j) e.push_back(b.add_vertex(stem + "'" + std::to_string(j)));
  b.add_edge(edge, std::move(e));
  return edge;
}

}  // namespace detail

/// a edges sharing only u0.
inline LabeledHypergraph build_star(int a, int k) {
  if (a < 1 || k < 2) throw InputError("build_star requires a >= 1 and k >= 2");
  detail::LabeledBuilder b(k);
  Vertex center = b.add_vertex("u0");
  for (int i = 1; i <= a; ++i) {
    Edge e{center};
    for (int j = 1; j < k; ++j) e.push_back(b.add_vertex("s" + std::to_string(i) + "_" + std::to_string(j)));
    b.add_edge("g" + std::to_string(i), std::move(e));
  }
  return b.finish();
}

/// C_l = v1 e1 v2 e2 ... vl el v1 with e_i = {v_i, v_{i,1}, ..., v_{i,k-2}, v_{i+1}}.
inline LabeledHypergraph build_linear_cycle(int l, int k) {
  if (l < 3 || k < 3) throw InputError("build_linear_cycle requires l >= 3 and k >= 3");
  detail::LabeledBuilder b(k);
  for (int i = 1; i <= l; ++i) {
    b.add_vertex("v" + std::to_string(i));
    for (int j = 1; j <= k - 2; ++j) b.add_vertex("v" + std::to_string(i) + "_" + std::to_string(j));
  }
  for (int i = 1; i <= l; ++i) {
    const std::string vi = "v" + std::to_string(i);
    Edge e{b.at(vi)};
    for (int j = 1; j <= k - 2; ++j) e.push_back(b.at(vi + "_" + std::to_string(j)));
    e.push_back(b.at("v" + std::to_string(i == l ? 1 : i + 1)));
    b.add_edge("e" + std::to_string(i), std::move(e));
  }
  return b.finish();
}

/// Two edges et1 = {u1, u1_*, u2} and et2 = {u1, u2_*, u2} sharing exactly u1, u2.
inline LabeledHypergraph build_c2(int k) {
  if (k < 3) throw InputError("build_c2 requires k >= 3");
  detail::LabeledBuilder b(k);
  Vertex u1 = b.add_vertex("u1");
  std::vector<Vertex> inner1, inner2;
  for (int j = 1; j <= k - 2; ++j) inner1.push_back(b.add_vertex("u1_" + std::to_string(j)));
  Vertex u2 = b.add_vertex("u2");
  for (int j = 1; j <= k - 2; ++j) inner2.push_back(b.add_vertex("u2_" + std::to_string(j)));
  Edge e1{u1, u2}, e2{u1, u2};
  e1.insert(e1.end(), inner1.begin(), inner1.end());
  e2.insert(e2.end(), inner2.begin(), inner2.end());
  b.add_edge("et1", std::move(e1));
  b.add_edge("et2", std::move(e2));
  return b.finish();
}

/// G(v, w)H: disjoint union with w identified into v. The merged vertex keeps
/// v's name; H names that collide with G names get an "h." prefix.
inline LabeledHypergraph coalesce(const LabeledHypergraph& g, const std::string& v, const LabeledHypergraph& h,
                                  const std::string& w) {
  if (g.graph.k() != h.graph.k()) throw InputError("coalesce: uniformity mismatch");
  const Vertex gv = g.vertex(v);
  const Vertex hw = h.vertex(w);
  auto b = detail::LabeledBuilder::from(g);
  std::vector<Vertex> map(h.graph.n());
  for (Vertex x = 0; x < h.graph.n(); ++x) {
    if (x == hw) {
      map[x] = gv;
      continue;
    }
    std::string name = h.vertex_names[x];
    while (b.has_vertex(name)) name = "h." + name;
    map[x] = b.add_vertex(name);
  }
  for (const auto& [name, idx] : h.edge_labels) {
    std::string ename = name;
    while (b.has_edge(ename)) ename = "h." + ename;
    Edge e;
    for (Vertex x : h.graph.edge(idx)) e.push_back(map[x]);
    b.add_edge(ename, std::move(e));
  }
  return b.finish();
}

/// New edge containing v and k-1 fresh vertices.
inline LabeledHypergraph attach_pendent(const LabeledHypergraph& g, const std::string& v) {
  auto b = detail::LabeledBuilder::from(g);
  detail::add_pendent(b, g.vertex_names.at(g.vertex(v)));
  return b.finish();
}

namespace detail {

// base(v, u0)S_{a,k}; a = 0 leaves the base unchanged.
inline LabeledHypergraph with_star(const LabeledHypergraph& base, const std::string& at, int a, int k) {
  if (a == 0) return base;
  return coalesce(base, at, build_star(a, k), "u0");
}

// Attach one pendent edge at every vertex of `base` outside `excluded_edge`,
// then record matching = pendents + the optional excluded cycle edge.
inline LabeledHypergraph pendents_everywhere(const LabeledHypergraph& base, const std::string& excluded_edge) {
  auto b = LabeledBuilder::from(base);
  std::set<Vertex> skip;
  if (!excluded_edge.empty()) {
    for (Vertex x : base.graph.edge(base.edge(excluded_edge))) skip.insert(x);
  }
  std::vector<std::string> matching;
  if (!excluded_edge.empty()) matching.push_back(excluded_edge);
  for (Vertex x = 0; x < base.graph.n(); ++x) {
    if (skip.count(x)) continue;
    matching.push_back(add_pendent(b, base.vertex_names[x]));
  }
  b.set_matching(std::move(matching));
  return b.finish();
}

}  // namespace detail

/// Builds a named family member. For A..L, n = m k (k-1) and the canonical
/// perfect matching is recorded.
inline LabeledHypergraph build_family(const FamilySpec& spec) {
  validate(spec);
  const int k = spec.k;
  const int m = spec.size;
  switch (spec.family) {
    case Family::S: return build_star(m, k);
    case Family::CLinear: return build_linear_cycle(m, k);
    case Family::C2: return build_c2(k);
    case Family::A:
      return detail::pendents_everywhere(detail::with_star(build_linear_cycle(3, k), "v1", m - 3, k), "");
    case Family::B:
      return detail::pendents_everywhere(detail::with_star(build_linear_cycle(3, k), "v1", m - 2, k), "e1");
    case Family::D:
      return detail::pendents_everywhere(detail::with_star(build_linear_cycle(3, k), "v1", m - 2, k), "e2");
    case Family::I:
      return detail::pendents_everywhere(detail::with_star(build_c2(k), "u1", m - 1, k), "et1");
    case Family::J:
      return detail::pendents_everywhere(detail::with_star(build_c2(k), "u2_1", m - 1, k), "et1");
    case Family::L:
      return detail::pendents_everywhere(detail::with_star(build_c2(k), "u1", m - 2, k), "");
  }
  throw InputError("unhandled family");
}

inline LabeledHypergraph build_family(Family f, int size, int k) { return build_family(FamilySpec{f, size, k}); }

/// Output of an edge move. The edge list may contain duplicates or strand a
/// vertex; the flags report it and the caller decides.
struct MoveResult {
  int k = 0;
  std::size_t n = 0;
  std::vector<Edge> edges;  // same order as the source edge list
  bool has_multiple_edges = false;
  bool has_isolated = false;
  bool connected = false;

  /// Throws StructureError when the move produced multiple edges.
  UniformHypergraph graph() const {
    if (has_multiple_edges) throw StructureError("edge move produced multiple edges");
    return UniformHypergraph::allowing_isolated(k, n, edges);
  }
};

namespace detail {

inline MoveResult finish_move(const UniformHypergraph& g, std::vector<Edge> edges) {
  MoveResult r;
  r.k = g.k();
  r.n = g.n();
  for (Edge& e : edges) std::sort(e.begin(), e.end());
  std::vector<Edge> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  r.has_multiple_edges = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
  DisjointSets sets(g.n());
  std::vector<bool> touched(g.n(), false);
  for (const Edge& e : edges) {
    for (Vertex v : e) touched[v] = true;
    for (std::size_t i = 1; i < e.size(); ++i) sets.unite(e[0], e[i]);
  }
  r.has_isolated = std::find(touched.begin(), touched.end(), false) != touched.end();
  std::size_t roots = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (sets.find(v) == v) ++roots;
  }
  r.connected = roots == 1;
  r.edges = std::move(edges);
  return r;
}

}  // namespace detail

/// Moves edges[i] from from[i] to `to`: e_i becomes (e_i \ {from_i}) + {to}.
inline MoveResult move_edges(const UniformHypergraph& g, const std::vector<EdgeIndex>& edges,
                             const std::vector<Vertex>& from, Vertex to) {
  if (edges.size() != from.size()) throw InputError("move_edges: edge and vertex lists differ in length");
  g.check_vertex(to);
  std::set<EdgeIndex> distinct(edges.begin(), edges.end());
  if (distinct.size() != edges.size()) throw InputError("move_edges: an edge is listed twice");
  std::vector<Edge> out = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i] >= g.num_edges()) throw InputError("move_edges: edge index out of range");
    if (g.contains(edges[i], to)) throw InputError("move_edges: target vertex already lies in the edge");
    if (!g.contains(edges[i], from[i])) throw InputError("move_edges: source vertex not in the edge");
    Edge& e = out[edges[i]];
    *std::find(e.begin(), e.end(), from[i]) = to;
  }
  return detail::finish_move(g, std::move(out));
}

/// Edge-releasing on a non-pendent edge e at u: every other edge meeting e
/// and avoiding u is moved onto u from its (smallest) shared vertex.
inline MoveResult edge_release_move(const UniformHypergraph& g, EdgeIndex e, Vertex u) {
  if (e >= g.num_edges()) throw InputError("edge_release: edge index out of range");
  if (!g.contains(e, u)) throw InputError("edge_release: vertex not in the edge");
  if (is_pendent_edge(g, e)) throw InputError("edge_release: edge is pendent");
  std::vector<EdgeIndex> moved;
  std::vector<Vertex> from;
  for (Vertex w : g.edge(e)) {
    if (w == u) continue;
    for (EdgeIndex f : g.incident(w)) {
      if (f == e || g.contains(f, u)) continue;
      if (std::find(moved.begin(), moved.end(), f) != moved.end()) continue;
      moved.push_back(f);
      from.push_back(w);
    }
  }
  return move_edges(g, moved, from, u);
}

inline UniformHypergraph edge_release(const UniformHypergraph& g, EdgeIndex e, Vertex u) {
  MoveResult r = edge_release_move(g, e, u);
  if (r.has_multiple_edges) throw StructureError("edge_release: result has multiple edges");
  return r.graph();
}

}  // namespace hyperspectra

#endif  // HYPERSPECTRA_FAMILIES_HPP
