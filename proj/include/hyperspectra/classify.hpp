#ifndef HYPERSPECTRA_CLASSIFY_HPP
#define HYPERSPECTRA_CLASSIFY_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hyperspectra/errors.hpp"
#include "hyperspectra/hypergraph.hpp"

namespace hyperspectra {

enum class CycleKind { Other, Linear, Nonlinear };

inline std::string to_string(CycleKind k) {
  switch (k) {
    case CycleKind::Linear: return "U";
    case CycleKind::Nonlinear: return "Gamma";
    case CycleKind::Other: return "other";
  }
  return "other";
}

/// Membership in the unicyclic-with-perfect-matching classes. The "bar"
/// subclasses are the normal forms the extremal arguments reduce to.
struct ClassTags {
  bool U1 = false, U2 = false;
  bool U1bar = false, U2bar = false, U21bar = false, U22bar = false;
  bool G1 = false, G2 = false;
  bool G1bar = false, G11bar = false, G12bar = false, G2bar = false;

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    auto add = [&](bool on, const char* name) {
      if (on) out.emplace_back(name);
    };
    add(U1, "U1");
    add(U2, "U2");
    add(U1bar, "U1bar");
    add(U2bar, "U2bar");
    add(U21bar, "U21bar");
    add(U22bar, "U22bar");
    add(G1, "G1");
    add(G2, "G2");
    add(G1bar, "G1bar");
    add(G11bar, "G11bar");
    add(G12bar, "G12bar");
    add(G2bar, "G2bar");
    return out;
  }

  friend bool operator==(const ClassTags&, const ClassTags&) = default;
};

struct ClassLabel {
  CycleKind kind = CycleKind::Other;
  std::size_t cycle_length = 0;
  std::size_t pm_edges_on_cycle = 0;
  ClassTags tags;

  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

namespace detail {

class CycleNeighborhood {
 public:
  CycleNeighborhood(const UniformHypergraph& g, const IncidenceCycle& c) : g_(g), on_cycle_(g.num_edges(), false) {
    for (EdgeIndex e : c.edges) on_cycle_[e] = true;
  }

  // Edges in the component of v once the cycle edges are deleted.
  std::size_t hanging_edges(Vertex v) const {
    std::vector<bool> seen_edge(g_.num_edges(), false);
    std::vector<bool> seen_vertex(g_.n(), false);
    std::vector<Vertex> stack{v};
    seen_vertex[v] = true;
    std::size_t count = 0;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (EdgeIndex e : g_.incident(x)) {
        if (on_cycle_[e] || seen_edge[e]) continue;
        seen_edge[e] = true;
        ++count;
        for (Vertex y : g_.edge(e)) {
          if (!seen_vertex[y]) {
            seen_vertex[y] = true;
            stack.push_back(y);
          }
        }
      }
    }
    return count;
  }

  // Attached by a hypertree with at least k edges.
  bool big_tree(Vertex v) const { return hanging_edges(v) >= static_cast<std::size_t>(g_.k()); }

  // Some edge off the cycle is a pendent edge at v.
  bool has_pendent(Vertex v) const {
    for (EdgeIndex e : g_.incident(v)) {
      if (on_cycle_[e]) continue;
      const Edge& ed = g_.edge(e);
      if (std::all_of(ed.begin(), ed.end(), [&](Vertex w) { return w == v || g_.degree(w) == 1; })) return true;
    }
    return false;
  }

  bool all_core(const std::vector<Vertex>& vs) const {
    return std::all_of(vs.begin(), vs.end(), [&](Vertex v) { return g_.degree(v) == 1; });
  }
  bool all_pendent(const std::vector<Vertex>& vs) const {
    return std::all_of(vs.begin(), vs.end(), [&](Vertex v) { return has_pendent(v); });
  }
  std::size_t count_big(const std::vector<Vertex>& vs) const {
    return static_cast<std::size_t>(std::count_if(vs.begin(), vs.end(), [&](Vertex v) { return big_tree(v); }));
  }

 private:
  const UniformHypergraph& g_;
  std::vector<bool> on_cycle_;
};

inline std::vector<Vertex> minus(const Edge& e, std::initializer_list<Vertex> drop) {
  std::vector<Vertex> out;
  for (Vertex v : e) {
    if (std::find(drop.begin(), drop.end(), v) == drop.end()) out.push_back(v);
  }
  return out;
}

inline std::vector<Vertex> union_minus(const Edge& a, const Edge& b, std::initializer_list<Vertex> drop) {
  std::set<Vertex> s(a.begin(), a.end());
  s.insert(b.begin(), b.end());
  for (Vertex v : drop) s.erase(v);
  return {s.begin(), s.end()};
}

}  // namespace detail

/// Classifies a connected unicyclic hypergraph relative to the perfect
/// matching m. The cycle is found on the vertex/edge incidence graph; l = 2
/// means the two cycle edges share two vertices.
inline ClassLabel classify(const UniformHypergraph& g, const Matching& m) {
  if (!is_connected(g)) throw ClassificationError("classify: hypergraph is not connected");
  if (cyclomatic_number(g) != 1) throw ClassificationError("classify: cyclomatic number is not 1");
  require_perfect(g, m);

  const IncidenceCycle cycle = *unique_cycle(g);
  const detail::CycleNeighborhood hood(g, cycle);
  std::vector<bool> matched(g.num_edges(), false);
  for (EdgeIndex e : m.edges) matched[e] = true;

  ClassLabel label;
  label.cycle_length = cycle.length();
  for (EdgeIndex e : cycle.edges) label.pm_edges_on_cycle += matched[e] ? 1 : 0;
  ClassTags& t = label.tags;

  if (cycle.length() >= 3) {
    label.kind = CycleKind::Linear;
    t.U1 = label.pm_edges_on_cycle == 0;
    t.U2 = !t.U1;
    if (cycle.length() != 3) return label;
    std::vector<Vertex> all;
    for (EdgeIndex e : cycle.edges) all.insert(all.end(), g.edge(e).begin(), g.edge(e).end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    const std::vector<Vertex> hubs = cycle.vertices;
    if (t.U1) {
      t.U1bar = hood.all_pendent(all) && hood.count_big(hubs) <= 1;
      return label;
    }
    // Any matching edge of the cycle may play e1.
    for (std::size_t i = 0; i < 3; ++i) {
      if (!matched[cycle.edges[i]]) continue;
      const Vertex a = cycle.vertices[i];
      const Vertex b = cycle.vertices[(i + 1) % 3];
      const Vertex c = cycle.vertices[(i + 2) % 3];
      const Edge& e1 = g.edge(cycle.edges[i]);
      const Edge& e2 = g.edge(cycle.edges[(i + 1) % 3]);
      const Edge& e3 = g.edge(cycle.edges[(i + 2) % 3]);
      const auto side = detail::union_minus(e2, e3, {a, b});
      const auto interior = detail::union_minus(e2, e3, {a, b, c});
      const bool normal = hood.all_core(detail::minus(e1, {a, b})) && hood.all_pendent(side) &&
                          hood.count_big({a, b, c}) <= 1 && hood.count_big(interior) == 0;
      if (!normal) continue;
      t.U2bar = true;
      if (!hood.big_tree(c)) t.U21bar = true;
      if (!hood.big_tree(a) && !hood.big_tree(b)) t.U22bar = true;
    }
    return label;
  }

  label.kind = CycleKind::Nonlinear;
  const Vertex u1 = cycle.vertices[0];
  const Vertex u2 = cycle.vertices[1];
  t.G2 = label.pm_edges_on_cycle == 0;
  t.G1 = label.pm_edges_on_cycle == 1;
  if (t.G2) {
    std::vector<Vertex> all =
        detail::union_minus(g.edge(cycle.edges[0]), g.edge(cycle.edges[1]), {});
    t.G2bar = hood.all_pendent(all) && hood.count_big({u1, u2}) <= 1;
  } else if (t.G1) {
    const bool first = matched[cycle.edges[0]];
    const Edge& et1 = g.edge(cycle.edges[first ? 0 : 1]);
    const Edge& et2 = g.edge(cycle.edges[first ? 1 : 0]);
    const auto inner2 = detail::minus(et2, {u1, u2});
    std::vector<Vertex> whole2(et2.begin(), et2.end());
    t.G1bar = hood.all_core(detail::minus(et1, {u1, u2})) && hood.all_pendent(inner2) &&
              hood.count_big(whole2) <= 1;
    if (t.G1bar) {
      t.G11bar = hood.count_big(inner2) == 0;
      t.G12bar = !hood.big_tree(u1) && !hood.big_tree(u2);
    }
  }
  return label;
}

/// classify() against a perfect matching found by search.
inline ClassLabel classify(const UniformHypergraph& g) {
  if (!is_connected(g)) throw ClassificationError("classify: hypergraph is not connected");
  if (cyclomatic_number(g) != 1) throw ClassificationError("classify: cyclomatic number is not 1");
  auto m = find_perfect_matching(g);
  if (!m) throw ClassificationError("classify: no perfect matching");
  return classify(g, *m);
}

}  // namespace hyperspectra

#endif  // HYPERSPECTRA_CLASSIFY_HPP
