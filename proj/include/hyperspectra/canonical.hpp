#ifndef HYPERSPECTRA_CANONICAL_HPP
#define HYPERSPECTRA_CANONICAL_HPP

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "hyperspectra/errors.hpp"
#include "hyperspectra/hypergraph.hpp"

namespace hyperspectra {

inline constexpr std::size_t kDefaultCanonicalCap = 24;

namespace detail {

// Individualization-refinement canonical labeling. Vertex colors are cell
// ranks; refinement keeps the old rank as the leading sort key so cells only
// ever split in place, which makes the cell order label-invariant.
class Canonicalizer {
 public:
  explicit Canonicalizer(const UniformHypergraph& g) : g_(g), twin_(g.n()) {
    std::map<std::vector<EdgeIndex>, std::uint32_t> classes;
    for (Vertex v = 0; v < g.n(); ++v) {
      auto inc = g.incident(v);
      std::vector<EdgeIndex> key(inc.begin(), inc.end());
      auto [it, inserted] = classes.emplace(std::move(key), static_cast<std::uint32_t>(classes.size()));
      twin_[v] = it->second;
    }
  }

  std::vector<std::uint32_t> run() {
    std::vector<std::uint32_t> colors(g_.n(), 0);
    search(std::move(colors));
    return best_;
  }

 private:
  std::size_t refine(std::vector<std::uint32_t>& colors) const {
    const std::size_t n = g_.n();
    std::size_t cells = count_cells(colors);
    while (true) {
      std::vector<std::vector<std::uint32_t>> sig(n);
      for (Vertex v = 0; v < n; ++v) {
        std::vector<std::vector<std::uint32_t>> around;
        for (EdgeIndex e : g_.incident(v)) {
          std::vector<std::uint32_t> others;
          for (Vertex w : g_.edge(e)) {
            if (w != v) others.push_back(colors[w]);
          }
          std::sort(others.begin(), others.end());
          around.push_back(std::move(others));
        }
        std::sort(around.begin(), around.end());
        sig[v].push_back(colors[v]);
        sig[v].push_back(static_cast<std::uint32_t>(around.size()));
        for (const auto& a : around) sig[v].insert(sig[v].end(), a.begin(), a.end());
      }
      std::vector<Vertex> order(n);
      for (Vertex v = 0; v < n; ++v) order[v] = v;
      std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return sig[a] < sig[b]; });
      std::uint32_t rank = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++rank;
        colors[order[i]] = rank;
      }
      std::size_t now = n == 0 ? 0 : rank + 1;
      if (now == cells) return now;
      cells = now;
    }
  }

  static std::size_t count_cells(const std::vector<std::uint32_t>& colors) {
    std::vector<std::uint32_t> c = colors;
    std::sort(c.begin(), c.end());
    return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
  }

  void search(std::vector<std::uint32_t> colors) {
    const std::size_t cells = refine(colors);
    if (cells == g_.n()) {
      leaf(colors);
      return;
    }
    std::vector<std::size_t> size(cells, 0);
    for (auto c : colors) ++size[c];
    std::uint32_t target = 0;
    while (size[target] < 2) ++target;
    // Twins in the target cell are swapped by an automorphism that fixes the
    // current coloring, so one representative per twin class suffices.
    std::vector<std::uint32_t> seen_twins;
    for (Vertex v = 0; v < g_.n(); ++v) {
      if (colors[v] != target) continue;
      if (std::find(seen_twins.begin(), seen_twins.end(), twin_[v]) != seen_twins.end()) continue;
      seen_twins.push_back(twin_[v]);
      std::vector<std::uint32_t> next(colors.size());
      for (Vertex w = 0; w < g_.n(); ++w) next[w] = 2 * colors[w] + (w == v ? 0 : 1);
      search(std::move(next));
    }
  }

  void leaf(const std::vector<std::uint32_t>& label) {
    std::vector<std::vector<std::uint32_t>> edges;
    edges.reserve(g_.num_edges());
    for (const Edge& e : g_.edges()) {
      std::vector<std::uint32_t> mapped;
      for (Vertex v : e) mapped.push_back(label[v]);
      std::sort(mapped.begin(), mapped.end());
      edges.push_back(std::move(mapped));
    }
    std::sort(edges.begin(), edges.end());
    std::vector<std::uint32_t> flat;
    for (const auto& e : edges) flat.insert(flat.end(), e.begin(), e.end());
    if (!have_best_ || flat < best_) {
      best_ = std::move(flat);
      have_best_ = true;
    }
  }

  const UniformHypergraph& g_;
  std::vector<std::uint32_t> twin_;
  std::vector<std::uint32_t> best_;
  bool have_best_ = false;
};

}  // namespace detail

/// Byte string that is equal for two hypergraphs iff they are isomorphic.
inline std::string canonical_form(const UniformHypergraph& g, std::size_t cap = kDefaultCanonicalCap) {
  if (g.n() > cap) {
    throw CapacityError("canonical_form: n=" + std::to_string(g.n()) + " exceeds cap " + std::to_string(cap));
  }
  const auto flat = detail::Canonicalizer(g).run();
  std::string out = "k" + std::to_string(g.k()) + "n" + std::to_string(g.n()) + ":";
  const std::size_t k = static_cast<std::size_t>(g.k());
  for (std::size_t i = 0; i < flat.size(); ++i) {
    out += std::to_string(flat[i]);
    out += (i + 1) % k == 0 ? (i + 1 == flat.size() ? "" : "|") : ".";
  }
  return out;
}

inline bool are_isomorphic(const UniformHypergraph& a, const UniformHypergraph& b,
                           std::size_t cap = kDefaultCanonicalCap) {
  if (a.k() != b.k() || a.n() != b.n() || a.num_edges() != b.num_edges()) {
    // Still enforce the cap so the error contract does not depend on shape.
    if (a.n() > cap || b.n() > cap) throw CapacityError("are_isomorphic: instance exceeds cap");
    return false;
  }
  return canonical_form(a, cap) == canonical_form(b, cap);
}

/// 64-bit FNV-1a of a canonical form, as 16 hex digits.
inline std::string canonical_hash(const std::string& form) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : form) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace hyperspectra

#endif  // HYPERSPECTRA_CANONICAL_HPP
