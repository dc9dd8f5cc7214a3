// Independent reference implementations used only by the tests.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hyperspectra/hyperspectra.hpp"

namespace oracle {

using hyperspectra::Edge;
using hyperspectra::UniformHypergraph;
using hyperspectra::Vertex;

// Dense adjacency tensor: entry 1/(k-1)! at every ordering of every edge.
// (Ax)_i = sum over all (k-1)-tuples (i2..ik) of a[i][i2..ik] x_i2 ... x_ik.
inline std::vector<double> dense_apply(const UniformHypergraph& g, const std::vector<double>& x) {
  const int k = g.k();
  const std::size_t n = g.n();
  double fact = 1.0;
  for (int j = 2; j < k; ++j) fact *= j;
  std::map<std::vector<Vertex>, double> tensor;
  for (const Edge& e : g.edges()) {
    std::vector<Vertex> p = e;
    std::sort(p.begin(), p.end());
    do {
      tensor[p] = 1.0 / fact;
    } while (std::next_permutation(p.begin(), p.end()));
  }
  std::vector<double> y(n, 0.0);
  std::vector<Vertex> idx(static_cast<std::size_t>(k), 0);
  // Walk every index tuple in [0, n)^k.
  while (true) {
    auto it = tensor.find(idx);
    if (it != tensor.end()) {
      double p = it->second;
      for (int j = 1; j < k; ++j) p *= x[idx[static_cast<std::size_t>(j)]];
      y[idx[0]] += p;
    }
    int pos = k - 1;
    while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == n) idx[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) break;
  }
  return y;
}

// Every 3-edge hypergraph on 6 vertices (k = 3) that is connected,
// unicyclic and has a perfect matching, as a set of canonical forms. No
// matching-first shortcut, no symmetry breaking.
inline std::set<std::string> brute_force_6_3() {
  std::vector<Edge> all;
  for (Vertex a = 0; a < 6; ++a)
    for (Vertex b = a + 1; b < 6; ++b)
      for (Vertex c = b + 1; c < 6; ++c) all.push_back({a, b, c});
  std::set<std::string> forms;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      for (std::size_t l = j + 1; l < all.size(); ++l) {
        std::vector<Edge> edges{all[i], all[j], all[l]};
        std::vector<bool> used(6, false);
        for (const auto& e : edges)
          for (Vertex v : e) used[v] = true;
        if (std::find(used.begin(), used.end(), false) != used.end()) continue;
        UniformHypergraph g(3, 6, edges);
        if (!hyperspectra::is_connected(g) || hyperspectra::cyclomatic_number(g) != 1) continue;
        if (!hyperspectra::find_perfect_matching(g)) continue;
        forms.insert(hyperspectra::canonical_form(g));
      }
  return forms;
}

// Matching-first enumeration without symmetry breaking: blocks fixed, every
// choice of the m extra edges tried. Feasible for (12, 3).
inline std::set<std::string> naive_matching_first(std::size_t n, int k) {
  const std::size_t kk = static_cast<std::size_t>(k);
  const std::size_t blocks = n / kk;
  const std::size_t m = n / (kk * (kk - 1));
  std::vector<Edge> candidates;
  std::vector<Vertex> pick(kk);
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + static_cast<long>(kk), true);
  do {
    Edge e;
    for (Vertex v = 0; v < n; ++v)
      if (mask[v]) e.push_back(v);
    if (e.front() / kk != e.back() / kk) candidates.push_back(e);
  } while (std::prev_permutation(mask.begin(), mask.end()));
  std::vector<Edge> base;
  for (std::size_t b = 0; b < blocks; ++b) {
    Edge e(kk);
    std::iota(e.begin(), e.end(), static_cast<Vertex>(b * kk));
    base.push_back(e);
  }
  std::set<std::string> forms;
  std::vector<std::size_t> choice;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (choice.size() == m) {
      std::vector<Edge> edges = base;
      for (auto c : choice) edges.push_back(candidates[c]);
      UniformHypergraph g(k, n, edges);
      if (hyperspectra::is_connected(g)) forms.insert(hyperspectra::canonical_form(g));
      return;
    }
    for (std::size_t c = from; c < candidates.size(); ++c) {
      choice.push_back(c);
      self(self, c + 1);
      choice.pop_back();
    }
  };
  rec(rec, 0);
  return forms;
}

inline std::vector<Vertex> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Random connected k-uniform hypertree with `edges` edges: each new edge
// shares exactly one vertex with the current tree.
inline UniformHypergraph random_hypertree(std::size_t edges, int k, std::mt19937_64& rng) {
  std::vector<Edge> out;
  Vertex next = 0;
  Edge first;
  for (int j = 0; j < k; ++j) first.push_back(next++);
  out.push_back(first);
  for (std::size_t i = 1; i < edges; ++i) {
    std::uniform_int_distribution<Vertex> pick(0, next - 1);
    Edge e{pick(rng)};
    for (int j = 1; j < k; ++j) e.push_back(next++);
    out.push_back(e);
  }
  return UniformHypergraph(k, next, out);
}

}  // namespace oracle
