#include <random>

#include <gtest/gtest.h>

#include "hyperspectra/hyperspectra.hpp"
#include "oracles.hpp"

using namespace hyperspectra;

namespace {

UniformHypergraph single_edge() { return UniformHypergraph(3, 3, {{0, 1, 2}}); }

}  // namespace

TEST(Hypergraph, StorageIsCanonical) {
  UniformHypergraph g(3, 5, {{4, 3, 2}, {2, 0, 1}});
  ASSERT_EQ(g.num_edges(), 2u);
  EXPECT_EQ(g.edge(0), (Edge{0, 1, 2}));
  EXPECT_EQ(g.edge(1), (Edge{2, 3, 4}));
}

TEST(Hypergraph, RejectsMalformedInput) {
  EXPECT_THROW(UniformHypergraph(3, 3, {{0, 1}}), InputError);
  EXPECT_THROW(UniformHypergraph(3, 3, {{0, 1, 1}}), InputError);
  EXPECT_THROW(UniformHypergraph(3, 3, {{0, 1, 3}}), InputError);
  EXPECT_THROW(UniformHypergraph(3, 4, {{0, 1, 2}}), InputError);  // vertex 3 isolated
  EXPECT_THROW(UniformHypergraph(3, 3, {{0, 1, 2}, {2, 1, 0}}), StructureError);
  EXPECT_THROW(UniformHypergraph(1, 1, {{0}}), InputError);
  EXPECT_NO_THROW(UniformHypergraph::allowing_isolated(3, 4, {{0, 1, 2}}));
}

TEST(Hypergraph, Degree) {
  EXPECT_EQ(degree(single_edge(), 0), 1u);
  const auto star = build_star(3, 3);
  EXPECT_EQ(degree(star.graph, star.vertex("u0")), 3u);
  const auto l = build_family(Family::L, 2, 3);
  EXPECT_EQ(degree(l.graph, l.vertex("u1")), 3u);
  EXPECT_THROW(degree(single_edge(), 3), InputError);
}

TEST(Hypergraph, Linearity) {
  EXPECT_TRUE(is_linear(single_edge()));
  EXPECT_FALSE(is_linear(build_c2(3).graph));
  EXPECT_TRUE(is_linear(build_family(Family::A, 3, 3).graph));
}

TEST(Hypergraph, Components) {
  EXPECT_EQ(connected_components(single_edge()).size(), 1u);
  EXPECT_EQ(connected_components(UniformHypergraph(3, 6, {{0, 1, 2}, {3, 4, 5}})).size(), 2u);
  EXPECT_EQ(connected_components(build_family(Family::L, 2, 3).graph).size(), 1u);
}

TEST(Hypergraph, CyclomaticNumber) {
  EXPECT_EQ(cyclomatic_number(single_edge()), 0);
  EXPECT_EQ(cyclomatic_number(build_linear_cycle(3, 3).graph), 1);
  const auto l = build_family(Family::L, 2, 3);
  EXPECT_EQ(l.graph.num_edges(), 6u);
  EXPECT_EQ(l.graph.n(), 12u);
  EXPECT_EQ(cyclomatic_number(l.graph), 1);
}

TEST(Hypergraph, PerfectMatching) {
  auto m = find_perfect_matching(single_edge());
  ASSERT_TRUE(m);
  EXPECT_EQ(m->edges, (std::vector<EdgeIndex>{0}));
  EXPECT_TRUE(m->perfect);

  const auto l = build_family(Family::L, 2, 3);
  auto ml = find_perfect_matching(l.graph);
  ASSERT_TRUE(ml);
  EXPECT_EQ(ml->edges.size(), 4u);
  for (EdgeIndex e : ml->edges) EXPECT_TRUE(is_pendent_edge(l.graph, e));

  EXPECT_FALSE(find_perfect_matching(build_linear_cycle(3, 3).graph));
  EXPECT_FALSE(find_perfect_matching(UniformHypergraph(3, 5, {{0, 1, 2}, {2, 3, 4}})));  // 3 does not divide 5
}

TEST(Hypergraph, MatchingInvariant) {
  for (Family f : {Family::A, Family::B, Family::D, Family::I, Family::J, Family::L}) {
    const auto h = build_family(f, min_size(f) + 1, 3);
    auto m = find_perfect_matching(h.graph);
    ASSERT_TRUE(m) << to_string(f);
    EXPECT_EQ(m->edges.size(), h.graph.n() / 3);
  }
}

TEST(Hypergraph, CappedHypergraph) {
  const auto l = build_family(Family::L, 2, 3);
  const auto capped = capped_hypergraph(l.graph, *l.matching);
  EXPECT_EQ(capped.n(), 4u);
  EXPECT_EQ(capped.num_edges(), 2u);
  EXPECT_TRUE(are_isomorphic(capped, build_c2(3).graph));

  const auto b = build_family(Family::B, 2, 3);
  const auto cb = capped_hypergraph(b.graph, *b.matching);
  EXPECT_EQ(cb.num_edges(), 2u);
  EXPECT_EQ(cb.n(), 5u);  // two edges sharing one vertex
  EXPECT_TRUE(is_connected(cb));

  Matching bad{{0}, true};
  EXPECT_THROW(capped_hypergraph(l.graph, bad), InputError);
}

TEST(Hypergraph, CappedEdgeCountProperty) {
  for (Family f : {Family::A, Family::B, Family::D, Family::I, Family::J, Family::L}) {
    for (int k : {3, 4}) {
      for (int m = min_size(f); m <= min_size(f) + 3; ++m) {
        const auto h = build_family(f, m, k);
        const auto c = capped_hypergraph(h.graph, *h.matching);
        EXPECT_EQ(c.num_edges(), h.graph.num_edges() - h.graph.n() / static_cast<std::size_t>(k));
        EXPECT_EQ(c.num_edges(), static_cast<std::size_t>(m));
      }
    }
  }
}

TEST(Canonical, RelabeledSingleEdge) {
  EXPECT_EQ(canonical_form(UniformHypergraph(3, 3, {{0, 1, 2}})), canonical_form(UniformHypergraph(3, 3, {{2, 0, 1}})));
}

TEST(Canonical, FamilyIsomorphisms) {
  EXPECT_EQ(canonical_form(build_family(Family::B, 2, 3).graph), canonical_form(build_family(Family::D, 2, 3).graph));
  EXPECT_EQ(canonical_form(build_family(Family::I, 1, 3).graph), canonical_form(build_family(Family::J, 1, 3).graph));
  EXPECT_FALSE(are_isomorphic(build_family(Family::A, 3, 3).graph, build_family(Family::B, 3, 3).graph));
  EXPECT_FALSE(are_isomorphic(build_family(Family::B, 3, 3).graph, build_family(Family::D, 3, 3).graph));
}

TEST(Canonical, SelfAndDifferentSizes) {
  const auto g = build_family(Family::J, 2, 3).graph;
  EXPECT_TRUE(are_isomorphic(g, g));
  EXPECT_FALSE(are_isomorphic(single_edge(), build_star(2, 3).graph));
}

TEST(Canonical, CapacityError) {
  const auto big = build_family(Family::L, 3, 3).graph;  // n = 18
  EXPECT_THROW(canonical_form(big, 17), CapacityError);
  EXPECT_NO_THROW(canonical_form(big, 18));
  const auto huge = build_family(Family::L, 5, 3).graph;  // n = 30 > default cap
  EXPECT_THROW(canonical_form(huge), CapacityError);
}

TEST(Canonical, InvariantUnderRandomRelabeling) {
  std::mt19937_64 rng(20261018);
  std::vector<UniformHypergraph> instances;
  for (Family f : {Family::A, Family::B, Family::D, Family::I, Family::J, Family::L}) {
    instances.push_back(build_family(f, min_size(f) + (min_size(f) < 3 ? 1 : 0), 3).graph);
  }
  instances.push_back(build_family(Family::L, 2, 4).graph);
  for (const auto& g : instances) {
    const std::string form = canonical_form(g);
    for (int trial = 0; trial < 100; ++trial) {
      const auto perm = oracle::random_permutation(g.n(), rng);
      ASSERT_EQ(canonical_form(relabel(g, perm)), form);
    }
  }
}

TEST(Canonical, HashIsStable) {
  const std::string form = canonical_form(build_family(Family::L, 2, 3).graph);
  EXPECT_EQ(canonical_hash(form).size(), 16u);
  EXPECT_EQ(canonical_hash(form), canonical_hash(form));
  EXPECT_NE(canonical_hash(form), canonical_hash(canonical_form(build_family(Family::I, 2, 3).graph)));
}

TEST(Cycle, LinearAndNonlinear) {
  const auto c3 = unique_cycle(build_linear_cycle(3, 3).graph);
  ASSERT_TRUE(c3);
  EXPECT_EQ(c3->length(), 3u);
  const auto c2 = unique_cycle(build_c2(4).graph);
  ASSERT_TRUE(c2);
  EXPECT_EQ(c2->length(), 2u);
  EXPECT_FALSE(unique_cycle(build_star(3, 3).graph));
  // Two triangles sharing nothing but glued by an edge: r = 2.
  UniformHypergraph two(3, 8, {{0, 1, 2}, {0, 1, 3}, {4, 5, 6}, {4, 5, 7}, {2, 4, 7}});
  EXPECT_THROW(unique_cycle(two), UnsupportedStructureError);
}
