#include <gtest/gtest.h>

#include "hyperspectra/hyperspectra.hpp"

using namespace hyperspectra;

TEST(Json, RoundTrip) {
  for (Family f : {Family::A, Family::I, Family::L}) {
    const auto g = build_family(f, 3, 3).graph;
    const std::string text = write_hypergraph(g);
    const auto back = read_hypergraph(text);
    EXPECT_EQ(back.edges(), g.edges());
    EXPECT_EQ(back.n(), g.n());
    EXPECT_EQ(write_hypergraph(back), text);
  }
}

TEST(Json, CompactNormalForm) {
  EXPECT_EQ(write_hypergraph(UniformHypergraph(3, 5, {{2, 3, 4}, {0, 1, 2}})),
            "{\"k\":3,\"n\":5,\"edges\":[[0,1,2],[2,3,4]]}\n");
}

TEST(Json, BuildOutputIsDeterministic) {
  EXPECT_EQ(write_hypergraph(build_family(Family::D, 4, 3).graph), write_hypergraph(build_family(Family::D, 4, 3).graph));
  EXPECT_EQ(labels_to_json(build_family(Family::J, 2, 4)).dump(), labels_to_json(build_family(Family::J, 2, 4)).dump());
}

TEST(Json, StrictRejections) {
  const std::vector<std::string> bad{
      "",
      "[]",
      R"({"k":3,"n":3})",
      R"({"k":3,"n":3,"edges":[[0,1,2]],"extra":1})",
      R"({"k":3.5,"n":3,"edges":[[0,1,2]]})",
      R"({"k":3,"n":3,"edges":[[0,2,1]]})",
      R"({"k":3,"n":3,"edges":[[0,1,1]]})",
      R"({"k":3,"n":3,"edges":[[0,1,3]]})",
      R"({"k":3,"n":3,"edges":[[0,1,-1]]})",
      R"({"k":3,"n":5,"edges":[[2,3,4],[0,1,2]]})",
      R"({"k":3,"n":3,"edges":[[0,1,2],[0,1,2]]})",
      R"({"k":3,"n":4,"edges":[[0,1,2]]})",
      R"({"k":3,"n":3,"edges":[[0,1]]})",
      R"({"k":1,"n":1,"edges":[[0]]})",
      R"({"k":3,"n":3,"edges":[["0",1,2]]})",
  };
  for (const auto& text : bad) EXPECT_THROW(read_hypergraph(text), InputError) << text;
}

TEST(Json, CertificateKeyOrder) {
  const auto sol = solve_certificate(Family::L, 2, 3);
  const auto j = to_json(sol);
  std::vector<std::string> keys;
  for (const auto& [key, value] : j.items()) keys.push_back(key);
  EXPECT_EQ(keys, (std::vector<std::string>{"family", "m", "k", "alpha", "rho", "params", "weights"}));
  EXPECT_EQ(j["family"], "L");
  EXPECT_EQ(j["weights"].size(), sol.matrix.entries().size());
}

TEST(Json, LabelSidecar) {
  const auto h = build_family(Family::L, 2, 3);
  const auto j = labels_to_json(h);
  EXPECT_EQ(j["labels"]["u1"], h.vertex("u1"));
  EXPECT_EQ(j["edges"]["et1"], h.edge("et1"));
  EXPECT_EQ(j["matching"].size(), h.matching->edges.size());
}

TEST(Json, EnumerationCsv) {
  const auto r = enumerate_unicyclic_pm(6, 3);
  const std::string csv = enumeration_csv(r);
  EXPECT_EQ(csv.rfind("hash,kind,cycle_length,pm_edges_on_cycle,tags,rho\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 2);
}
