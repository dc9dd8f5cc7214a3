#include <cstdlib>

#include <gtest/gtest.h>

#include "hyperspectra/hyperspectra.hpp"
#include "oracles.hpp"

using namespace hyperspectra;

namespace {

std::set<std::string> forms_of(const EnumerationResult& r) {
  std::set<std::string> out;
  for (const auto& m : r.members) out.insert(m.form);
  return out;
}

std::string form_of(Family f, int m, int k = 3) { return canonical_form(build_family(f, m, k).graph); }

// Enumerations are reused across tests; (12,3) takes a fraction of a second.
const EnumerationResult& enum_12() {
  static const EnumerationResult r = enumerate_unicyclic_pm(12, 3);
  return r;
}

}  // namespace

TEST(Enumerate, SixThreeMatchesBruteForce) {
  const auto r = enumerate_unicyclic_pm(6, 3);
  EXPECT_EQ(forms_of(r), oracle::brute_force_6_3());
  ASSERT_EQ(r.members.size(), 1u);
  EXPECT_EQ(r.members[0].form, form_of(Family::I, 1));
  EXPECT_EQ(r.members[0].form, form_of(Family::J, 1));
  EXPECT_NEAR(r.members[0].rho, 1.656625389618572, 1e-9);
}

TEST(Enumerate, TwelveThreeMatchesNaiveGenerator) {
  const auto& r = enum_12();
  EXPECT_EQ(forms_of(r), oracle::naive_matching_first(12, 3));
  EXPECT_EQ(r.members.size(), 7u);
  EXPECT_EQ(r.stats.members, r.members.size());
}

TEST(Enumerate, TwelveThreeMaximizerIsL) {
  const auto& r = enum_12();
  ASSERT_TRUE(r.maximizer);
  const auto& top = r.members[*r.maximizer];
  EXPECT_EQ(top.form, form_of(Family::L, 2));
  EXPECT_NEAR(top.rho, 1.872580893992235, 1e-9);
  EXPECT_EQ(r.co_maximizers.size(), 1u);
  EXPECT_GT(r.runner_up_gap, 1e-8);
}

TEST(Enumerate, FiltersPartitionTheClass) {
  const auto& all = enum_12();
  const auto lin = enumerate_unicyclic_pm(12, 3, EnumerationFilter::LinearOnly);
  const auto non = enumerate_unicyclic_pm(12, 3, EnumerationFilter::NonlinearOnly);
  EXPECT_EQ(lin.members.size() + non.members.size(), all.members.size());
  for (const auto& m : lin.members) EXPECT_EQ(m.label.kind, CycleKind::Linear);
  for (const auto& m : non.members) EXPECT_EQ(m.label.kind, CycleKind::Nonlinear);

  // Linear members at (12,3): B = D, plus a C4 with two matching edges on it.
  ASSERT_EQ(lin.members.size(), 2u);
  ASSERT_TRUE(lin.maximizer);
  EXPECT_EQ(lin.members[*lin.maximizer].form, form_of(Family::B, 2));
  EXPECT_GT(lin.runner_up_gap, 1e-8);
  bool saw_c4 = false;
  for (const auto& m : lin.members) {
    if (m.label.cycle_length == 4) {
      saw_c4 = true;
      EXPECT_EQ(m.label.pm_edges_on_cycle, 2u);
    }
  }
  EXPECT_TRUE(saw_c4);

  ASSERT_TRUE(non.maximizer);
  EXPECT_EQ(non.members[*non.maximizer].form, form_of(Family::L, 2));
  EXPECT_GT(non.runner_up_gap, 10 * 1e-10);
}

TEST(Enumerate, MembersAreValid) {
  for (const auto& m : enum_12().members) {
    EXPECT_TRUE(is_connected(m.graph));
    EXPECT_EQ(cyclomatic_number(m.graph), 1);
    EXPECT_TRUE(find_perfect_matching(m.graph));
    EXPECT_EQ(canonical_form(m.graph), m.form);
    EXPECT_EQ(canonical_hash(m.form), m.hash);
    EXPECT_NEAR(spectral_radius(m.graph).rho, m.rho, 1e-9);
  }
}

TEST(Enumerate, ThreadCountDoesNotChangeResult) {
  EnumerationOptions one;
  one.threads = 1;
  EnumerationOptions three;
  three.threads = 3;
  const auto a = enumerate_unicyclic_pm(12, 3, EnumerationFilter::All, one);
  const auto b = enumerate_unicyclic_pm(12, 3, EnumerationFilter::All, three);
  ASSERT_EQ(a.members.size(), b.members.size());
  for (std::size_t i = 0; i < a.members.size(); ++i) {
    EXPECT_EQ(a.members[i].form, b.members[i].form);
    EXPECT_EQ(a.members[i].rho, b.members[i].rho);
  }
}

TEST(Enumerate, Errors) {
  EXPECT_THROW(enumerate_unicyclic_pm(7, 3), InputError);
  EXPECT_THROW(enumerate_unicyclic_pm(6, 2), InputError);
  EnumerationOptions small;
  small.cap = 12;
  EXPECT_THROW(enumerate_unicyclic_pm(18, 3, EnumerationFilter::All, small), CapacityError);
}

TEST(Enumerate, CapFromEnvironment) {
  EXPECT_EQ(enumeration_cap(3), 18u);
  EXPECT_EQ(enumeration_cap(4), 12u);
  ::setenv("HYPERSPECTRA_CAP", "24", 1);
  EXPECT_EQ(enumeration_cap(3), 24u);
  ::unsetenv("HYPERSPECTRA_CAP");
}

TEST(Verify, FamilyModeOrderings) {
  for (const char* id : {"L3.7", "L4.3", "L4.4", "L4.7", "5.1", "4.1", "C4.1"}) {
    const int lo = theorem_min_m(id);
    const auto rep = verify_theorem(id, 3, lo, 10, false);
    EXPECT_EQ(rep.verdict, Verdict::Confirmed) << id;
    ASSERT_TRUE(rep.min_gap) << id;
    EXPECT_GT(*rep.min_gap, 1e-8) << id;
  }
  const auto l39 = verify_theorem("L3.9", 3, 9, 12, false);
  EXPECT_EQ(l39.verdict, Verdict::Confirmed);
  EXPECT_GT(*l39.min_gap, 1e-8);
}

TEST(Verify, StructuralStatements) {
  EXPECT_EQ(verify_theorem("C3.1", 3, 3, 6, false).verdict, Verdict::Confirmed);
  EXPECT_EQ(verify_theorem("C4.2", 4, 2, 5, false).verdict, Verdict::Confirmed);
  const auto boundary = verify_theorem("3.1", 3, 2, 2, false);
  EXPECT_EQ(boundary.verdict, Verdict::Confirmed);
  EXPECT_FALSE(boundary.min_gap);
}

TEST(Verify, ExhaustiveSmall) {
  const auto r51 = verify_theorem("5.1", 3, 2, 2, true);
  EXPECT_EQ(r51.verdict, Verdict::Confirmed);
  const auto r41 = verify_theorem("4.1", 3, 1, 2, true);
  EXPECT_EQ(r41.verdict, Verdict::Confirmed);
  const auto r31 = verify_theorem("3.1", 3, 2, 2, true);
  EXPECT_EQ(r31.verdict, Verdict::Confirmed);
  bool noted = false;
  for (const auto& n : r31.notes) noted = noted || n.find("maximizer only") != std::string::npos;
  EXPECT_TRUE(noted);
}

TEST(Verify, OutOfRangeAndCapacity) {
  EXPECT_EQ(verify_theorem("L3.9", 3, 8, 10, false).verdict, Verdict::OutOfRange);
  EXPECT_EQ(verify_theorem("L3.7", 3, 2, 4, false).verdict, Verdict::OutOfRange);
  EXPECT_THROW(verify_theorem("5.1", 3, 2, 4, true), CapacityError);
  EXPECT_THROW(verify_theorem("9.9", 3, 2, 4, false), InputError);
  EXPECT_THROW(verify_theorem("5.1", 3, 4, 2, false), InputError);
}

TEST(Verify, RefutationIsReported) {
  // Reversing the ordering through a huge gap threshold must refute.
  VerifyOptions strict;
  strict.gap_tol = 10.0;
  const auto rep = verify_theorem("L4.7", 3, 2, 3, false, strict);
  EXPECT_EQ(rep.verdict, Verdict::Refuted);
  EXPECT_FALSE(rep.counterexample.empty());
}

TEST(CompareAD, SignedGaps) {
  const auto rows = resolve_open_comparison(3, 3, 9);
  ASSERT_EQ(rows.size(), 7u);
  for (const auto& r : rows) {
    EXPECT_DOUBLE_EQ(r.gap, r.rho_d - r.rho_a);
    EXPECT_TRUE(std::isfinite(r.gap));
  }
  EXPECT_LT(rows.front().gap, 0.0);  // m = 3: A is larger
  EXPECT_GT(rows.back().gap, 1e-8);  // m = 9: D is larger
  EXPECT_THROW(resolve_open_comparison(3, 2, 4), InputError);
}
