#include <gtest/gtest.h>

#include <map>

#include "lgp/cohomology.hpp"
#include "lgp/corpus.hpp"
#include "lgp/sha.hpp"

using namespace lgp;

namespace {

GraphRef share(ReductionGraph g) { return std::make_shared<const ReductionGraph>(std::move(g)); }

GraphRef hexagon() { return triangle_model(make_group(cyclic_group(2))).graph_ref(); }

// Two 4-cycles sharing the path P0 - U1 - P2: U-vertices 1, 3, 5.
GraphRef rank_two() {
  std::vector<Vertex> vs = {{0, VertexKind::P, "k"}, {1, VertexKind::U, "k"}, {2, VertexKind::P, "k"},
                            {3, VertexKind::U, "k"}, {5, VertexKind::U, "k"}};
  std::vector<Edge> es = {{0, 0, 1}, {1, 2, 1}, {2, 0, 3}, {3, 2, 3}, {4, 0, 5}, {5, 2, 5}};
  return share(ReductionGraph::create(vs, es, corpus::single_field_lattice()));
}

GraphRef path() {
  std::vector<Vertex> vs = {{0, VertexKind::U, "k"}, {1, VertexKind::P, "k"}, {2, VertexKind::U, "k"}, {3, VertexKind::P, "k"}};
  return share(ReductionGraph::create(vs, {{0, 1, 0}, {1, 1, 2}, {2, 3, 2}}, corpus::single_field_lattice()));
}

GroupRef grp(const char* n) { return make_group(named_group(n)); }

}  // namespace

TEST(BruteForce, TreeHasOneClass) {
  for (const char* n : {"z2", "s3", "q8"}) {
    const auto s = h1_brute_force(constant_system(path(), grp(n)));
    EXPECT_EQ(s.size(), 1u) << n;
  }
}

TEST(BruteForce, HexagonZ2) {
  const auto s = h1_brute_force(constant_system(hexagon(), grp("z2")));
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s.base_point(), 0u);
  EXPECT_EQ(s.representatives()[0], Cochain(6, 0));
}

TEST(BruteForce, HexagonS3MatchesConjugacyClasses) {
  const auto g = grp("s3");
  EXPECT_EQ(h1_brute_force(constant_system(hexagon(), g)).size(), conjugacy_classes(*g).size());
}

TEST(BruteForce, RepresentativesAreLeastMembers) {
  const auto g = grp("s3");
  const auto s = h1_brute_force(constant_system(rank_two(), g));
  EXPECT_EQ(s.size(), 11u);
  for (std::size_t i = 0; i < s.size(); ++i) {
    EXPECT_EQ(s.class_of(s.representatives()[i]), i);
    if (i > 0) EXPECT_LT(s.representatives()[i - 1], s.representatives()[i]);
  }
}

TEST(BruteForce, StateBound) {
  H1Options opts;
  opts.max_states = 10;
  try {
    h1_brute_force(constant_system(hexagon(), grp("z2")), opts);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::StateBoundExceeded);
  }
}

TEST(BruteForce, RejectsMismatchedSystem) {
  auto sys = constant_system(hexagon(), grp("z2"));
  sys.u_hom[0] = GroupHom::identity(grp("z3"));
  EXPECT_THROW(h1_brute_force(sys), Error);
}

TEST(Constant, Examples) {
  EXPECT_EQ(h1_constant(path(), grp("s3")).size(), 1u);
  EXPECT_EQ(h1_constant(hexagon(), grp("z2")).size(), 2u);
  EXPECT_EQ(h1_constant(rank_two(), grp("s3")).size(), 11u);
  // Abelian: |G|^m classes.
  EXPECT_EQ(h1_constant(rank_two(), grp("z4")).size(), 16u);
}

TEST(Constant, ClassOfValidatesCochains) {
  const auto s = h1_constant(hexagon(), grp("z2"));
  EXPECT_EQ(s.class_of(Cochain(6, 0)), s.base_point());
  try {
    s.class_of(Cochain(5, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadCochain);
  }
  EXPECT_THROW(s.class_of(Cochain{0, 0, 0, 0, 0, 2}), Error);
}

TEST(Constant, OddHolonomyIsNontrivial) {
  const auto s = h1_constant(hexagon(), grp("z2"));
  // Product of the entries around the cycle is the invariant for Z/2.
  EXPECT_NE(s.class_of(Cochain{1, 0, 0, 0, 0, 0}), s.base_point());
  EXPECT_EQ(s.class_of(Cochain{1, 1, 0, 0, 0, 0}), s.base_point());
}

TEST(Compare, Examples) {
  CompareOptions opts;
  const auto hex = compare_h1(hexagon(), grp("z2"), opts);
  EXPECT_TRUE(hex.match) << hex.message;
  EXPECT_EQ(hex.brute_classes, 2u);
  EXPECT_TRUE(hex.exhaustive);
  const auto tree = compare_h1(path(), grp("s3"), opts);
  EXPECT_TRUE(tree.match);
  EXPECT_EQ(tree.constant_classes, 1u);
  const auto r2 = compare_h1(rank_two(), grp("z4"), opts);
  EXPECT_TRUE(r2.match) << r2.message;
  EXPECT_EQ(r2.constant_classes, 16u);
}

TEST(Compare, SampledModeAboveLimit) {
  CompareOptions opts;
  opts.exhaustive_limit = 10;
  opts.samples = 200;
  const auto r = compare_h1(rank_two(), grp("s3"), opts);
  EXPECT_TRUE(r.match) << r.message;
  EXPECT_FALSE(r.exhaustive);
}

TEST(Refinement, IdentityMapsToIdentity) {
  const auto old = hexagon();
  auto refined = share(refine(*old, 0, {"k"}, corpus::single_field_lattice()));
  const auto sys = constant_system(refined, grp("z2"));
  EXPECT_EQ(refinement_map(Cochain(6, 0), *old, sys), Cochain(7, 0));
}

TEST(Refinement, HexagonPlusLeafIsBijective) {
  const auto g = grp("z2");
  const auto old = hexagon();
  auto refined = share(refine(*old, 2, {"k"}, corpus::single_field_lattice()));
  const auto sys = constant_system(refined, g);
  const auto before = h1_brute_force(constant_system(old, g));
  const auto after = h1_brute_force(sys);
  ASSERT_EQ(before.size(), 2u);
  ASSERT_EQ(after.size(), 2u);
  // The induced map on classes is well defined and bijective: check every cochain.
  std::map<std::size_t, std::size_t> induced;
  for (unsigned code = 0; code < 64; ++code) {
    Cochain c(6);
    for (std::size_t e = 0; e < 6; ++e) c[e] = (code >> (5 - e)) & 1;
    const auto [it, fresh] = induced.emplace(before.class_of(c), after.class_of(refinement_map(c, *old, sys)));
    if (!fresh) EXPECT_EQ(it->second, after.class_of(refinement_map(c, *old, sys)));
  }
  EXPECT_EQ(induced.size(), 2u);
  EXPECT_NE(induced.at(0), induced.at(1));
}

TEST(Refinement, RejectsNonRefinements) {
  const auto old = hexagon();
  const auto sys = constant_system(path(), grp("z2"));
  try {
    refinement_map(Cochain(6, 0), *old, sys);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotARefinement);
  }
}
