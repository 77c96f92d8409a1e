#include <gtest/gtest.h>

#include "lgp/sha.hpp"

using namespace lgp;

namespace {

GroupRef grp(const char* n) { return make_group(named_group(n)); }

ShaModel nonmono(const GroupRef& gk, const GroupRef& gkp, std::vector<Element> image) {
  return nonmono_model(gk, gkp, GroupHom::create(gk, gkp, std::move(image)));
}

LatticeRef chain() {
  return std::make_shared<const FieldLattice>(
      FieldLattice::create({{"k", 1}, {"K", 2}, {"L", 4}}, {{"k", "K"}, {"K", "L"}}));
}

GraphRef one_vertex(const std::string& field, const FieldLattice& lat) {
  return std::make_shared<const ReductionGraph>(ReductionGraph::create({{0, VertexKind::U, field}}, {}, lat));
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Ok;
}

}  // namespace

TEST(ShaModel, ConstantModelGivesConstantSystem) {
  const auto m = triangle_model(grp("s3"));
  const auto sys = to_coefficient_system(m);
  for (std::size_t e = 0; e < sys.edge_group.size(); ++e) {
    EXPECT_TRUE(sys.u_hom[e].is_bijective());
    EXPECT_EQ(sys.u_hom[e].image(), GroupHom::identity(grp("s3")).image());
  }
}

TEST(ShaModel, NonmonoSystem) {
  const auto m = nonmono(grp("trivial"), grp("z2"), {0});
  const auto sys = to_coefficient_system(m);
  ASSERT_EQ(sys.edge_group.size(), 2u);
  for (std::size_t e = 0; e < 2; ++e) {
    EXPECT_EQ(sys.edge_group[e]->order(), 2u);
    EXPECT_EQ(sys.u_hom[e].source()->order(), 1u);  // inclusion G(k) -> G(k')
    EXPECT_EQ(sys.p_hom[e].image(), (std::vector<Element>{0, 1}));
  }
}

TEST(ShaModel, CompositesAreFilledIn) {
  const auto lat = chain();
  auto z2 = grp("z2"), z4 = grp("z4"), z8 = grp("z8");
  const auto m = ShaModel::create(lat, one_vertex("k", *lat), {{"k", z2}, {"K", z4}, {"L", z8}},
                                  {{{"k", "K"}, GroupHom::create(z2, z4, {0, 2})},
                                   {{"K", "L"}, GroupHom::create(z4, z8, {0, 2, 4, 6})}});
  EXPECT_EQ(m.map_of("k", "L").image(), (std::vector<Element>{0, 4}));
  EXPECT_EQ(m.map_of("K", "K").image(), (std::vector<Element>{0, 1, 2, 3}));
}

TEST(ShaModel, DetectsNonFunctorialMaps) {
  const auto lat = chain();
  auto z2 = grp("z2");
  const auto id = GroupHom::identity(z2);
  const auto zero = GroupHom::create(z2, z2, {0, 0});
  EXPECT_EQ(code_of([&] {
              ShaModel::create(lat, one_vertex("k", *lat), {{"k", z2}, {"K", z2}, {"L", z2}},
                               {{{"k", "K"}, id}, {{"K", "L"}, id}, {{"k", "L"}, zero}});
            }),
            ErrorCode::NotFunctorial);
}

TEST(ShaModel, MissingMapsAndGroups) {
  const auto lat = chain();
  auto z2 = grp("z2");
  const auto id = GroupHom::identity(z2);
  EXPECT_EQ(code_of([&] {
              ShaModel::create(lat, one_vertex("k", *lat), {{"k", z2}, {"K", z2}, {"L", z2}}, {{{"k", "K"}, id}});
            }),
            ErrorCode::MissingMap);
  EXPECT_EQ(code_of([&] { ShaModel::create(lat, one_vertex("k", *lat), {{"k", z2}}, {}); }), ErrorCode::MissingMap);
}

TEST(ShaModel, ReflexiveMapMustBeIdentity) {
  auto lat = std::make_shared<const FieldLattice>(FieldLattice::single("k"));
  auto z2 = grp("z2");
  EXPECT_EQ(code_of([&] {
              ShaModel::create(lat, one_vertex("k", *lat), {{"k", z2}}, {{{"k", "k"}, GroupHom::create(z2, z2, {0, 0})}});
            }),
            ErrorCode::NotFunctorial);
}

TEST(LowerBound, Nonmono) {
  EXPECT_EQ(sha_lower_bound(nonmono(grp("trivial"), grp("z2"), {0})).size(), 2u);
  EXPECT_EQ(sha_lower_bound(nonmono(grp("z2"), grp("z2"), {0, 1})).size(), 1u);
}

TEST(LowerBound, Triangle) { EXPECT_EQ(sha_lower_bound(triangle_model(grp("z2"))).size(), 2u); }

TEST(Exact, Triangle) {
  EXPECT_EQ(sha_exact_rational(triangle_model(grp("z2"))).size(), 2u);
  EXPECT_EQ(sha_exact_rational(triangle_model(grp("s3"))).size(), 3u);
}

TEST(Exact, RefusesNonmonoWithWitness) {
  const auto m = nonmono(grp("trivial"), grp("z2"), {0});
  const auto s = check_rationality(m);
  EXPECT_EQ(s.code, ErrorCode::HypothesisViolated);
  EXPECT_NE(s.witness.find("P-vertex 1"), std::string::npos) << s.witness;
  EXPECT_EQ(code_of([&] { sha_exact_rational(m); }), ErrorCode::HypothesisViolated);
}

TEST(Exact, RequiresMinimalField) {
  const auto lat = std::make_shared<const FieldLattice>(FieldLattice::create({{"k", 1}, {"K", 2}}, {{"k", "K"}}));
  auto z2 = grp("z2");
  const auto m = ShaModel::create(lat, one_vertex("K", *lat), {{"k", z2}, {"K", z2}},
                                  {{{"k", "K"}, GroupHom::identity(z2)}});
  EXPECT_EQ(check_rationality(m).code, ErrorCode::HypothesisViolated);
}

TEST(Examples, TriangleStructure) {
  const auto m = triangle_model(grp("z2"));
  EXPECT_EQ(cycle_rank(m.graph()), 1u);
  EXPECT_FALSE(is_tree(m.graph()));
}

TEST(Examples, NonmonoStructure) {
  const auto m = nonmono(grp("trivial"), grp("z2"), {0});
  EXPECT_FALSE(is_monotonic_tree(m.graph(), m.lattice()).monotonic);
  EXPECT_TRUE(is_tree(m.graph()));
  EXPECT_EQ(code_of([&] { nonmono_model(grp("z2"), grp("z2"), GroupHom::identity(grp("z3"))); }),
            ErrorCode::NotHomomorphism);
}

TEST(ClassTriviality, Examples) {
  const auto nm = sha_lower_bound(nonmono(grp("trivial"), grp("z2"), {0}));
  EXPECT_TRUE(is_class_trivial(nm, nm.identity_cochain()));
  EXPECT_FALSE(is_class_trivial(nm, Cochain{1, 0}));
  EXPECT_TRUE(is_class_trivial(nm, Cochain{1, 1}));
}

TEST(Verdicts, Rules) {
  const auto two = sha_exact_rational(triangle_model(grp("z2")));
  const auto one = sha_lower_bound(nonmono(grp("z2"), grp("z2"), {0, 1}));
  EXPECT_EQ(verdict(two, false), Verdict::Counterexample);
  EXPECT_EQ(verdict(one, true), Verdict::PrincipleHolds);
  EXPECT_EQ(verdict(one, false), Verdict::Inconclusive);
  EXPECT_STREQ(verdict_name(Verdict::Inconclusive), "inconclusive");
}
