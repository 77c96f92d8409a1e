#include <gtest/gtest.h>

#include <set>

#include "lgp/groups.hpp"
#include "lgp/oracles.hpp"

using namespace lgp;

namespace {

std::vector<std::size_t> class_sizes(const FiniteGroup& g) {
  std::vector<std::size_t> out;
  for (const auto& c : conjugacy_classes(g)) out.push_back(c.size());
  return out;
}

}  // namespace

TEST(Groups, CyclicTableIsAddition) {
  const auto g = cyclic_group(5);
  EXPECT_EQ(g.order(), 5u);
  EXPECT_EQ(g.identity(), 0u);
  for (Element a = 0; a < 5; ++a)
    for (Element b = 0; b < 5; ++b) EXPECT_EQ(g.mul(a, b), (a + b) % 5);
  EXPECT_TRUE(g.is_abelian());
  EXPECT_EQ(g.element_order(1), 5u);
}

TEST(Groups, InverseAndConjugation) {
  const auto s3 = symmetric_group(3);
  for (Element a = 0; a < s3.order(); ++a) {
    EXPECT_EQ(s3.mul(a, s3.inv(a)), s3.identity());
    EXPECT_EQ(s3.conj(s3.identity(), a), a);
  }
  EXPECT_FALSE(s3.is_abelian());
}

TEST(Groups, IdentityNeedNotBeElementZero) {
  // Z/2 with the identity stored second.
  const auto g = FiniteGroup::from_table({{1, 0}, {0, 1}});
  EXPECT_EQ(g.identity(), 1u);
  EXPECT_EQ(g.inv(0), 0u);
}

TEST(Groups, RejectsOutOfRangeEntry) {
  const auto s = validate_group({{0, 1}, {1, 2}});
  EXPECT_EQ(s.code, ErrorCode::BadTable);
  EXPECT_NE(s.witness.find("out of range"), std::string::npos);
}

TEST(Groups, RejectsRaggedTable) {
  EXPECT_EQ(validate_group({{0, 1}, {1}}).code, ErrorCode::BadTable);
  EXPECT_EQ(validate_group({}).code, ErrorCode::BadTable);
}

TEST(Groups, RejectsMissingIdentity) {
  EXPECT_EQ(validate_group({{1, 0}, {0, 0}}).code, ErrorCode::BadIdentity);
}

TEST(Groups, RejectsMissingInverse) {
  // Identity 0; element 1 has no inverse.
  EXPECT_EQ(validate_group({{0, 1}, {1, 1}}).code, ErrorCode::BadInverse);
}

TEST(Groups, RejectsNonAssociativeTableWithWitness) {
  const CayleyTable bad = {{0, 1, 2}, {1, 1, 0}, {2, 0, 1}};
  const auto s = validate_group(bad);
  EXPECT_EQ(s.code, ErrorCode::NotAssociative);
  EXPECT_NE(s.witness.find("(1*1)*2"), std::string::npos) << s.witness;
  try {
    FiniteGroup::from_table(bad);
    FAIL() << "expected NotAssociative";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAssociative);
  }
}

TEST(Groups, SampledAssociativityAboveExhaustiveBound) {
  GroupCheckOptions opts;
  opts.exhaustive_order = 4;
  opts.sampled_triples = 2000;
  EXPECT_TRUE(validate_group(cyclic_group(12).table(), opts).is_ok());
}

TEST(Groups, NamedGroupOrders) {
  EXPECT_EQ(named_group("trivial").order(), 1u);
  EXPECT_EQ(named_group("z2").order(), 2u);
  EXPECT_EQ(named_group("Z4").order(), 4u);
  EXPECT_EQ(named_group("v4").order(), 4u);
  EXPECT_EQ(named_group("s3").order(), 6u);
  EXPECT_EQ(named_group("d4").order(), 8u);
  EXPECT_EQ(named_group("q8").order(), 8u);
  EXPECT_EQ(named_group("s4").order(), 24u);
  EXPECT_THROW(named_group("x9"), Error);
  EXPECT_THROW(named_group("z0"), Error);
}

TEST(Groups, GeneratorsGenerate) {
  for (const char* n : {"z1", "z6", "v4", "s3", "d4", "q8", "s4"}) {
    const auto g = named_group(n);
    std::set<Element> span{g.identity()};
    for (bool grew = true; grew;) {
      grew = false;
      for (Element x : std::set<Element>(span))
        for (Element s : g.generators()) grew |= span.insert(g.mul(x, s)).second;
    }
    EXPECT_EQ(span.size(), g.order()) << n;
  }
}

TEST(Groups, PermutationGroupComposition) {
  // (p*q)(i) = p(q(i)) and the identity permutation is element 0.
  const auto g = permutation_group({{1, 0, 2}, {0, 2, 1}}, 3);
  EXPECT_EQ(g.order(), 6u);
  EXPECT_EQ(g.identity(), 0u);
}

TEST(Groups, ConjugacyClassesS3) {
  // Identity, three transpositions, two 3-cycles.
  const auto sizes = class_sizes(symmetric_group(3));
  EXPECT_EQ(std::multiset<std::size_t>(sizes.begin(), sizes.end()), (std::multiset<std::size_t>{1, 3, 2}));
}

TEST(Groups, ConjugacyClassesQ8) {
  const auto q8 = quaternion_group();
  const auto sizes = class_sizes(q8);
  EXPECT_EQ(sizes.size(), 5u);
  EXPECT_EQ(std::multiset<std::size_t>(sizes.begin(), sizes.end()), (std::multiset<std::size_t>{1, 1, 2, 2, 2}));
}

TEST(Groups, ConjugacyClassesAbelianAreSingletons) {
  EXPECT_EQ(conjugacy_classes(cyclic_group(7)).size(), 7u);
}

TEST(Groups, UniformClassesS3Pairs) {
  const auto s3 = symmetric_group(3);
  const auto classes = uniform_conjugacy_classes(s3, 2);
  EXPECT_EQ(classes.size(), 11u);
  EXPECT_EQ(oracles::burnside_uniform_count(s3, 2), 11u);
  std::uint64_t total = 0;
  for (const auto& c : classes) total += c.size;
  EXPECT_EQ(total, 36u);
}

TEST(Groups, UniformClassesAreSortedAndCanonical) {
  const auto q8 = quaternion_group();
  const auto classes = uniform_conjugacy_classes(q8, 2);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    EXPECT_EQ(canonical_uniform_conjugate(q8, classes[i].representative), classes[i].representative);
    if (i > 0) EXPECT_LT(classes[i - 1].representative, classes[i].representative);
  }
}

TEST(Groups, UniformClassesZeroTuple) {
  const auto classes = uniform_conjugacy_classes(symmetric_group(3), 0);
  ASSERT_EQ(classes.size(), 1u);
  EXPECT_TRUE(classes[0].representative.empty());
}

TEST(Groups, UniformClassesRespectStateBound) {
  try {
    uniform_conjugacy_classes(quaternion_group(), 4, 1000);
    FAIL() << "expected StateBoundExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::StateBoundExceeded);
  }
}

TEST(Groups, CheckedPower) {
  EXPECT_EQ(checked_power(8, 6, 1'000'000), 262144u);
  EXPECT_THROW(checked_power(8, 7, 1'000'000), Error);
  EXPECT_EQ(checked_power(5, 0, 1), 1u);
}

TEST(Homomorphisms, ValidateRejectsNonHom) {
  const auto z4 = cyclic_group(4), z2 = cyclic_group(2);
  const std::vector<Element> good = {0, 1, 0, 1};
  const std::vector<Element> bad = {0, 1, 1, 0};
  EXPECT_TRUE(validate_hom(z4, z2, good).is_ok());
  EXPECT_EQ(validate_hom(z4, z2, bad).code, ErrorCode::NotHomomorphism);
  const std::vector<Element> short_image = {0, 1};
  EXPECT_FALSE(validate_hom(z4, z2, short_image).is_ok());
}

TEST(Homomorphisms, AllHomsCounts) {
  auto z2 = make_group(cyclic_group(2)), z4 = make_group(cyclic_group(4)), s3 = make_group(symmetric_group(3));
  auto z3 = make_group(cyclic_group(3));
  EXPECT_EQ(all_homs(z4, z2).size(), 2u);
  EXPECT_EQ(all_homs(z2, z4).size(), 2u);
  EXPECT_EQ(all_homs(z3, z2).size(), 1u);
  // Trivial, three onto each transposition subgroup, six automorphisms.
  EXPECT_EQ(all_homs(s3, s3).size(), 10u);
  EXPECT_EQ(all_homs(z2, s3).size(), 4u);
}

TEST(Homomorphisms, CompositionAndBijectivity) {
  auto z4 = make_group(cyclic_group(4)), z2 = make_group(cyclic_group(2));
  const auto red = GroupHom::create(z4, z2, {0, 1, 0, 1});
  const auto neg = GroupHom::create(z4, z4, {0, 3, 2, 1});
  EXPECT_TRUE(neg.is_bijective());
  EXPECT_TRUE(red.is_surjective());
  EXPECT_FALSE(red.is_bijective());
  EXPECT_EQ(neg.then(red).image(), red.image());
  EXPECT_THROW(GroupHom::create(z4, z2, {0, 1, 1, 0}), Error);
}
