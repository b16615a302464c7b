#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "hm/error.hpp"
#include "hm/families.hpp"
#include "hm/group.hpp"
#include "hm/spectrum.hpp"
#include "oracles.hpp"

using hm::Group;
using hm::Permutation;

namespace {

Group s3() {
  std::vector<Permutation> gens = {{1, 2, 0}, {1, 0, 2}};
  return Group::from_permutations(3, gens, {}, "S3");
}

}  // namespace

TEST(Group, ClosureOfS3) {
  Group g = s3();
  EXPECT_EQ(g.size(), 6u);
  EXPECT_EQ(g.identity(), 0u);
  EXPECT_TRUE(g.has_table());
  EXPECT_TRUE(g.has_permutations());
  EXPECT_EQ(g.label(), "S3");
  EXPECT_TRUE(g.validate().ok);
}

TEST(Group, CompositionIsLeftToRight) {
  Group g = s3();
  for (hm::Element a = 0; a < g.size(); ++a)
    for (hm::Element b = 0; b < g.size(); ++b) {
      auto pa = g.permutation(a), pb = g.permutation(b), pab = g.permutation(g.op(a, b));
      for (std::size_t x = 0; x < 3; ++x) EXPECT_EQ(pab[x], pb[pa[x]]);
    }
}

TEST(Group, InverseAndPower) {
  Group g = hm::families::cyclic(12);
  for (hm::Element a = 0; a < g.size(); ++a) {
    EXPECT_EQ(g.op(a, g.inverse(a)), g.identity());
    EXPECT_EQ(g.power(a, g.order_of(a)), g.identity());
    EXPECT_EQ(g.power(a, 0), g.identity());
    EXPECT_EQ(g.power(a, 1), a);
    EXPECT_EQ(g.order_of(a), oracle::element_order(g, a));
  }
}

TEST(Group, UntabulatedMatchesTabulated) {
  hm::Caps no_table;
  no_table.table_limit = 0;
  std::vector<Permutation> gens = {{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}};
  Group a = Group::from_permutations(5, gens);
  Group b = Group::from_permutations(5, gens, no_table);
  ASSERT_TRUE(a.has_table());
  ASSERT_FALSE(b.has_table());
  ASSERT_EQ(a.size(), 120u);
  ASSERT_EQ(b.size(), 120u);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<hm::Element> pick(0, 119);
  for (int i = 0; i < 2000; ++i) {
    hm::Element x = pick(rng), y = pick(rng);
    EXPECT_EQ(a.op(x, y), b.op(x, y));
  }
  EXPECT_EQ(a.element_orders(), b.element_orders());
  EXPECT_TRUE(b.validate(16, 500).ok);
}

TEST(Group, TrivialGroup) {
  Group g = Group::from_permutations(1, std::vector<Permutation>{});
  EXPECT_EQ(g.size(), 1u);
  EXPECT_EQ(g.order_of(0), 1u);
  EXPECT_TRUE(g.generators().empty());
  EXPECT_TRUE(g.validate().ok);
}

TEST(Group, IdentityGeneratorsAreDropped) {
  std::vector<Permutation> gens = {{0, 1, 2}, {1, 2, 0}, {1, 2, 0}};
  Group g = Group::from_permutations(3, gens);
  EXPECT_EQ(g.size(), 3u);
  EXPECT_EQ(g.generators().size(), 1u);
}

TEST(Group, RejectsNonBijection) {
  std::vector<Permutation> gens = {{0, 0, 1}};
  EXPECT_THROW(Group::from_permutations(3, gens), std::invalid_argument);
  std::vector<Permutation> wrong = {{0, 1}};
  EXPECT_THROW(Group::from_permutations(3, wrong), std::invalid_argument);
  EXPECT_THROW(Group::from_permutations(0, std::vector<Permutation>{}), std::invalid_argument);
}

TEST(Group, ClosureCap) {
  hm::Caps caps;
  caps.max_elements = 100;
  std::vector<Permutation> gens = {{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}};
  EXPECT_THROW(Group::from_permutations(5, gens, caps), hm::CapError);
}

TEST(Group, FromTableValidation) {
  // Z/3 addition table.
  std::vector<hm::Element> z3 = {0, 1, 2, 1, 2, 0, 2, 0, 1};
  Group g = Group::from_table(3, z3, {});
  EXPECT_TRUE(g.validate().ok);
  EXPECT_EQ(g.generators().size(), 1u);
  EXPECT_EQ(g.order_of(1), 3u);

  // Latin square with identity 0 in which every element squares to 0: a loop, not a group.
  std::vector<hm::Element> loop = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  Group bad = Group::from_table(5, loop, {1});
  auto v = bad.validate();
  EXPECT_FALSE(v.ok);
  EXPECT_FALSE(v.problems.empty());
}

TEST(Group, FromTableShapeErrors) {
  EXPECT_THROW(Group::from_table(0, {}, {}), std::invalid_argument);
  EXPECT_THROW(Group::from_table(2, {0, 1, 1}, {}), std::invalid_argument);
}

TEST(Spectrum, CyclicTwelve) {
  auto s = hm::order_spectrum(hm::families::cyclic(12));
  EXPECT_EQ(s.total(), 12u);
  EXPECT_EQ(s.exponent(), 12u);
  EXPECT_EQ(s.count_of(12), 4u);
  EXPECT_EQ(s.count_of(5), 0u);
  EXPECT_EQ(s.cyclic_count_of(12), 1u);
  EXPECT_EQ(s.cyclic_subgroup_total(), 6u);
  EXPECT_EQ(s.distinct_orders(), 6u);
}

TEST(Spectrum, MergesAndSorts) {
  hm::OrderSpectrum s({{4, 2}, {1, 1}, {2, 1}, {4, 0}, {2, 0}});
  ASSERT_EQ(s.entries().size(), 3u);
  EXPECT_EQ(s.entries()[0], (hm::SpectrumEntry{1, 1}));
  EXPECT_EQ(s.entries()[2], (hm::SpectrumEntry{4, 2}));
}
