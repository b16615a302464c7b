#include <gtest/gtest.h>

#include <stdexcept>

#include "hm/error.hpp"
#include "hm/families.hpp"
#include "hm/spectrum.hpp"
#include "hm/structure.hpp"
#include "hm/subgroups.hpp"
#include "oracles.hpp"

namespace fam = hm::families;
using hm::Group;

namespace {

// Spectrum by direct order computation, standing in for the closed forms.
hm::OrderSpectrum oracle_spectrum(const Group& g) {
  std::vector<hm::SpectrumEntry> es;
  for (hm::Element a = 0; a < g.size(); ++a) es.push_back({oracle::element_order(g, a), 1});
  return hm::OrderSpectrum(std::move(es));
}

}  // namespace

TEST(Families, Orders) {
  EXPECT_EQ(fam::cyclic(1).size(), 1u);
  EXPECT_EQ(fam::cyclic(360).size(), 360u);
  EXPECT_EQ(fam::dihedral(2).size(), 2u);
  EXPECT_EQ(fam::dihedral(4).size(), 4u);
  EXPECT_EQ(fam::dihedral(20).size(), 20u);
  EXPECT_EQ(fam::generalized_quaternion(32).size(), 32u);
  EXPECT_EQ(fam::semidihedral(64).size(), 64u);
  EXPECT_EQ(fam::elementary_abelian(3, 4).size(), 81u);
  EXPECT_EQ(fam::symmetric(5).size(), 120u);
  EXPECT_EQ(fam::sl23().size(), 24u);
  EXPECT_EQ(fam::dicyclic(5).size(), 20u);
}

TEST(Families, AllValidate) {
  for (const Group& g : {fam::cyclic(30), fam::dihedral(18), fam::generalized_quaternion(16),
                         fam::semidihedral(16), fam::elementary_abelian(2, 3), fam::symmetric(4),
                         fam::sl23(), fam::dicyclic(3)})
    EXPECT_TRUE(g.validate().ok) << g.label();
}

TEST(Families, ClosedSpectraMatchEnumeration) {
  for (std::uint64_t n = 1; n <= 120; ++n)
    EXPECT_EQ(fam::cyclic_spectrum(n), oracle_spectrum(fam::cyclic(n))) << n;
  for (std::uint64_t order = 2; order <= 120; order += 2)
    EXPECT_EQ(fam::dihedral_spectrum(order), oracle_spectrum(fam::dihedral(order))) << order;
  EXPECT_EQ(fam::elementary_abelian_spectrum(5, 3), oracle_spectrum(fam::elementary_abelian(5, 3)));
  EXPECT_EQ(fam::elementary_abelian_spectrum(2, 1), oracle_spectrum(fam::elementary_abelian(2, 1)));
}

TEST(Families, CyclicFifteen) {
  auto s = hm::order_spectrum(fam::cyclic(15));
  EXPECT_EQ(s.count_of(15), 8u);
  EXPECT_EQ(s.count_of(5), 4u);
  EXPECT_EQ(s.count_of(3), 2u);
}

TEST(Families, QuaternionAndSemidihedralShape) {
  Group q = fam::generalized_quaternion(16);
  EXPECT_EQ(hm::order_spectrum(q).count_of(2), 1u);
  EXPECT_EQ(hm::center(q).size(), 2u);
  Group sd = fam::semidihedral(16);
  EXPECT_EQ(hm::order_spectrum(sd).count_of(2), 5u);
  EXPECT_EQ(hm::order_spectrum(sd).count_of(4), 6u);
  EXPECT_FALSE(hm::is_isomorphic(q, sd));
  EXPECT_FALSE(hm::is_isomorphic(sd, fam::dihedral(16)));
}

TEST(Families, DicyclicThree) {
  Group g = fam::dicyclic(3);
  auto s = hm::order_spectrum(g);
  EXPECT_EQ(s.count_of(2), 1u);
  EXPECT_EQ(s.count_of(4), 6u);
  EXPECT_EQ(s.count_of(6), 2u);
  EXPECT_TRUE(hm::is_isomorphic(fam::dicyclic(2), fam::generalized_quaternion(8)));
}

TEST(Families, DihedralRotationsAreCyclic) {
  for (std::uint64_t n : {3u, 5u, 8u, 12u}) {
    Group d = fam::dihedral(2 * n);
    hm::Element r = 0;
    for (hm::Element a = 0; a < d.size(); ++a)
      if (d.order_of(a) == n) r = a;
    std::vector<hm::Element> gens{r};
    auto rot = hm::generate_subgroup(d, gens);
    EXPECT_EQ(rot.size(), n);
    EXPECT_TRUE(hm::is_normal(d, rot));
  }
}

TEST(Families, SmallDihedralAreAbelian) {
  EXPECT_TRUE(hm::is_cyclic(fam::dihedral(2)));
  EXPECT_TRUE(hm::is_isomorphic(fam::dihedral(4), fam::elementary_abelian(2, 2)));
}

TEST(Families, BadArguments) {
  EXPECT_THROW(fam::cyclic(0), std::invalid_argument);
  EXPECT_THROW(fam::dihedral(7), std::invalid_argument);
  EXPECT_THROW(fam::dihedral(0), std::invalid_argument);
  EXPECT_THROW(fam::generalized_quaternion(4), std::invalid_argument);
  EXPECT_THROW(fam::generalized_quaternion(24), std::invalid_argument);
  EXPECT_THROW(fam::semidihedral(8), std::invalid_argument);
  EXPECT_THROW(fam::elementary_abelian(4, 2), std::invalid_argument);
  EXPECT_THROW(fam::symmetric(0), std::invalid_argument);
  EXPECT_THROW(fam::dicyclic(1), std::invalid_argument);
}

TEST(Families, CapsChecked) {
  hm::Caps caps;
  caps.max_elements = 1000;
  EXPECT_THROW(fam::cyclic(1001, caps), hm::CapError);
  EXPECT_THROW(fam::symmetric(7, caps), hm::CapError);
  EXPECT_NO_THROW(fam::cyclic(1000, caps));
}

TEST(Families, Log2Exact) {
  EXPECT_EQ(fam::log2_exact(1), 0u);
  EXPECT_EQ(fam::log2_exact(2), 1u);
  EXPECT_EQ(fam::log2_exact(64), 6u);
  EXPECT_EQ(fam::log2_exact(48), 0u);
}
