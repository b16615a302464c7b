#include <gtest/gtest.h>

#include <random>

#include "hm/catalog.hpp"
#include "hm/cli/parser.hpp"
#include "hm/constructions.hpp"
#include "hm/exactmath.hpp"
#include "hm/families.hpp"
#include "hm/statistics.hpp"
#include "hm/structure.hpp"
#include "hm/subgroups.hpp"
#include "oracles.hpp"

using hm::BigInt;
using hm::Group;
using hm::Rational;

namespace {

constexpr std::uint64_t kSeed = 20261014;

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 1000000);
  return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

// Subgroup of S_degree generated by 1..3 random permutations.
Group random_permutation_group(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> degree(1, 7), count(1, 3);
  std::size_t n = degree(rng);
  std::vector<hm::Permutation> gens;
  for (std::size_t i = count(rng); i > 0; --i) gens.push_back(oracle::random_permutation(n, rng));
  return Group::from_permutations(n, gens);
}

// Product of 1..4 random catalog or family factors, as expression text.
std::string random_expression(std::mt19937_64& rng) {
  static const char* kTerms[] = {"C(2)", "C(3)", "C(4)", "C(5)", "C(9)", "C(7)", "D(6)", "D(8)", "D(10)",
                                 "Q(8)", "E(2,2)", "E(3,2)", "SL23", "Dic(3)", "S(3)", "Cat(12,3)", "Cat(16,8)"};
  std::uniform_int_distribution<std::size_t> pick(0, std::size(kTerms) - 1), count(1, 4);
  std::string text;
  for (std::size_t i = count(rng); i > 0; --i) text += std::string(text.empty() ? "" : " x ") + kTerms[pick(rng)];
  return text;
}

std::vector<Group> catalog_groups() {
  std::vector<Group> out;
  for (const auto& e : hm::Catalog::embedded().entries()) out.push_back(hm::build_group(e));
  return out;
}

}  // namespace

TEST(Property, RationalFieldLaws) {
  std::mt19937_64 rng(kSeed);
  for (int i = 0; i < 1000; ++i) {
    Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    Rational s = a + b;
    EXPECT_GE(s.denominator(), 1);
    EXPECT_EQ(hm::gcd(BigInt(::abs(s.numerator())), s.denominator()), 1);
  }
}

TEST(Property, PhiIsMultiplicativeAndSumsToN) {
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    std::uint64_t sum = 0;
    for (const auto& d : hm::divisors(BigInt(static_cast<unsigned long>(n)))) sum += hm::euler_phi_u64(hm::to_u64(d));
    ASSERT_EQ(sum, n);
  }
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<std::uint64_t> pick(1, 5000);
  for (int i = 0; i < 2000; ++i) {
    std::uint64_t a = pick(rng), b = pick(rng);
    if (hm::gcd_u64(a, b) != 1) continue;
    EXPECT_EQ(hm::euler_phi_u64(a * b), hm::euler_phi_u64(a) * hm::euler_phi_u64(b));
  }
}

TEST(Property, RandomPermutationGroups) {
  std::mt19937_64 rng(kSeed);
  for (int trial = 0; trial < 60; ++trial) {
    Group g = random_permutation_group(rng);
    SCOPED_TRACE("trial " + std::to_string(trial) + ", order " + std::to_string(g.size()));
    ASSERT_TRUE(g.validate(128, 2000).ok);
    auto s = hm::order_spectrum(g);
    EXPECT_EQ(s.total(), g.size());
    EXPECT_EQ(s.count_of(1), 1u);
    for (const auto& [d, n] : s.entries()) {
      EXPECT_EQ(n % hm::euler_phi_u64(d), 0u);
      EXPECT_EQ(s.exponent() % d, 0u);
    }
    EXPECT_EQ(hm::h_m_of(g) * hm::m_of(g), Rational(BigInt(static_cast<unsigned long>(g.size()))));
    if (g.size() > 1) EXPECT_GE(hm::h_m_of(g), hm::order_bound(g));
    if (g.size() <= 720) {
      EXPECT_EQ(hm::m_of(g), Rational(BigInt(static_cast<long>(oracle::naive_m(g).num)),
                                      BigInt(static_cast<long>(oracle::naive_m(g).den))));
      EXPECT_EQ(s.cyclic_subgroup_total(), oracle::distinct_cyclic_subgroups(g));
    }
    if (g.size() <= 200) {
      for (const auto& h : hm::all_subgroups(g)) {
        EXPECT_EQ(g.size() % h.size(), 0u);
        EXPECT_TRUE(h.contains(g.identity()));
        for (auto a : h.members()) EXPECT_TRUE(h.contains(g.inverse(a)));
      }
      for (const auto& n : hm::normal_subgroups(g)) EXPECT_EQ(hm::quotient(g, n).size() * n.size(), g.size());
    }
  }
}

TEST(Property, TrivialAndFullQuotients) {
  for (const Group& g : catalog_groups()) {
    Group same = hm::quotient(g, hm::trivial_subgroup());
    EXPECT_TRUE(hm::is_isomorphic(same, g)) << g.label();
    EXPECT_EQ(hm::quotient(g, hm::whole_group(g)).size(), 1u) << g.label();
  }
}

TEST(Property, IsomorphicImpliesEqualSpectra) {
  auto gs = catalog_groups();
  std::mt19937_64 rng(kSeed);
  // Relabel every group through a random generator set of the same group.
  for (const Group& g : gs) {
    if (!g.has_permutations() || g.size() == 1) continue;
    std::vector<hm::Permutation> gens;
    std::uniform_int_distribution<hm::Element> pick(0, static_cast<hm::Element>(g.size() - 1));
    for (int i = 0; i < 4; ++i) {
      auto p = g.permutation(pick(rng));
      gens.emplace_back(p.begin(), p.end());
    }
    for (auto gen : g.generators()) {
      auto p = g.permutation(gen);
      gens.emplace_back(p.begin(), p.end());
    }
    std::shuffle(gens.begin(), gens.end(), rng);
    Group h = Group::from_permutations(g.degree(), gens);
    ASSERT_EQ(h.size(), g.size());
    EXPECT_TRUE(hm::is_isomorphic(g, h)) << g.label();
  }
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i; j < gs.size(); ++j)
      if (gs[i].size() == gs[j].size() && hm::is_isomorphic(gs[i], gs[j]))
        EXPECT_EQ(hm::order_spectrum(gs[i]), hm::order_spectrum(gs[j]));
}

TEST(Property, DirectProductOrdersAreLcm) {
  std::mt19937_64 rng(kSeed);
  auto gs = catalog_groups();
  std::uniform_int_distribution<std::size_t> pick_group(0, gs.size() - 1);
  for (int trial = 0; trial < 40; ++trial) {
    const Group& a = gs[pick_group(rng)];
    const Group& b = gs[pick_group(rng)];
    Group ab = hm::direct_product(a, b);
    ASSERT_TRUE(ab.has_table());
    std::uniform_int_distribution<hm::Element> pa(0, static_cast<hm::Element>(a.size() - 1)),
        pb(0, static_cast<hm::Element>(b.size() - 1));
    for (int k = 0; k < 100; ++k) {
      hm::Element i = pa(rng), j = pb(rng);
      ASSERT_EQ(ab.order_of(static_cast<hm::Element>(i * b.size() + j)), hm::lcm_u64(a.order_of(i), b.order_of(j)));
    }
  }
}

TEST(Property, MultiplicativityOverCatalogPairs) {
  auto gs = catalog_groups();
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = 0; j < gs.size(); ++j) {
      const Group &a = gs[i], &b = gs[j];
      if (a.size() * b.size() > 256) continue;
      Group ab = hm::direct_product(a, b);
      bool coprime = hm::gcd_u64(a.size(), b.size()) == 1;
      Rational m = hm::m_of(ab), mm = hm::m_of(a) * hm::m_of(b);
      EXPECT_GE(m, mm) << a.label() << " x " << b.label();
      EXPECT_EQ(m == mm, coprime) << a.label() << " x " << b.label();
      if (coprime) EXPECT_EQ(hm::h_m_of(ab), hm::h_m_of(a) * hm::h_m_of(b));
    }
}

TEST(Property, CyclicClosedFormOnRandomOrders) {
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<std::uint64_t> pick(1, 2000);
  for (int i = 0; i < 60; ++i) {
    std::uint64_t n = pick(rng);
    ASSERT_EQ(hm::m_cyclic_closed(BigInt(static_cast<unsigned long>(n))), hm::m_of(hm::families::cyclic(n))) << n;
  }
}

TEST(Property, PrimePowerBoundIsTight) {
  for (const Group& g : catalog_groups()) {
    if (!hm::p_group_prime(g)) continue;
    EXPECT_EQ(hm::h_m_of(g), hm::cyclic_subgroup_bound(g)) << g.label();
  }
}

TEST(Property, RandomExpressions) {
  std::mt19937_64 rng(kSeed);
  hm::EvalContext ctx{&hm::Catalog::embedded(), {}};
  for (int trial = 0; trial < 40; ++trial) {
    std::string text = random_expression(rng);
    SCOPED_TRACE(text);
    hm::GroupExpr e = hm::cli::parse_expr(text);
    EXPECT_EQ(hm::cli::parse_expr(hm::to_string(e)), e);
    auto rep = hm::eval_expr(e, ctx);
    EXPECT_EQ(rep.order, hm::expr_order(e));
    EXPECT_EQ(rep.h_m * rep.m, Rational(rep.order));
    if (hm::expr_order(e) <= 20000) {
      Group g = hm::realize(e, ctx);
      EXPECT_EQ(rep.h_m, hm::h_m_of(g));
      EXPECT_EQ(rep.exponent, static_cast<unsigned long>(hm::exponent(g)));
      if (rep.c_count) EXPECT_EQ(*rep.c_count, static_cast<unsigned long>(hm::cyclic_subgroup_count(g)));
    }
  }
}
