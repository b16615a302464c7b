#include "hm/structure.hpp"

#include <algorithm>
#include <utility>

#include "hm/error.hpp"
#include "hm/exactmath.hpp"
#include "hm/spectrum.hpp"

namespace hm {

bool is_abelian(const Group& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (g.op(gens[i], gens[j]) != g.op(gens[j], gens[i])) return false;
  return true;
}

bool is_cyclic(const Group& g) {
  for (auto o : g.element_orders())
    if (o == g.size()) return true;
  return false;
}

bool is_nilpotent(const Group& g) {
  const auto& orders = g.element_orders();
  for (Element a = 1; a < g.size(); ++a)
    for (Element b = a + 1; b < g.size(); ++b)
      if (gcd_u64(orders[a], orders[b]) == 1 && g.op(a, b) != g.op(b, a)) return false;
  return true;
}

std::optional<std::uint64_t> p_group_prime(const Group& g) {
  auto pp = as_prime_power(BigInt(static_cast<unsigned long>(g.size())));
  if (!pp) return std::nullopt;
  return to_u64(pp->prime);
}

std::size_t centralizer_size(const Group& g, Element a) {
  std::size_t c = 0;
  for (Element x = 0; x < g.size(); ++x)
    if (g.op(a, x) == g.op(x, a)) ++c;
  return c;
}

namespace {

class IsoSearch {
 public:
  IsoSearch(const Group& a, const Group& b) : a_(a), b_(b), phi_(a.size()), used_(b.size()) {
    for (Element x = 0; x < a.size(); ++x) cent_a_.push_back(centralizer_size(a, x));
    for (Element y = 0; y < b.size(); ++y) cent_b_.push_back(centralizer_size(b, y));
  }

  bool invariants_match() const {
    std::vector<std::pair<std::uint64_t, std::size_t>> ia, ib;
    for (Element x = 0; x < a_.size(); ++x) ia.emplace_back(a_.order_of(x), cent_a_[x]);
    for (Element y = 0; y < b_.size(); ++y) ib.emplace_back(b_.order_of(y), cent_b_[y]);
    std::sort(ia.begin(), ia.end());
    std::sort(ib.begin(), ib.end());
    return ia == ib;
  }

  bool run() {
    choose_generators();
    images_.assign(gens_.size(), 0);
    return extend(0);
  }

 private:
  void choose_generators() {
    std::vector<char> in(a_.size(), 0);
    std::vector<Element> members{0};
    in[0] = 1;
    while (members.size() < a_.size()) {
      Element best = 0;
      for (Element x = 1; x < a_.size(); ++x)
        if (!in[x] && (best == 0 || a_.order_of(x) > a_.order_of(best))) best = x;
      gens_.push_back(best);
      for (std::size_t i = 0; i < members.size(); ++i)
        for (Element s : gens_) {
          Element y = a_.op(members[i], s);
          if (!in[y]) {
            in[y] = 1;
            members.push_back(y);
          }
        }
    }
  }

  // Builds the map on <gens_[0..k]> determined by images_[0..k]; false if it
  // is not a well-defined injective homomorphism.
  bool consistent(std::size_t k) {
    constexpr Element kUnset = ~0U;
    std::fill(phi_.begin(), phi_.end(), kUnset);
    std::fill(used_.begin(), used_.end(), 0);
    phi_[0] = 0;
    used_[0] = 1;
    std::vector<Element> queue{0};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      Element x = queue[q];
      for (std::size_t i = 0; i <= k; ++i) {
        Element y = a_.op(x, gens_[i]);
        Element v = b_.op(phi_[x], images_[i]);
        if (phi_[y] == kUnset) {
          if (used_[v]) return false;
          phi_[y] = v;
          used_[v] = 1;
          queue.push_back(y);
        } else if (phi_[y] != v) {
          return false;
        }
      }
    }
    return true;
  }

  bool extend(std::size_t k) {
    if (k == gens_.size()) return true;
    const Element gk = gens_[k];
    for (Element y = 1; y < b_.size(); ++y) {
      if (b_.order_of(y) != a_.order_of(gk) || cent_b_[y] != cent_a_[gk]) continue;
      images_[k] = y;
      if (consistent(k) && extend(k + 1)) return true;
    }
    return false;
  }

  const Group& a_;
  const Group& b_;
  std::vector<std::size_t> cent_a_, cent_b_;
  std::vector<Element> gens_, images_;
  std::vector<Element> phi_;
  std::vector<char> used_;
};

}  // namespace

bool is_isomorphic(const Group& a, const Group& b, const Caps& caps) {
  if (a.size() > caps.isomorphism_limit || b.size() > caps.isomorphism_limit)
    throw CapError("is_isomorphic: order exceeds cap " + std::to_string(caps.isomorphism_limit));
  if (a.size() != b.size()) return false;
  if (!(order_spectrum(a) == order_spectrum(b))) return false;
  const bool abelian = is_abelian(a);
  if (abelian != is_abelian(b)) return false;
  // A finite abelian group is determined by its order spectrum.
  if (abelian) return true;
  IsoSearch search(a, b);
  if (!search.invariants_match()) return false;
  return search.run();
}

bool is_isomorphic_by_search(const Group& a, const Group& b, const Caps& caps) {
  if (a.size() > caps.isomorphism_limit || b.size() > caps.isomorphism_limit)
    throw CapError("is_isomorphic: order exceeds cap " + std::to_string(caps.isomorphism_limit));
  if (a.size() != b.size()) return false;
  IsoSearch search(a, b);
  if (!search.invariants_match()) return false;
  return search.run();
}

}  // namespace hm
