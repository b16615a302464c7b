#include "hm/subgroups.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hm/error.hpp"
#include "hm/exactmath.hpp"

namespace hm {

namespace {

// Closure of `start` (already a subgroup, possibly trivial) with `gens`,
// using `in` as the membership mask. Returns the member list.
std::vector<Element> close(const Group& g, std::vector<Element> members, std::vector<char>& in,
                           std::span<const Element> gens) {
  for (Element m : members) in[m] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Element s : gens) {
      Element y = g.op(members[i], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  return members;
}

struct Candidate {
  Subgroup subgroup;
  std::vector<Element> gens;
};

}  // namespace

Subgroup::Subgroup(std::vector<Element> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Subgroup::contains(Element e) const { return std::binary_search(members_.begin(), members_.end(), e); }

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

Subgroup generate_subgroup(const Group& g, std::span<const Element> gens) {
  std::vector<char> in(g.size(), 0);
  return Subgroup(close(g, {0}, in, gens));
}

Subgroup whole_group(const Group& g) { return Subgroup(all_elements(g)); }

Subgroup trivial_subgroup() { return Subgroup(); }

std::vector<Subgroup> cyclic_subgroups(const Group& g) {
  std::vector<char> covered(g.size(), 0);
  std::vector<Subgroup> out;
  for (Element a = 0; a < g.size(); ++a) {
    if (covered[a]) continue;
    const std::uint64_t o = g.order_of(a);
    std::vector<Element> powers;
    powers.reserve(o);
    Element x = 0;
    for (std::uint64_t k = 0; k < o; ++k) {
      if (gcd_u64(k, o) == 1) covered[x] = 1;
      powers.push_back(x);
      x = g.op(x, a);
    }
    out.emplace_back(std::move(powers));
  }
  std::stable_sort(out.begin(), out.end());
  return out;
}

std::vector<Subgroup> all_subgroups(const Group& g, const Caps& caps) {
  if (g.size() > caps.subgroup_limit)
    throw CapError("all_subgroups: |G| = " + std::to_string(g.size()) + " exceeds cap " +
                   std::to_string(caps.subgroup_limit));
  const auto cyclic = cyclic_subgroups(g);
  std::vector<Element> cyclic_gen;
  for (const auto& c : cyclic) {
    // any element of maximal order in <a> generates it
    Element best = 0;
    for (Element e : c.members())
      if (g.order_of(e) > g.order_of(best)) best = e;
    cyclic_gen.push_back(best);
  }

  std::vector<Candidate> found;
  std::set<std::vector<Element>> seen;
  for (std::size_t i = 0; i < cyclic.size(); ++i) {
    seen.insert(cyclic[i].members());
    std::vector<Element> gens;
    if (cyclic_gen[i] != 0) gens.push_back(cyclic_gen[i]);
    found.push_back({cyclic[i], gens});
  }

  std::vector<char> in(g.size());
  for (std::size_t idx = 0; idx < found.size(); ++idx) {
    for (std::size_t c = 0; c < cyclic.size(); ++c) {
      if (cyclic[c].is_subset_of(found[idx].subgroup)) continue;
      std::fill(in.begin(), in.end(), 0);
      std::vector<Element> gens = found[idx].gens;
      gens.push_back(cyclic_gen[c]);
      std::vector<Element> members = found[idx].subgroup.members();
      members = close(g, std::move(members), in, gens);
      Subgroup joined(std::move(members));
      if (seen.insert(joined.members()).second) found.push_back({std::move(joined), std::move(gens)});
    }
  }

  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(std::move(f.subgroup));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_normal(const Group& g, const Subgroup& h) {
  for (Element x : g.generators()) {
    Element xi = g.inverse(x);
    for (Element m : h.members())
      if (!h.contains(g.op(g.op(xi, m), x))) return false;
  }
  return true;
}

std::vector<Subgroup> normal_subgroups(const Group& g, const Caps& caps) {
  std::vector<Subgroup> out;
  for (auto& h : all_subgroups(g, caps))
    if (is_normal(g, h)) out.push_back(std::move(h));
  return out;
}

Subgroup center(const Group& g) {
  std::vector<Element> z;
  for (Element a = 0; a < g.size(); ++a) {
    bool central = true;
    for (Element s : g.generators()) {
      if (g.op(a, s) != g.op(s, a)) {
        central = false;
        break;
      }
    }
    if (central) z.push_back(a);
  }
  return Subgroup(std::move(z));
}

bool centralizes(const Group& g, Element x, const Subgroup& h) {
  for (Element m : h.members())
    if (g.op(x, m) != g.op(m, x)) return false;
  return true;
}

bool is_central(const Group& g, const Subgroup& h) {
  for (Element s : g.generators())
    if (!centralizes(g, s, h)) return false;
  return true;
}

std::vector<Subgroup> sylow_subgroups(const Group& g, std::uint64_t p, const Caps& caps) {
  if (!is_prime(BigInt(static_cast<unsigned long>(p))))
    throw std::invalid_argument("sylow_subgroups: " + std::to_string(p) + " is not prime");
  std::uint64_t n = g.size();
  if (n % p != 0)
    throw std::invalid_argument("sylow_subgroups: " + std::to_string(p) + " does not divide |G|");
  std::uint64_t pk = 1;
  while (n % p == 0) {
    n /= p;
    pk *= p;
  }
  std::vector<Subgroup> out;
  for (auto& h : all_subgroups(g, caps))
    if (h.size() == pk) out.push_back(std::move(h));
  return out;
}

}  // namespace hm
