#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hm/group.hpp"

namespace hm {

/// A subgroup of some parent Group, held as its sorted member indices. A
/// Subgroup is only meaningful together with the Group that produced it.
class Subgroup {
 public:
  Subgroup() : members_{0} {}
  /// `members` need not be sorted; duplicates are removed.
  explicit Subgroup(std::vector<Element> members);

  const std::vector<Element>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Element e) const;
  bool is_subset_of(const Subgroup& other) const;

  friend bool operator==(const Subgroup&, const Subgroup&) = default;
  friend auto operator<=>(const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.members_ <=> b.members_;
  }

 private:
  std::vector<Element> members_;
};

/// Smallest subgroup containing `gens`.
Subgroup generate_subgroup(const Group& g, std::span<const Element> gens);
Subgroup whole_group(const Group& g);
Subgroup trivial_subgroup();

/// Every distinct cyclic subgroup <a>, trivial subgroup first, then by size.
std::vector<Subgroup> cyclic_subgroups(const Group& g);

/// Every subgroup, built as joins of cyclic subgroups. Sorted by size, then
/// members. Throws CapError when |G| > caps.subgroup_limit.
std::vector<Subgroup> all_subgroups(const Group& g, const Caps& caps = {});

bool is_normal(const Group& g, const Subgroup& h);
std::vector<Subgroup> normal_subgroups(const Group& g, const Caps& caps = {});

Subgroup center(const Group& g);
/// True iff `x` commutes with every element of `h`.
bool centralizes(const Group& g, Element x, const Subgroup& h);
/// True iff h lies in the center of g.
bool is_central(const Group& g, const Subgroup& h);

/// All Sylow p-subgroups. Throws std::invalid_argument when p does not divide
/// |G| or p is not prime.
std::vector<Subgroup> sylow_subgroups(const Group& g, std::uint64_t p, const Caps& caps = {});

}  // namespace hm
