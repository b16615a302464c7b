#pragma once

#include <cstdint>
#include <vector>

#include "hm/group.hpp"
#include "hm/subgroups.hpp"

namespace hm {

/// The subgroup `h` as a standalone table group. Element i of the result is
/// h.members()[i].
Group subgroup_as_group(const Group& g, const Subgroup& h);

/// Coset assignment of G/H: coset_of[e] is the coset index of e; coset 0 is H.
struct CosetTable {
  std::vector<std::uint32_t> coset_of;
  std::vector<Element> representative;
};

/// Left cosets eH, numbered by first appearance in element order.
CosetTable left_cosets(const Group& g, const Subgroup& h);

/// G/H on cosets. Throws std::invalid_argument when h is not normal and
/// CapError when [G:H] exceeds caps.table_limit.
Group quotient(const Group& g, const Subgroup& h, const Caps& caps = {});

/// Componentwise product. Pair (i, j) is element i * |b| + j when tabulated.
/// Above caps.table_limit both factors must be permutation-backed; the
/// product then acts on the disjoint union of their points. Throws CapError
/// beyond caps.max_elements.
Group direct_product(const Group& a, const Group& b, const Caps& caps = {});

}  // namespace hm
