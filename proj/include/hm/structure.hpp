#pragma once

#include <cstdint>
#include <optional>

#include "hm/group.hpp"

namespace hm {

bool is_abelian(const Group& g);
/// Some element has order |G|.
bool is_cyclic(const Group& g);
/// Finite-group criterion: every two elements of coprime orders commute.
bool is_nilpotent(const Group& g);
/// The prime p when |G| = p^k with k >= 1.
std::optional<std::uint64_t> p_group_prime(const Group& g);
/// Size of the centralizer of a.
std::size_t centralizer_size(const Group& g, Element a);

/// Backtracking over images of a generating set of `a`, pruned by element
/// orders and centralizer sizes. Throws CapError when either order exceeds
/// caps.isomorphism_limit.
bool is_isomorphic(const Group& a, const Group& b, const Caps& caps = {});
/// The backtracking search alone, without the abelian shortcut.
bool is_isomorphic_by_search(const Group& a, const Group& b, const Caps& caps = {});

}  // namespace hm
