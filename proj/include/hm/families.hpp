#pragma once

#include <cstdint>

#include "hm/group.hpp"
#include "hm/spectrum.hpp"

namespace hm::families {

// Every constructor checks the resulting order against caps.max_elements
// before enumerating and throws CapError above it; invalid arguments throw
// std::invalid_argument. D, Q and SD take the group ORDER, as in "D8".

/// C_n on the disjoint union of its prime-power cycles.
Group cyclic(std::uint64_t n, const Caps& caps = {});
/// D_{2n}: rotation r and reflection s. Natural action on n points for n >= 3.
Group dihedral(std::uint64_t order, const Caps& caps = {});
/// Q_{2^n}, n >= 3: <a, b | a^{2^{n-1}}, b^2 = a^{2^{n-2}}, b a b^-1 = a^-1>.
Group generalized_quaternion(std::uint64_t order, const Caps& caps = {});
/// SD_{2^n}, n >= 4: <a, b | a^{2^{n-1}}, b^2, b a b^-1 = a^{2^{n-2}-1}>.
Group semidihedral(std::uint64_t order, const Caps& caps = {});
/// C_p^k.
Group elementary_abelian(std::uint64_t p, std::uint64_t k, const Caps& caps = {});
Group symmetric(std::uint64_t n, const Caps& caps = {});
/// SL(2,3) acting on the 8 nonzero vectors of F_3^2.
Group sl23();
/// Dic_n of order 4n: <a, b | a^{2n}, b^2 = a^n, b a b^-1 = a^-1>, n >= 2.
Group dicyclic(std::uint64_t n, const Caps& caps = {});

/// Closed-form spectra, no enumeration.
OrderSpectrum cyclic_spectrum(std::uint64_t n);
OrderSpectrum dihedral_spectrum(std::uint64_t order);
OrderSpectrum elementary_abelian_spectrum(std::uint64_t p, std::uint64_t k);

/// k when order = 2^k with k >= 1, otherwise 0.
unsigned log2_exact(std::uint64_t order);

}  // namespace hm::families
