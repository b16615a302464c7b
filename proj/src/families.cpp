#include "hm/families.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "hm/error.hpp"
#include "hm/exactmath.hpp"

namespace hm::families {

namespace {

void require_within(std::uint64_t order, const Caps& caps, const char* what) {
  if (order > caps.max_elements)
    throw CapError(std::string(what) + ": order " + std::to_string(order) + " exceeds enumeration cap " +
                   std::to_string(caps.max_elements));
}

Permutation identity_perm(std::size_t degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0U);
  return p;
}

// Right regular representation of the group {a^i b^j : 0 <= i < m, j in {0,1}}
// with b a b^-1 = a^twist and b^2 = a^square. Element (i, j) is point j*m + i.
Group two_generator_metacyclic(std::uint64_t m, std::uint64_t twist, std::uint64_t square,
                               const Caps& caps, std::string label) {
  const std::size_t degree = 2 * m;
  auto mul = [&](std::uint64_t i, std::uint64_t j, std::uint64_t k, std::uint64_t l) {
    std::uint64_t r = (i + (j ? twist * k : k) + ((j && l) ? square : 0)) % m;
    return static_cast<std::uint32_t>((j ^ l) * m + r);
  };
  Permutation a(degree), b(degree);
  for (std::uint64_t j = 0; j < 2; ++j)
    for (std::uint64_t i = 0; i < m; ++i) {
      a[j * m + i] = mul(i, j, 1, 0);
      b[j * m + i] = mul(i, j, 0, 1);
    }
  std::vector<Permutation> gens{a, b};
  return Group::from_permutations(degree, gens, caps, std::move(label));
}

}  // namespace

unsigned log2_exact(std::uint64_t order) {
  if (order < 2 || (order & (order - 1)) != 0) return 0;
  unsigned k = 0;
  while ((1ULL << k) != order) ++k;
  return k;
}

Group cyclic(std::uint64_t n, const Caps& caps) {
  if (n == 0) throw std::invalid_argument("cyclic: order must be >= 1");
  require_within(n, caps, "cyclic");
  std::string label = "C" + std::to_string(n);
  if (n == 1) return Group::from_permutations(1, {}, caps, label);
  std::size_t degree = 0;
  std::vector<std::uint64_t> blocks;
  for (const auto& pp : factorize(BigInt(static_cast<unsigned long>(n)))) {
    blocks.push_back(to_u64(pow(pp.prime, pp.exponent)));
    degree += blocks.back();
  }
  Permutation gen(degree);
  std::size_t start = 0;
  for (auto len : blocks) {
    for (std::size_t i = 0; i < len; ++i) gen[start + i] = static_cast<std::uint32_t>(start + (i + 1) % len);
    start += len;
  }
  std::vector<Permutation> gens{gen};
  return Group::from_permutations(degree, gens, caps, label);
}

Group dihedral(std::uint64_t order, const Caps& caps) {
  if (order < 2 || order % 2 != 0) throw std::invalid_argument("dihedral: order must be even and >= 2");
  require_within(order, caps, "dihedral");
  const std::uint64_t n = order / 2;
  std::string label = "D" + std::to_string(order);
  std::vector<Permutation> gens;
  std::size_t degree = 0;
  if (n == 1) {
    degree = 2;
    gens = {identity_perm(2), Permutation{1, 0}};
  } else if (n == 2) {
    degree = 4;
    gens = {Permutation{1, 0, 3, 2}, Permutation{2, 3, 0, 1}};
  } else {
    degree = n;
    Permutation r(n), s(n);
    for (std::uint64_t i = 0; i < n; ++i) {
      r[i] = static_cast<std::uint32_t>((i + 1) % n);
      s[i] = static_cast<std::uint32_t>((n - i) % n);
    }
    gens = {r, s};
  }
  return Group::from_permutations(degree, gens, caps, label);
}

Group generalized_quaternion(std::uint64_t order, const Caps& caps) {
  const unsigned n = log2_exact(order);
  if (n < 3) throw std::invalid_argument("generalized_quaternion: order must be a power of 2, >= 8");
  require_within(order, caps, "generalized_quaternion");
  const std::uint64_t m = order / 2;
  return two_generator_metacyclic(m, m - 1, m / 2, caps, "Q" + std::to_string(order));
}

Group semidihedral(std::uint64_t order, const Caps& caps) {
  const unsigned n = log2_exact(order);
  if (n < 4) throw std::invalid_argument("semidihedral: order must be a power of 2, >= 16");
  require_within(order, caps, "semidihedral");
  const std::uint64_t m = order / 2;
  return two_generator_metacyclic(m, m / 2 - 1, 0, caps, "SD" + std::to_string(order));
}

Group dicyclic(std::uint64_t n, const Caps& caps) {
  if (n < 2) throw std::invalid_argument("dicyclic: n must be >= 2");
  if (n > caps.max_elements / 4)
    throw CapError("dicyclic: order 4*" + std::to_string(n) + " exceeds enumeration cap");
  return two_generator_metacyclic(2 * n, 2 * n - 1, n, caps, "Dic" + std::to_string(n));
}

Group elementary_abelian(std::uint64_t p, std::uint64_t k, const Caps& caps) {
  if (!is_prime(BigInt(static_cast<unsigned long>(p)))) throw std::invalid_argument("elementary_abelian: p must be prime");
  if (k < 1) throw std::invalid_argument("elementary_abelian: k must be >= 1");
  BigInt order = pow(BigInt(static_cast<unsigned long>(p)), static_cast<unsigned long>(k));
  if (order > static_cast<unsigned long>(caps.max_elements))
    throw CapError("elementary_abelian: order " + order.get_str() + " exceeds enumeration cap");
  std::string label = "C" + std::to_string(p) + (k > 1 ? "^" + std::to_string(k) : "");
  const std::size_t degree = p * k;
  std::vector<Permutation> gens;
  for (std::uint64_t b = 0; b < k; ++b) {
    Permutation g = identity_perm(degree);
    for (std::uint64_t i = 0; i < p; ++i) g[b * p + i] = static_cast<std::uint32_t>(b * p + (i + 1) % p);
    gens.push_back(std::move(g));
  }
  return Group::from_permutations(degree, gens, caps, label);
}

Group symmetric(std::uint64_t n, const Caps& caps) {
  if (n < 1) throw std::invalid_argument("symmetric: n must be >= 1");
  std::uint64_t fact = 1;
  for (std::uint64_t i = 2; i <= n; ++i) {
    fact *= i;
    if (fact > caps.max_elements)
      throw CapError("symmetric: order " + std::to_string(n) + "! exceeds enumeration cap " +
                     std::to_string(caps.max_elements));
  }
  std::string label = "S" + std::to_string(n);
  if (n == 1) return Group::from_permutations(1, {}, caps, label);
  Permutation cycle(n), swap = identity_perm(n);
  for (std::uint64_t i = 0; i < n; ++i) cycle[i] = static_cast<std::uint32_t>((i + 1) % n);
  std::swap(swap[0], swap[1]);
  std::vector<Permutation> gens;
  if (n > 2) gens.push_back(cycle);
  gens.push_back(swap);
  return Group::from_permutations(n, gens, caps, label);
}

Group sl23() {
  // Nonzero (x, y) in F_3^2 is point 3x + y - 1.
  auto act = [](int a, int b, int c, int d) {
    Permutation p(8);
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) {
        if (x == 0 && y == 0) continue;
        int nx = (a * x + b * y) % 3;
        int ny = (c * x + d * y) % 3;
        p[static_cast<std::size_t>(3 * x + y - 1)] = static_cast<std::uint32_t>(3 * nx + ny - 1);
      }
    return p;
  };
  std::vector<Permutation> gens{act(1, 1, 0, 1), act(1, 0, 1, 1)};
  return Group::from_permutations(8, gens, {}, "SL(2,3)");
}

OrderSpectrum cyclic_spectrum(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("cyclic_spectrum: order must be >= 1");
  std::vector<SpectrumEntry> entries;
  for (const auto& d : divisors(BigInt(static_cast<unsigned long>(n)))) {
    std::uint64_t dv = to_u64(d);
    entries.push_back({dv, euler_phi_u64(dv)});
  }
  return OrderSpectrum(std::move(entries));
}

OrderSpectrum dihedral_spectrum(std::uint64_t order) {
  if (order < 2 || order % 2 != 0) throw std::invalid_argument("dihedral_spectrum: order must be even");
  auto entries = cyclic_spectrum(order / 2).entries();
  entries.push_back({2, order / 2});
  return OrderSpectrum(std::move(entries));
}

OrderSpectrum elementary_abelian_spectrum(std::uint64_t p, std::uint64_t k) {
  std::uint64_t size = to_u64(pow(BigInt(static_cast<unsigned long>(p)), static_cast<unsigned long>(k)));
  return OrderSpectrum({{1, 1}, {p, size - 1}});
}

}  // namespace hm::families
