#pragma once

#include <cstdint>
#include <vector>

#include "hm/group.hpp"

namespace hm {

struct SpectrumEntry {
  std::uint64_t order = 0;  // d
  std::uint64_t count = 0;  // n_d: elements of order d

  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

/// Multiset of element orders d_1 = 1 < d_2 < ... < d_r with counts n_d.
class OrderSpectrum {
 public:
  OrderSpectrum() = default;
  /// Entries are sorted and merged; zero counts dropped.
  explicit OrderSpectrum(std::vector<SpectrumEntry> entries);

  const std::vector<SpectrumEntry>& entries() const { return entries_; }
  std::size_t distinct_orders() const { return entries_.size(); }
  /// Sum of n_d, i.e. |G|.
  std::uint64_t total() const;
  /// lcm of the orders.
  std::uint64_t exponent() const;
  std::uint64_t count_of(std::uint64_t d) const;
  /// n_d' = n_d / phi(d): number of cyclic subgroups of order d.
  std::uint64_t cyclic_count_of(std::uint64_t d) const;
  /// |C(G)| = sum of n_d / phi(d), trivial subgroup included.
  std::uint64_t cyclic_subgroup_total() const;

  friend bool operator==(const OrderSpectrum&, const OrderSpectrum&) = default;

 private:
  std::vector<SpectrumEntry> entries_;
};

OrderSpectrum order_spectrum(const Group& g);
std::uint64_t exponent(const Group& g);
/// |C(G)| from the spectrum.
std::uint64_t cyclic_subgroup_count(const Group& g);

}  // namespace hm
