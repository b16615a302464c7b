#include "hm/spectrum.hpp"

#include <algorithm>
#include <map>

#include "hm/exactmath.hpp"

namespace hm {

OrderSpectrum::OrderSpectrum(std::vector<SpectrumEntry> entries) {
  std::map<std::uint64_t, std::uint64_t> merged;
  for (const auto& e : entries)
    if (e.count > 0) merged[e.order] += e.count;
  for (const auto& [d, n] : merged) entries_.push_back({d, n});
}

std::uint64_t OrderSpectrum::total() const {
  std::uint64_t t = 0;
  for (const auto& e : entries_) t += e.count;
  return t;
}

std::uint64_t OrderSpectrum::exponent() const {
  std::uint64_t l = 1;
  for (const auto& e : entries_) l = lcm_u64(l, e.order);
  return l;
}

std::uint64_t OrderSpectrum::count_of(std::uint64_t d) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), d,
                             [](const SpectrumEntry& e, std::uint64_t v) { return e.order < v; });
  return (it != entries_.end() && it->order == d) ? it->count : 0;
}

std::uint64_t OrderSpectrum::cyclic_count_of(std::uint64_t d) const {
  return count_of(d) / euler_phi_u64(d);
}

std::uint64_t OrderSpectrum::cyclic_subgroup_total() const {
  std::uint64_t c = 0;
  for (const auto& e : entries_) c += e.count / euler_phi_u64(e.order);
  return c;
}

OrderSpectrum order_spectrum(const Group& g) {
  std::map<std::uint64_t, std::uint64_t> counts;
  for (auto o : g.element_orders()) ++counts[o];
  std::vector<SpectrumEntry> entries;
  for (const auto& [d, n] : counts) entries.push_back({d, n});
  return OrderSpectrum(std::move(entries));
}

std::uint64_t exponent(const Group& g) { return order_spectrum(g).exponent(); }

std::uint64_t cyclic_subgroup_count(const Group& g) { return order_spectrum(g).cyclic_subgroup_total(); }

}  // namespace hm
