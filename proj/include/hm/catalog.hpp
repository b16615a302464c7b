#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "hm/group.hpp"

namespace hm {

/// One small group: (order, id) as in its data file plus permutation
/// generators on 0..degree-1.
struct CatalogEntry {
  std::uint64_t order = 0;
  std::uint64_t id = 0;
  std::string name;
  std::size_t degree = 1;
  std::vector<Permutation> gens;
};

/// Reads the "hmcat v1" line format: one JSON object per line, '#' comments,
/// blank lines ignored. Only syntax is checked (generators of the wrong
/// length are rejected, non-bijective ones are not). Throws CatalogError with
/// the offending line number, including for a duplicate (order, id).
std::vector<CatalogEntry> load_catalog(std::istream& in);
std::vector<CatalogEntry> load_catalog_file(const std::string& path);

/// The exact line load_catalog reads back.
std::string format_entry(const CatalogEntry& e);
void write_catalog(std::ostream& out, std::span<const CatalogEntry> entries);

/// Build the entry's group, labelled with its name.
Group build_group(const CatalogEntry& e, const Caps& caps = {});

/// Number of isomorphism types of the given order from the standard
/// classification, for orders 1..kKnownCountBound; 0 above.
inline constexpr std::uint64_t kKnownCountBound = 16;
std::uint64_t known_group_count(std::uint64_t order);

struct ValidationReport {
  std::size_t entries = 0;
  std::map<std::uint64_t, std::size_t> count_per_order;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Per entry: generators are bijections, the closure has the declared
/// order, and the group axioms hold. Within each order: all entries pairwise
/// non-isomorphic.
ValidationReport validate_catalog(std::span<const CatalogEntry> entries, const Caps& caps = {});

class Catalog {
 public:
  Catalog() = default;
  /// Throws std::invalid_argument on a duplicate (order, id).
  explicit Catalog(std::vector<CatalogEntry> entries);

  /// Every group of order <= 16 plus SL(2,3) and S4 from data/small_groups.hmcat.
  static const Catalog& embedded();

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  const CatalogEntry* find(std::uint64_t order, std::uint64_t id) const;
  /// Throws std::out_of_range when missing.
  Group get(std::uint64_t order, std::uint64_t id, const Caps& caps = {}) const;

  /// Largest N <= kKnownCountBound such that every order 1..N has its full
  /// known count of entries; 0 when order 1 is already short.
  std::uint64_t complete_up_to() const;
  /// Human-readable shortfall per order up to kKnownCountBound; empty when complete.
  std::vector<std::string> missing_orders() const;

 private:
  std::vector<CatalogEntry> entries_;
};

}  // namespace hm
