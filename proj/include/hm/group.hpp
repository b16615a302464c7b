#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace hm {

using Element = std::uint32_t;
/// Image array on 0..degree-1. Products compose left to right:
/// (a * b)[x] = b[a[x]].
using Permutation = std::vector<std::uint32_t>;

/// Enumeration limits. Defaults follow the documented desk-scale caps.
struct Caps {
  std::size_t max_elements = 2'000'000;  // closure size
  std::size_t table_limit = 4096;        // flat multiplication table up to this size
  std::size_t subgroup_limit = 200;      // all_subgroups / sylow_subgroups
  std::size_t isomorphism_limit = 256;   // is_isomorphic
};

struct GroupValidation {
  bool ok = true;
  std::vector<std::string> problems;
};

/// A concrete finite group on dense element indices 0..size()-1 with the
/// identity at 0. Immutable after construction.
///
/// Groups built from permutations enumerate their elements breadth-first
/// from the generators (so the element order is reproducible) and keep a
/// flat multiplication table when size() <= Caps::table_limit. Larger
/// permutation groups compose permutations on demand. Groups built from a
/// table (quotients, products) always carry the table.
class Group {
 public:
  /// Closure of `gens` under composition. Throws std::invalid_argument for a
  /// non-bijective image array and CapError once the closure exceeds
  /// caps.max_elements.
  static Group from_permutations(std::size_t degree, std::span<const Permutation> gens,
                                 const Caps& caps = {}, std::string label = {});

  /// `table` is row-major size x size with element 0 the identity. No group
  /// axioms are checked here; see validate().
  static Group from_table(std::size_t size, std::vector<Element> table,
                          std::vector<Element> generators, std::string label = {});

  std::size_t size() const { return size_; }
  Element identity() const { return 0; }
  Element op(Element a, Element b) const;
  Element inverse(Element a) const { return inverse_[a]; }
  /// Element order o(a): least k >= 1 with a^k = identity.
  std::uint64_t order_of(Element a) const { return orders_[a]; }
  const std::vector<std::uint64_t>& element_orders() const { return orders_; }
  Element power(Element a, std::uint64_t k) const;

  /// Generating set, as element indices (identity never included).
  const std::vector<Element>& generators() const { return generators_; }

  bool has_table() const { return !table_.empty() || size_ == 1; }
  bool has_permutations() const { return degree_ > 0; }
  std::size_t degree() const { return degree_; }
  /// Permutation realizing element a; only for permutation-backed groups.
  std::span<const std::uint32_t> permutation(Element a) const;

  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  /// Identity, inverse, Latin-square and associativity checks. Associativity
  /// is exhaustive up to `exhaustive_limit` elements and sampled above.
  GroupValidation validate(std::size_t exhaustive_limit = 128, std::size_t samples = 20000) const;

 private:
  Group() = default;
  void compute_orders_from_table();

  struct PermHash {
    std::size_t operator()(const Permutation& p) const;
  };

  std::size_t size_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::uint64_t> orders_;
  std::vector<Element> generators_;
  std::string label_;

  // Permutation backing; empty for table-only groups.
  std::size_t degree_ = 0;
  std::vector<std::uint32_t> perms_;  // size_ x degree_
  std::unordered_map<Permutation, Element, PermHash> index_;
};

/// Elements of `g` as a vector 0..size-1, for range-style loops.
std::vector<Element> all_elements(const Group& g);

}  // namespace hm
