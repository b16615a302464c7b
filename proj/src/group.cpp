#include "hm/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "hm/error.hpp"
#include "hm/exactmath.hpp"

namespace hm {

namespace {

bool is_bijection(const Permutation& p, std::size_t degree) {
  if (p.size() != degree) return false;
  std::vector<char> seen(degree, 0);
  for (auto x : p) {
    if (x >= degree || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

std::uint64_t cycle_lcm(std::span<const std::uint32_t> p) {
  std::vector<char> seen(p.size(), 0);
  std::uint64_t l = 1;
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    for (std::size_t x = start; !seen[x]; x = p[x]) {
      seen[x] = 1;
      ++len;
    }
    l = lcm_u64(l, len);
  }
  return l;
}

// Greedy generating set: repeatedly add an element of largest order outside
// the subgroup generated so far.
std::vector<Element> greedy_generators(const Group& g) {
  std::vector<Element> gens;
  std::vector<char> in(g.size(), 0);
  std::vector<Element> members{0};
  in[0] = 1;
  while (members.size() < g.size()) {
    Element best = 0;
    for (Element a = 1; a < g.size(); ++a)
      if (!in[a] && (best == 0 || g.order_of(a) > g.order_of(best))) best = a;
    gens.push_back(best);
    // Re-close: right-multiply everything reached by every generator.
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (Element s : gens) {
        Element y = g.op(members[i], s);
        if (!in[y]) {
          in[y] = 1;
          members.push_back(y);
        }
      }
    }
  }
  return gens;
}

}  // namespace

std::size_t Group::PermHash::operator()(const Permutation& p) const {
  std::size_t h = 1469598103934665603ULL;
  for (auto x : p) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

Group Group::from_permutations(std::size_t degree, std::span<const Permutation> gens,
                               const Caps& caps, std::string label) {
  if (degree == 0) throw std::invalid_argument("permutation degree must be >= 1");
  for (const auto& p : gens)
    if (!is_bijection(p, degree))
      throw std::invalid_argument("generator is not a bijection on 0.." + std::to_string(degree - 1));

  Group g;
  g.degree_ = degree;
  g.label_ = std::move(label);

  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0U);
  g.perms_.insert(g.perms_.end(), id.begin(), id.end());
  g.index_.emplace(id, 0);

  const std::size_t ng = gens.size();
  std::vector<Element> right;  // right[x * ng + k] = index of x * gens[k]
  std::vector<Element> parent{0};
  std::vector<std::uint32_t> via{0};
  Permutation scratch(degree);

  for (std::size_t x = 0; x < g.index_.size(); ++x) {
    for (std::size_t k = 0; k < ng; ++k) {
      const std::uint32_t* px = &g.perms_[x * degree];
      for (std::size_t i = 0; i < degree; ++i) scratch[i] = gens[k][px[i]];
      auto it = g.index_.find(scratch);
      Element y;
      if (it == g.index_.end()) {
        if (g.index_.size() >= caps.max_elements)
          throw CapError("group closure exceeds " + std::to_string(caps.max_elements) + " elements");
        y = static_cast<Element>(g.index_.size());
        g.index_.emplace(scratch, y);
        g.perms_.insert(g.perms_.end(), scratch.begin(), scratch.end());
        parent.push_back(static_cast<Element>(x));
        via.push_back(static_cast<std::uint32_t>(k));
      } else {
        y = it->second;
      }
      right.push_back(y);
    }
  }
  const std::size_t n = g.index_.size();
  g.size_ = n;

  for (std::size_t k = 0; k < ng; ++k) {
    Element e = g.index_.at(gens[k]);
    if (e != 0 && std::find(g.generators_.begin(), g.generators_.end(), e) == g.generators_.end())
      g.generators_.push_back(e);
  }

  if (n <= caps.table_limit && n > 1) {
    // a * e_j = (a * e_parent[j]) * gen_via[j], with parent[j] < j.
    g.table_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      Element* row = &g.table_[i * n];
      row[0] = static_cast<Element>(i);
      for (std::size_t j = 1; j < n; ++j) row[j] = right[static_cast<std::size_t>(row[parent[j]]) * ng + via[j]];
    }
    g.index_.clear();
    g.compute_orders_from_table();
  } else {
    g.orders_.resize(n);
    g.inverse_.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      auto pa = g.permutation(static_cast<Element>(a));
      g.orders_[a] = cycle_lcm(pa);
      for (std::size_t i = 0; i < degree; ++i) scratch[pa[i]] = static_cast<std::uint32_t>(i);
      g.inverse_[a] = g.index_.at(scratch);
    }
  }
  return g;
}

Group Group::from_table(std::size_t size, std::vector<Element> table,
                        std::vector<Element> generators, std::string label) {
  if (size == 0) throw std::invalid_argument("group must have at least one element");
  if (table.size() != size * size) throw std::invalid_argument("table must be size x size");
  Group g;
  g.size_ = size;
  g.table_ = std::move(table);
  g.label_ = std::move(label);
  g.compute_orders_from_table();
  if (generators.empty() && size > 1) generators = greedy_generators(g);
  std::vector<Element> gens;
  for (Element e : generators)
    if (e != 0 && std::find(gens.begin(), gens.end(), e) == gens.end()) gens.push_back(e);
  g.generators_ = std::move(gens);
  return g;
}

void Group::compute_orders_from_table() {
  orders_.assign(size_, 1);
  inverse_.assign(size_, 0);
  for (Element a = 0; a < size_; ++a) {
    Element prev = 0;
    Element x = a;
    std::uint64_t k = 1;
    while (x != 0) {
      prev = x;
      x = table_[static_cast<std::size_t>(a) * size_ + x];
      ++k;
      if (k > size_ + 1) throw std::invalid_argument("table is not a group: element of unbounded order");
    }
    orders_[a] = k;
    inverse_[a] = (a == 0) ? 0 : prev;
  }
}

Element Group::op(Element a, Element b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * size_ + b];
  if (size_ == 1) return 0;
  Permutation scratch(degree_);
  const std::uint32_t* pa = &perms_[static_cast<std::size_t>(a) * degree_];
  const std::uint32_t* pb = &perms_[static_cast<std::size_t>(b) * degree_];
  for (std::size_t i = 0; i < degree_; ++i) scratch[i] = pb[pa[i]];
  return index_.at(scratch);
}

Element Group::power(Element a, std::uint64_t k) const {
  k %= orders_[a];
  Element result = 0;
  Element base = a;
  while (k > 0) {
    if (k & 1U) result = op(result, base);
    base = op(base, base);
    k >>= 1U;
  }
  return result;
}

std::span<const std::uint32_t> Group::permutation(Element a) const {
  if (degree_ == 0) throw std::logic_error("group has no permutation representation");
  return {perms_.data() + static_cast<std::size_t>(a) * degree_, degree_};
}

GroupValidation Group::validate(std::size_t exhaustive_limit, std::size_t samples) const {
  GroupValidation v;
  auto report = [&](std::string msg) {
    v.ok = false;
    if (v.problems.size() < 20) v.problems.push_back(std::move(msg));
  };
  const std::size_t n = size_;
  for (Element a = 0; a < n; ++a) {
    if (op(0, a) != a || op(a, 0) != a) report("identity fails at " + std::to_string(a));
    if (op(a, inverse_[a]) != 0 || op(inverse_[a], a) != 0) report("inverse fails at " + std::to_string(a));
  }
  if (has_table() && n > 1) {
    std::vector<char> seen(n);
    for (Element a = 0; a < n; ++a) {
      std::fill(seen.begin(), seen.end(), 0);
      for (Element b = 0; b < n; ++b) seen[op(a, b)] = 1;
      if (std::count(seen.begin(), seen.end(), 1) != static_cast<std::ptrdiff_t>(n))
        report("row " + std::to_string(a) + " is not a permutation");
      std::fill(seen.begin(), seen.end(), 0);
      for (Element b = 0; b < n; ++b) seen[op(b, a)] = 1;
      if (std::count(seen.begin(), seen.end(), 1) != static_cast<std::ptrdiff_t>(n))
        report("column " + std::to_string(a) + " is not a permutation");
    }
  }
  auto assoc = [&](Element a, Element b, Element c) {
    if (op(op(a, b), c) != op(a, op(b, c)))
      report("associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
             std::to_string(c) + ")");
  };
  if (n <= exhaustive_limit) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c) assoc(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
    for (std::size_t s = 0; s < samples; ++s) assoc(pick(rng), pick(rng), pick(rng));
  }
  return v;
}

std::vector<Element> all_elements(const Group& g) {
  std::vector<Element> out(g.size());
  std::iota(out.begin(), out.end(), 0U);
  return out;
}

}  // namespace hm
