#include "hm/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "hm/error.hpp"

namespace hm {

Group subgroup_as_group(const Group& g, const Subgroup& h) {
  const auto& m = h.members();
  const std::size_t n = m.size();
  std::vector<std::uint32_t> local(g.size(), 0);
  for (std::size_t i = 0; i < n; ++i) local[m[i]] = static_cast<std::uint32_t>(i);
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = local[g.op(m[i], m[j])];
  return Group::from_table(n, std::move(table), {}, g.label().empty() ? "" : "subgroup of " + g.label());
}

CosetTable left_cosets(const Group& g, const Subgroup& h) {
  constexpr std::uint32_t kUnset = ~0U;
  CosetTable t;
  t.coset_of.assign(g.size(), kUnset);
  for (Element e = 0; e < g.size(); ++e) {
    if (t.coset_of[e] != kUnset) continue;
    auto id = static_cast<std::uint32_t>(t.representative.size());
    t.representative.push_back(e);
    for (Element m : h.members()) t.coset_of[g.op(e, m)] = id;
  }
  return t;
}

Group quotient(const Group& g, const Subgroup& h, const Caps& caps) {
  if (!is_normal(g, h)) throw std::invalid_argument("quotient: subgroup is not normal");
  const std::size_t index = g.size() / h.size();
  if (index > caps.table_limit)
    throw CapError("quotient: index " + std::to_string(index) + " exceeds table limit");
  auto cosets = left_cosets(g, h);
  std::vector<Element> table(index * index);
  for (std::size_t i = 0; i < index; ++i)
    for (std::size_t j = 0; j < index; ++j)
      table[i * index + j] = cosets.coset_of[g.op(cosets.representative[i], cosets.representative[j])];
  std::vector<Element> gens;
  for (Element s : g.generators()) gens.push_back(cosets.coset_of[s]);
  std::string label = g.label().empty() ? "" : g.label() + "/N";
  return Group::from_table(index, std::move(table), std::move(gens), std::move(label));
}

Group direct_product(const Group& a, const Group& b, const Caps& caps) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  const std::size_t n = na * nb;
  std::string label = a.label().empty() || b.label().empty() ? "" : a.label() + " x " + b.label();
  if (n > caps.max_elements)
    throw CapError("direct_product: order " + std::to_string(n) + " exceeds enumeration cap");

  if (n <= caps.table_limit) {
    std::vector<Element> table(n * n);
    for (std::size_t i1 = 0; i1 < na; ++i1)
      for (std::size_t j1 = 0; j1 < nb; ++j1)
        for (std::size_t i2 = 0; i2 < na; ++i2)
          for (std::size_t j2 = 0; j2 < nb; ++j2)
            table[(i1 * nb + j1) * n + (i2 * nb + j2)] =
                static_cast<Element>(a.op(static_cast<Element>(i1), static_cast<Element>(i2)) * nb +
                                     b.op(static_cast<Element>(j1), static_cast<Element>(j2)));
    std::vector<Element> gens;
    for (Element s : a.generators()) gens.push_back(static_cast<Element>(s * nb));
    for (Element s : b.generators()) gens.push_back(s);
    return Group::from_table(n, std::move(table), std::move(gens), std::move(label));
  }

  if (!a.has_permutations() || !b.has_permutations())
    throw CapError("direct_product: order " + std::to_string(n) +
                   " exceeds table limit and a factor has no permutation representation");
  const std::size_t da = a.degree();
  const std::size_t db = b.degree();
  std::vector<Permutation> gens;
  for (Element s : a.generators()) {
    Permutation p(da + db);
    auto ps = a.permutation(s);
    for (std::size_t i = 0; i < da; ++i) p[i] = ps[i];
    for (std::size_t i = 0; i < db; ++i) p[da + i] = static_cast<std::uint32_t>(da + i);
    gens.push_back(std::move(p));
  }
  for (Element s : b.generators()) {
    Permutation p(da + db);
    auto ps = b.permutation(s);
    for (std::size_t i = 0; i < da; ++i) p[i] = static_cast<std::uint32_t>(i);
    for (std::size_t i = 0; i < db; ++i) p[da + i] = static_cast<std::uint32_t>(da + ps[i]);
    gens.push_back(std::move(p));
  }
  return Group::from_permutations(da + db, gens, caps, std::move(label));
}

}  // namespace hm
