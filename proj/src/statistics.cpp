#include "hm/statistics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "hm/constructions.hpp"
#include "hm/error.hpp"
#include "hm/families.hpp"

namespace hm {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::uint64_t enumerable(const BigInt& v, const Caps& caps, const char* what) {
  if (v > static_cast<unsigned long>(caps.max_elements))
    throw CapError(std::string(what) + " argument " + v.get_str() + " exceeds enumeration cap " +
                   std::to_string(caps.max_elements));
  return to_u64(v);
}

StatReport cyclic_report(const BigInt& n) {
  auto f = factorize(n);
  StatReport r;
  r.order = n;
  r.exponent = n;
  r.m = m_cyclic_closed(n);
  r.h_m = Rational(n) / r.m;
  r.c_count = divisor_count(f);
  r.path = EvalPath::closed_form;
  return r;
}

StatReport dihedral_report(const BigInt& order) {
  if (order < 2 || mpz_odd_p(order.get_mpz_t()))
    throw std::invalid_argument("dihedral order must be even and >= 2");
  BigInt n = order / 2;
  StatReport r;
  r.order = order;
  r.exponent = lcm(n, BigInt(2));
  r.m = m_cyclic_closed(n) + Rational(n, BigInt(2));
  r.h_m = Rational(order) / r.m;
  r.c_count = divisor_count(factorize(n)) + n;
  r.path = EvalPath::closed_form;
  return r;
}

std::vector<BigInt> prime_support(const BigInt& n) {
  std::vector<BigInt> out;
  for (const auto& pp : factorize(n)) out.push_back(pp.prime);
  return out;
}

// Partition factor indices into classes connected by a shared prime.
std::vector<std::vector<std::size_t>> coprime_classes(const std::vector<GroupExpr>& factors) {
  const std::size_t n = factors.size();
  std::vector<std::vector<BigInt>> support;
  for (const auto& f : factors) support.push_back(prime_support(expr_order(f)));
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      bool shared = std::any_of(support[i].begin(), support[i].end(), [&](const BigInt& p) {
        return std::find(support[j].begin(), support[j].end(), p) != support[j].end();
      });
      if (shared) parent[find(i)] = find(j);
    }
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> class_of(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t root = find(i);
    if (class_of[root] == n) {
      class_of[root] = classes.size();
      classes.emplace_back();
    }
    classes[class_of[root]].push_back(i);
  }
  return classes;
}

// Factors act on disjoint blocks of points.
Group permutation_product(const std::vector<Group>& parts, const Caps& caps) {
  std::size_t degree = 0;
  for (const auto& g : parts) degree += g.degree();
  std::vector<Permutation> gens;
  std::size_t offset = 0;
  for (const auto& g : parts) {
    for (Element s : g.generators()) {
      Permutation p(degree);
      std::iota(p.begin(), p.end(), 0u);
      auto ps = g.permutation(s);
      for (std::size_t i = 0; i < g.degree(); ++i) p[offset + i] = static_cast<std::uint32_t>(offset + ps[i]);
      gens.push_back(std::move(p));
    }
    offset += g.degree();
  }
  return Group::from_permutations(degree, gens, caps);
}

StatReport brute_report(const GroupExpr& e, const EvalContext& ctx) {
  try {
    return stat_report(realize(e, ctx));
  } catch (const CapError& ex) {
    throw CapError(std::string(ex.what()) + "; raise the cap with --caps elements=N or split " +
                   to_string(e) + " into factors of coprime order");
  }
}

}  // namespace

Rational m_of(const OrderSpectrum& spectrum) {
  Rational m;
  for (const auto& e : spectrum.entries())
    m += Rational(BigInt(static_cast<unsigned long>(e.count)), BigInt(static_cast<unsigned long>(e.order)));
  return m;
}

Rational m_of(const Group& g) { return m_of(order_spectrum(g)); }

Rational h_m_of(const OrderSpectrum& spectrum) {
  return Rational(BigInt(static_cast<unsigned long>(spectrum.total()))) / m_of(spectrum);
}

Rational h_m_of(const Group& g) { return h_m_of(order_spectrum(g)); }

Rational m_cyclic_closed(const BigInt& n) {
  Rational m(1);
  for (const auto& pp : factorize(n))
    m *= Rational(BigInt((pp.exponent + 1) * (pp.prime - 1) + 1), pp.prime);
  return m;
}

Rational h_m_cyclic_closed(const BigInt& n) { return Rational(n) / m_cyclic_closed(n); }

Rational h_m_dihedral_closed(const BigInt& n) {
  if (n < 1) throw std::invalid_argument("h_m_dihedral_closed: n must be >= 1");
  return Rational(2 * n) / (m_cyclic_closed(n) + Rational(n, BigInt(2)));
}

Rational h_m_pgroup_closed(const BigInt& p, unsigned long n, const BigInt& c_count) {
  return Rational(pow(p, n + 1), (p - 1) * c_count + 1);
}

Rational cyclic_subgroup_bound(const Group& g) {
  if (g.size() < 2) throw std::invalid_argument("cyclic_subgroup_bound: trivial group");
  BigInt order(static_cast<unsigned long>(g.size()));
  BigInt p = smallest_prime_divisor(order);
  BigInt c(static_cast<unsigned long>(cyclic_subgroup_count(g)));
  return Rational(p * order, (p - 1) * c + 1);
}

Rational order_bound(const Group& g) {
  if (g.size() < 2) throw std::invalid_argument("order_bound: trivial group");
  BigInt order(static_cast<unsigned long>(g.size()));
  BigInt p = smallest_prime_divisor(order);
  return Rational(p * order, (p - 1) * order + 1);
}

std::string_view to_string(EvalPath path) {
  switch (path) {
    case EvalPath::brute: return "brute";
    case EvalPath::closed_form: return "closed_form";
    case EvalPath::multiplicative: return "multiplicative";
  }
  return "brute";
}

Group realize(const GroupExpr& e, const EvalContext& ctx) {
  const Caps& caps = ctx.caps;
  Group g = std::visit(
      Overloaded{
          [&](const expr::Cyclic& c) { return families::cyclic(enumerable(c.order, caps, "C"), caps); },
          [&](const expr::Dihedral& d) { return families::dihedral(enumerable(d.order, caps, "D"), caps); },
          [&](const expr::GenQuaternion& q) {
            return families::generalized_quaternion(enumerable(q.order, caps, "Q"), caps);
          },
          [&](const expr::SemiDihedral& s) {
            return families::semidihedral(enumerable(s.order, caps, "SD"), caps);
          },
          [&](const expr::ElemAbelian& a) {
            return families::elementary_abelian(enumerable(a.p, caps, "E"), enumerable(a.k, caps, "E"), caps);
          },
          [&](const expr::Symmetric& s) { return families::symmetric(enumerable(s.n, caps, "S"), caps); },
          [&](const expr::SL23&) { return families::sl23(); },
          [&](const expr::Dicyclic& d) { return families::dicyclic(enumerable(d.n, caps, "Dic"), caps); },
          [&](const expr::Catalog& c) {
            if (ctx.catalog == nullptr) throw std::invalid_argument("Cat(...) requires a catalog");
            const CatalogEntry* entry = ctx.catalog->find(to_u64(c.order), to_u64(c.id));
            if (entry == nullptr)
              throw std::out_of_range("no catalog entry (" + c.order.get_str() + "," + c.id.get_str() + ")");
            return build_group(*entry, caps);
          },
          [&](const expr::Product& p) {
            if (expr_order(GroupExpr{p}) > static_cast<unsigned long>(caps.max_elements))
              throw CapError("product order " + expr_order(GroupExpr{p}).get_str() +
                             " exceeds enumeration cap " + std::to_string(caps.max_elements));
            std::vector<Group> parts;
            for (const auto& f : p.factors) parts.push_back(realize(f, ctx));
            bool all_perm = std::all_of(parts.begin(), parts.end(),
                                        [](const Group& x) { return x.has_permutations(); });
            if (all_perm) return permutation_product(parts, caps);
            Group acc = parts.front();
            for (std::size_t i = 1; i < parts.size(); ++i) acc = direct_product(acc, parts[i], caps);
            return acc;
          },
      },
      e.node);
  g.set_label(to_string(e));
  return g;
}

StatReport stat_report(const Group& g) {
  StatReport r;
  r.label = g.label();
  auto spectrum = order_spectrum(g);
  r.order = static_cast<unsigned long>(g.size());
  r.exponent = static_cast<unsigned long>(spectrum.exponent());
  r.m = m_of(spectrum);
  r.h_m = Rational(r.order) / r.m;
  r.c_count = BigInt(static_cast<unsigned long>(spectrum.cyclic_subgroup_total()));
  r.integer_flag = r.h_m.is_integer();
  r.spectrum = std::move(spectrum);
  r.path = EvalPath::brute;
  return r;
}

StatReport eval_expr(const GroupExpr& e, const EvalContext& ctx) {
  StatReport r;
  if (const auto* c = std::get_if<expr::Cyclic>(&e.node)) {
    if (c->order < 1) throw std::invalid_argument("cyclic order must be >= 1");
    r = cyclic_report(c->order);
  } else if (const auto* d = std::get_if<expr::Dihedral>(&e.node)) {
    r = dihedral_report(d->order);
  } else if (const auto* p = std::get_if<expr::Product>(&e.node)) {
    auto classes = coprime_classes(p->factors);
    if (classes.size() < 2) {
      r = brute_report(e, ctx);
    } else {
      r.order = 1;
      r.exponent = 1;
      r.m = Rational(1);
      r.h_m = Rational(1);
      r.c_count = BigInt(1);
      for (const auto& cls : classes) {
        std::vector<GroupExpr> part;
        for (auto i : cls) part.push_back(p->factors[i]);
        StatReport sub = eval_expr(GroupExpr::product(std::move(part)), ctx);
        r.order *= sub.order;
        r.exponent = lcm(r.exponent, sub.exponent);
        r.m *= sub.m;
        r.h_m *= sub.h_m;
        if (r.c_count && sub.c_count)
          *r.c_count *= *sub.c_count;
        else
          r.c_count.reset();
      }
      r.path = EvalPath::multiplicative;
    }
  } else {
    r = brute_report(e, ctx);
  }
  r.label = to_string(e);
  r.integer_flag = r.h_m.is_integer();
  return r;
}

nlohmann::ordered_json to_json(const StatReport& r, int digits) {
  nlohmann::ordered_json j;
  j["label"] = r.label;
  j["order"] = r.order.get_str();
  j["exponent"] = r.exponent.get_str();
  if (r.spectrum) {
    auto spec = nlohmann::ordered_json::array();
    for (const auto& e : r.spectrum->entries()) spec.push_back({e.order, e.count});
    j["spectrum"] = spec;
  }
  j["m"] = r.m.str();
  j["h_m"] = r.h_m.str();
  j["h_m_approx"] = r.h_m.to_decimal(digits);
  if (r.c_count) j["c_count"] = r.c_count->get_str();
  j["integer"] = r.integer_flag;
  j["path"] = std::string(to_string(r.path));
  return j;
}

}  // namespace hm
