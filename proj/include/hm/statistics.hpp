#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hm/catalog.hpp"
#include "hm/exactmath.hpp"
#include "hm/expr.hpp"
#include "hm/group.hpp"
#include "hm/spectrum.hpp"

namespace hm {

/// m(G): sum over all elements of 1/o(a), via the spectrum (sum of n_d/d).
Rational m_of(const OrderSpectrum& spectrum);
Rational m_of(const Group& g);
/// h_m(G) = |G| / m(G).
Rational h_m_of(const Group& g);
Rational h_m_of(const OrderSpectrum& spectrum);

/// m(C_n) as the product over p^k || n of ((k+1)(p-1)+1)/p. No enumeration.
Rational m_cyclic_closed(const BigInt& n);
Rational h_m_cyclic_closed(const BigInt& n);
/// h_m(D_{2n}) = 2n / (m(C_n) + n/2), for n >= 1.
Rational h_m_dihedral_closed(const BigInt& n);
/// p^{n+1} / ((p-1) c + 1): h_m of a group of order p^n with c cyclic subgroups.
Rational h_m_pgroup_closed(const BigInt& p, unsigned long n, const BigInt& c_count);

/// p|G| / ((p-1)|C(G)| + 1) with p the least prime divisor of |G|. Throws
/// std::invalid_argument for the trivial group.
Rational cyclic_subgroup_bound(const Group& g);
/// p|G| / ((p-1)|G| + 1), the weaker bound using |C(G)| <= |G|.
Rational order_bound(const Group& g);

enum class EvalPath { brute, closed_form, multiplicative };
std::string_view to_string(EvalPath path);

struct StatReport {
  std::string label;
  BigInt order;
  BigInt exponent;
  std::optional<OrderSpectrum> spectrum;  // only when enumerated
  Rational m;
  Rational h_m;
  std::optional<BigInt> c_count;
  bool integer_flag = false;
  EvalPath path = EvalPath::brute;
};

struct EvalContext {
  const Catalog* catalog = nullptr;
  Caps caps;
};

/// Enumerate the expression as a concrete group. Throws CapError past caps.
Group realize(const GroupExpr& e, const EvalContext& ctx);

/// Full statistics of a concrete group.
StatReport stat_report(const Group& g);

/// Cyclic and dihedral nodes use closed forms; a product whose factors fall
/// into several classes of pairwise coprime order is combined
/// multiplicatively per class; everything else is enumerated.
StatReport eval_expr(const GroupExpr& e, const EvalContext& ctx);

/// {"label":..,"order":"..","m":"p/q","h_m":"p/q","h_m_approx":"..",...}
nlohmann::ordered_json to_json(const StatReport& r, int digits = 6);

}  // namespace hm
