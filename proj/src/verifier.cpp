#include "hm/verifier.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "hm/constructions.hpp"
#include "hm/error.hpp"
#include "hm/families.hpp"
#include "hm/statistics.hpp"
#include "hm/structure.hpp"
#include "hm/subgroups.hpp"

namespace hm {

namespace {

using E = GroupExpr;

BigInt big(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

Rational ratio(std::uint64_t num, std::uint64_t den) { return Rational(big(num), big(den)); }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

Group make(const GroupExpr& e, const Caps& caps) { return realize(e, EvalContext{nullptr, caps}); }

struct Sample {
  std::string label;
  Group group;
};

std::vector<Sample> samples(const std::vector<GroupExpr>& exprs, const Caps& caps) {
  std::vector<Sample> out;
  for (const auto& e : exprs) out.push_back({to_string(e), make(e, caps)});
  return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (const auto& pp : factorize(big(n))) out.push_back(to_u64(pp.prime));
  return out;
}

// n = p + p^2 + ... + p^s for some s >= 1.
bool is_exponent_sum(std::uint64_t p, std::uint64_t n) {
  std::uint64_t sum = 0;
  for (std::uint64_t term = p; sum < n; term *= p) sum += term;
  return sum == n;
}

bool is_maximal_class_2group(const Group& g, const Caps& caps) {
  const std::uint64_t n = g.size();
  if (n < 8 || families::log2_exact(n) == 0) return false;
  if (is_isomorphic(g, families::dihedral(n, caps), caps)) return true;
  if (is_isomorphic(g, families::generalized_quaternion(n, caps), caps)) return true;
  return n >= 16 && is_isomorphic(g, families::semidihedral(n, caps), caps);
}

// Sum over cyclic subgroups of order d > 1 of (phi(d) - 1).
std::uint64_t spectral_sum(const OrderSpectrum& s) {
  std::uint64_t total = 0;
  for (const auto& e : s.entries())
    if (e.order > 1) total += s.cyclic_count_of(e.order) * (euler_phi_u64(e.order) - 1);
  return total;
}

std::vector<GroupExpr> constructed_p_groups() {
  return {
      E::elementary_abelian(3, 3),
      E::product({E::cyclic(3), E::cyclic(9)}),
      E::elementary_abelian(5, 2),
      E::product({E::cyclic(5), E::cyclic(25)}),
      E::elementary_abelian(2, 5),
      E::product({E::cyclic(4), E::cyclic(8)}),
      E::product({E::cyclic(2), E::dihedral(16)}),
      E::product({E::cyclic(2), E::quaternion(16)}),
      E::product({E::cyclic(4), E::dihedral(8)}),
      E::product({E::cyclic(4), E::quaternion(8)}),
  };
}

}  // namespace

void CheckResult::note(std::string group, std::string values) {
  if (!passed) return;
  ++witness_total;
  if (witnesses.size() < kWitnessCap) witnesses.push_back({std::move(group), std::move(values)});
}

void CheckResult::fail(std::string group, std::string values) {
  if (passed) {
    passed = false;
    witnesses.clear();
    witness_total = 0;
  }
  ++witness_total;
  if (witnesses.size() < kWitnessCap) witnesses.push_back({std::move(group), std::move(values)});
}

std::string_view CheckResult::status() const {
  if (passed) return "pass";
  return conclusive ? "fail" : "inconclusive";
}

nlohmann::ordered_json to_json(const CheckResult& r) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["title"] = r.title;
  j["status"] = std::string(r.status());
  j["passed"] = r.passed;
  j["conclusive"] = r.conclusive;
  j["population"] = r.population;
  auto w = nlohmann::ordered_json::array();
  for (const auto& x : r.witnesses) w.push_back({{"group", x.group}, {"values", x.values}});
  j["witnesses"] = w;
  j["witness_total"] = r.witness_total;
  j["caveats"] = r.caveats;
  j["findings"] = r.findings;
  return j;
}

std::string PopulationMember::tag() const {
  return "(" + std::to_string(entry->order) + "," + std::to_string(entry->id) + ") " + entry->name;
}

Verifier::Verifier(const Catalog& catalog, VerifyOptions options)
    : catalog_(catalog), options_(std::move(options)) {}

const std::vector<std::string>& Verifier::check_ids() {
  static const std::vector<std::string> ids = {
      "lemma2.1", "prop2.1-2.2", "thm2.2",   "congruences", "cformulas",    "prop2.6",
      "remark2.7", "thm2.5",     "thm2.5-sum", "thm2.8",    "prop2.9-2.10",
  };
  return ids;
}

CheckResult Verifier::run(std::string_view id) {
  static const std::map<std::string, CheckResult (Verifier::*)(), std::less<>> table = {
      {"lemma2.1", &Verifier::check_min_bound},
      {"prop2.1-2.2", &Verifier::check_monotonicity},
      {"thm2.2", &Verifier::check_pgroup_integers},
      {"congruences", &Verifier::check_congruences},
      {"cformulas", &Verifier::check_c_formulas},
      {"prop2.6", &Verifier::check_dihedral_integers},
      {"remark2.7", &Verifier::check_sl23_product},
      {"thm2.5", &Verifier::check_value_two},
      {"thm2.5-sum", &Verifier::check_spectral_sum},
      {"thm2.8", &Verifier::check_at_most_two},
      {"prop2.9-2.10", &Verifier::check_value_three},
  };
  auto it = table.find(id);
  if (it == table.end())
    throw std::invalid_argument("unknown check '" + std::string(id) + "'; valid checks: " +
                                join(check_ids(), ", "));
  return (this->*(it->second))();
}

std::vector<CheckResult> Verifier::run_all() {
  std::vector<CheckResult> out;
  for (const auto& id : check_ids()) out.push_back(run(id));
  return out;
}

const std::vector<PopulationMember>& Verifier::population() {
  if (!population_) {
    population_.emplace();
    for (const auto& e : catalog_.entries()) {
      Group g = build_group(e, options_.caps);
      OrderSpectrum spec = order_spectrum(g);
      Rational m = m_of(spec);
      Rational h = h_m_of(spec);
      population_->push_back({&e, std::move(g), std::move(spec), std::move(m), std::move(h)});
    }
  }
  return *population_;
}

std::string Verifier::catalog_population() const {
  std::uint64_t max_order = 0;
  for (const auto& e : catalog_.entries()) max_order = std::max(max_order, e.order);
  return "catalog: " + std::to_string(catalog_.entries().size()) + " groups of order <= " +
         std::to_string(max_order) + ", exhaustive up to order " + std::to_string(catalog_.complete_up_to());
}

void Verifier::require_complete(CheckResult& r) const {
  auto missing = catalog_.missing_orders();
  if (missing.empty()) {
    r.caveats.push_back("exhaustive up to order N=" + std::to_string(kKnownCountBound) +
                        "; the statement is universal and is not verified beyond this bound");
  } else {
    r.conclusive = false;
    r.caveats.push_back("population incomplete: " + join(missing, "; "));
  }
}

CheckResult Verifier::check_min_bound() {
  CheckResult r;
  r.id = "lemma2.1";
  r.title = "h_m(G) >= p|G|/((p-1)|C(G)|+1), equality iff G is a p-group; h_m(G) >= p|G|/((p-1)|G|+1)";
  r.population = catalog_population() + "; plus C_n (n <= 60), D_2n (n <= 30), S5 by enumeration";

  std::vector<Sample> groups;
  for (const auto& m : population())
    if (m.group.size() > 1) groups.push_back({m.tag(), m.group});
  std::vector<GroupExpr> extra;
  for (unsigned n = 17; n <= 60; ++n) extra.push_back(E::cyclic(n));
  for (unsigned n = 9; n <= 30; ++n) extra.push_back(E::dihedral(2 * n));
  extra.push_back(E::symmetric(5));
  for (auto& s : samples(extra, options_.caps)) groups.push_back(std::move(s));

  std::size_t equal = 0, strict = 0;
  for (const auto& [label, g] : groups) {
    Rational h = h_m_of(g);
    Rational lb = cyclic_subgroup_bound(g);
    Rational rb = order_bound(g);
    bool p_group = as_prime_power(big(g.size())).has_value();
    if (h < lb) r.fail(label, "h_m = " + h.str() + " < bound " + lb.str());
    else if ((h == lb) != p_group)
      r.fail(label, "h_m = " + h.str() + ", bound " + lb.str() + (p_group ? ", p-group but strict" : ", equality for a non-p-group"));
    if (h < rb) r.fail(label, "h_m = " + h.str() + " < weaker bound " + rb.str());
    (h == lb ? equal : strict)++;
    if (label == "(8,3) D8" || label == "(6,1) S3" || label == "(15,1) C15")
      r.note(label, "h_m = " + h.str() + ", bound " + lb.str());
  }
  r.findings.push_back(std::to_string(groups.size()) + " groups: equality on " + std::to_string(equal) +
                       " prime-power orders, strict on " + std::to_string(strict) + " others");
  return r;
}

CheckResult Verifier::check_monotonicity() {
  CheckResult r;
  r.id = "prop2.1-2.2";
  r.title = "monotonicity of m and h_m under subgroups, quotients, Sylow extensions and direct products";
  r.population = catalog_population() + "; all subgroups, normal quotients, normal cyclic Sylow subgroups, "
                 "and products of two non-trivial catalog groups of order <= " +
                 std::to_string(options_.product_order_max);
  const Caps& caps = options_.caps;

  std::size_t n_sub = 0, n_quot = 0, n_sylow = 0, n_coset = 0, n_coprime = 0, n_noncoprime = 0;
  std::size_t flagged = 0;
  for (const auto& mem : population()) {
    const Group& g = mem.group;
    const std::uint64_t n = g.size();
    const std::string tag = mem.tag();
    if (n > caps.subgroup_limit) {
      r.caveats.push_back(tag + " skipped: order exceeds subgroup cap");
      continue;
    }
    const Rational& m = mem.m;
    const Rational& h = mem.h_m;

    bool cyclic = is_cyclic(g);
    Rational mc = m_cyclic_closed(big(n));
    Rational hc = h_m_cyclic_closed(big(n));
    if (mc > m || (mc == m) != cyclic) r.fail(tag, "m(C_n) = " + mc.str() + ", m(G) = " + m.str());
    if (h > hc || (h == hc) != cyclic) r.fail(tag, "h_m(C_n) = " + hc.str() + ", h_m(G) = " + h.str());

    for (const auto& sub : all_subgroups(g, caps)) {
      ++n_sub;
      Group hg = subgroup_as_group(g, sub);
      Rational mh = m_of(hg);
      Rational hh = h_m_of(hg);
      bool proper = sub.size() < n;
      std::string where = tag + ", |H| = " + std::to_string(sub.size());
      if (mh > m || (mh == m) == proper) r.fail(where, "m(H) = " + mh.str() + ", m(G) = " + m.str());
      Rational bound = Rational(big(n / sub.size())) * hh;
      if (h > bound || (h == bound) == proper)
        r.fail(where, "h_m(G) = " + h.str() + ", [G:H]h_m(H) = " + bound.str());

      if (!is_normal(g, sub)) continue;
      ++n_quot;
      Group q = quotient(g, sub, caps);
      Rational mq = m_of(q);
      Rational hq = h_m_of(q);
      bool nontrivial = sub.size() > 1;
      if (mq > m || (mq == m) == nontrivial) r.fail(where, "m(G/N) = " + mq.str() + ", m(G) = " + m.str());
      Rational qbound = Rational(big(sub.size())) * hq;
      if (h > qbound || (h == qbound) == nontrivial)
        r.fail(where, "h_m(G) = " + h.str() + ", |N|h_m(G/N) = " + qbound.str());
    }

    if (n < 2) continue;
    for (std::uint64_t p : prime_divisors(n)) {
      auto sylows = sylow_subgroups(g, p, caps);
      if (sylows.size() != 1) continue;
      const Subgroup& sp = sylows.front();
      Group pg = subgroup_as_group(g, sp);
      if (!is_cyclic(pg)) continue;
      ++n_sylow;
      Group q = quotient(g, sp, caps);
      Rational mp = m_of(pg), mq = m_of(q);
      Rational hp = h_m_of(pg), hq = h_m_of(q);
      bool central = is_central(g, sp);
      std::string where = tag + ", P = Sylow " + std::to_string(p);
      if (m < mp * mq || (m == mp * mq) != central) {
        ++flagged;
        r.findings.push_back("flagged " + where + ": m(G) = " + m.str() + ", m(P)m(G/P) = " + (mp * mq).str());
      }
      if (h > hp * hq || (h == hp * hq) != central) {
        ++flagged;
        r.findings.push_back("flagged " + where + ": h_m(G) = " + h.str() + ", h_m(P)h_m(G/P) = " + (hp * hq).str());
      }
      auto cosets = left_cosets(g, sp);
      std::vector<Rational> coset_m(cosets.representative.size());
      for (Element e = 0; e < g.size(); ++e) coset_m[cosets.coset_of[e]] += ratio(1, g.order_of(e));
      for (std::size_t c = 0; c < coset_m.size(); ++c) {
        ++n_coset;
        Rational bound = mp / Rational(big(q.order_of(static_cast<Element>(c))));
        bool centralizes_p = centralizes(g, cosets.representative[c], sp);
        if (coset_m[c] < bound || (coset_m[c] == bound) != centralizes_p) {
          ++flagged;
          r.findings.push_back("flagged " + where + ", coset " + std::to_string(c) + ": m(Px) = " +
                               coset_m[c].str() + ", m(P)/o(Px) = " + bound.str());
        }
      }
    }
  }

  const auto& pop = population();
  for (std::size_t i = 0; i < pop.size(); ++i) {
    for (std::size_t j = i; j < pop.size(); ++j) {
      const Group& a = pop[i].group;
      const Group& b = pop[j].group;
      if (a.size() < 2 || b.size() < 2 || a.size() * b.size() > options_.product_order_max) continue;
      Group ab = direct_product(a, b, caps);
      Rational mab = m_of(ab), hab = h_m_of(ab);
      Rational mprod = pop[i].m * pop[j].m, hprod = pop[i].h_m * pop[j].h_m;
      bool coprime = gcd_u64(a.size(), b.size()) == 1;
      (coprime ? n_coprime : n_noncoprime)++;
      std::string where = pop[i].tag() + " x " + pop[j].tag();
      if (mab < mprod || (mab == mprod) != coprime)
        r.fail(where, "m(G1 x G2) = " + mab.str() + ", m(G1)m(G2) = " + mprod.str());
      if (hab > hprod || (hab == hprod) != coprime)
        r.fail(where, "h_m(G1 x G2) = " + hab.str() + ", h_m(G1)h_m(G2) = " + hprod.str());
      if (where == "(2,1) C2 x (3,1) C3") r.note(where, "h_m = " + hab.str() + " = 4/3 * 9/5");
    }
  }

  r.findings.insert(r.findings.begin(),
                    {std::to_string(n_sub) + " (G, H) subgroup pairs, " + std::to_string(n_quot) +
                         " normal quotients, " + std::to_string(n_sylow) + " normal cyclic Sylow subgroups (" +
                         std::to_string(n_coset) + " cosets), " + std::to_string(n_coprime) + " coprime and " +
                         std::to_string(n_noncoprime) + " non-coprime products",
                     "Sylow-extension clauses: " + std::to_string(flagged) + " flagged counterexamples"});
  r.caveats.push_back("the Sylow-extension clauses are reported as flags, not failures");
  return r;
}

CheckResult Verifier::check_pgroup_integers() {
  CheckResult r;
  r.id = "thm2.2";
  r.title = "a p-group has integer h_m iff it is cyclic of order p^(p+...+p^s) or D8";
  r.population = catalog_population() +
                 "; every non-trivial prime-power-order entry plus enumerated D/Q/SD of order <= 256 and "
                 "10 constructed p-groups; closed-form C_{p^n} for p in {2,3,5}, n <= p+p^2";
  const Caps& caps = options_.caps;

  std::vector<Sample> groups;
  for (const auto& m : population())
    if (m.group.size() > 1 && as_prime_power(big(m.group.size()))) groups.push_back({m.tag(), m.group});
  const std::size_t from_catalog = groups.size();
  std::vector<GroupExpr> extra;
  for (unsigned k = 5; k <= 8; ++k) {
    extra.push_back(E::dihedral(1u << k));
    extra.push_back(E::quaternion(1u << k));
    extra.push_back(E::semidihedral(1u << k));
  }
  for (auto& e : constructed_p_groups()) extra.push_back(std::move(e));
  for (auto& s : samples(extra, caps)) groups.push_back(std::move(s));

  Group d8 = families::dihedral(8, caps);
  std::vector<std::string> integer_hits;
  for (const auto& [label, g] : groups) {
    auto pp = *as_prime_power(big(g.size()));
    Rational h = h_m_of(g);
    BigInt c = big(cyclic_subgroup_count(g));
    Rational formula = h_m_pgroup_closed(pp.prime, pp.exponent, c);
    if (formula != h) r.fail(label, "h_m = " + h.str() + " but p^(n+1)/((p-1)|C|+1) = " + formula.str());
    bool expected = (is_cyclic(g) && is_exponent_sum(to_u64(pp.prime), pp.exponent)) ||
                    (g.size() == 8 && is_isomorphic(g, d8, caps));
    if (h.is_integer() != expected)
      r.fail(label, "h_m = " + h.str() + (expected ? ", expected an integer" : ", unexpected integer"));
    if (h.is_integer()) {
      integer_hits.push_back(label);
      r.note(label, "h_m = " + h.str());
    }
  }
  r.findings.push_back(std::to_string(from_catalog) + " prime-power-order catalog groups and " +
                       std::to_string(groups.size() - from_catalog) + " constructed p-groups enumerated; integer h_m: " +
                       join(integer_hits, ", "));

  for (std::uint64_t p : {2u, 3u, 5u}) {
    std::vector<std::uint64_t> expected_n;
    {
      std::uint64_t sum = 0, term = 1;
      for (unsigned s = 1; s <= options_.s_max; ++s) expected_n.push_back(sum += term *= p);
    }
    const std::uint64_t n_max = expected_n.back();
    std::vector<std::uint64_t> hits;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      StatReport s = eval_expr(E::cyclic(pow(big(p), n)), EvalContext{nullptr, caps});
      if (s.h_m.is_integer()) {
        hits.push_back(n);
        r.note("C(" + std::to_string(p) + "^" + std::to_string(n) + ")", "h_m = " + s.h_m.str() + ", path " +
                                                                              std::string(to_string(s.path)));
      }
    }
    std::vector<std::string> hit_text;
    for (auto n : hits) hit_text.push_back(std::to_string(n));
    r.findings.push_back("C_{" + std::to_string(p) + "^n}, 1 <= n <= " + std::to_string(n_max) +
                         ": integer h_m at n = " + join(hit_text, ", "));
    if (hits != expected_n) r.fail("C_{" + std::to_string(p) + "^n}", "integer at n = " + join(hit_text, ", "));
  }
  return r;
}

CheckResult Verifier::check_congruences() {
  CheckResult r;
  r.id = "congruences";
  r.title = "cyclic subgroup counts of non-cyclic p-groups: n1' = p+1 mod p^2 (odd p), n1' = 3 mod 4 "
            "(p = 2, not of maximal class), higher n_i' = 0 mod p";
  r.population = catalog_population() + "; non-cyclic prime-power-order entries plus 10 constructed p-groups";
  const Caps& caps = options_.caps;

  std::vector<Sample> groups;
  for (const auto& m : population())
    if (m.group.size() > 1 && as_prime_power(big(m.group.size())) && !is_cyclic(m.group))
      groups.push_back({m.tag(), m.group});
  for (auto& s : samples(constructed_p_groups(), caps)) groups.push_back(std::move(s));

  std::size_t checked = 0;
  std::vector<std::string> skipped;
  for (const auto& [label, g] : groups) {
    auto pp = *as_prime_power(big(g.size()));
    const std::uint64_t p = to_u64(pp.prime);
    if (p == 2 && is_maximal_class_2group(g, caps)) {
      skipped.push_back(label + " |C| = " + std::to_string(cyclic_subgroup_count(g)));
      continue;
    }
    ++checked;
    auto spec = order_spectrum(g);
    std::uint64_t n1 = spec.cyclic_count_of(p);
    std::uint64_t first_mod = p == 2 ? 4 : p * p;
    std::uint64_t first_res = p == 2 ? 3 : (p + 1) % (p * p);
    if (n1 % first_mod != first_res)
      r.fail(label, "n1' = " + std::to_string(n1) + ", expected " + std::to_string(first_res) + " mod " +
                        std::to_string(first_mod));
    for (std::uint64_t d = p * p; d <= spec.exponent(); d *= p) {
      std::uint64_t ni = spec.cyclic_count_of(d);
      if (ni % p != 0) r.fail(label, "n' for order " + std::to_string(d) + " = " + std::to_string(ni));
    }
    std::uint64_t c = spec.cyclic_subgroup_total();
    std::uint64_t expected_c = p == 2 ? 0 : 2 % p;
    if (c % p != expected_c)
      r.fail(label, "|C| = " + std::to_string(c) + ", expected " + std::to_string(expected_c) + " mod " +
                        std::to_string(p));
  }
  r.findings.push_back(std::to_string(checked) + " groups checked; |C| = 2 mod p (odd p) and |C| even (p = 2) "
                       "also verified, so (p-1)|C|+1 is never a power of p");
  r.findings.push_back("maximal class, handled by the D/Q/SD formulas: " + join(skipped, ", "));
  return r;
}

CheckResult Verifier::check_c_formulas() {
  CheckResult r;
  r.id = "cformulas";
  r.title = "|C(D_2^n)| = 2^(n-1)+n, |C(Q_2^n)| = 2^(n-2)+n, |C(SD_2^n)| = 3*2^(n-3)+n";
  r.population = "D, Q for 3 <= n <= 8 and SD for 4 <= n <= 8, by enumeration";
  const Caps& caps = options_.caps;

  struct Family {
    const char* name;
    unsigned n_min;
    std::function<GroupExpr(std::uint64_t)> make;
    std::function<std::uint64_t(unsigned)> formula;
  };
  const std::vector<Family> fams = {
      {"D", 3, [](std::uint64_t o) { return E::dihedral(o); }, [](unsigned n) { return (1ULL << (n - 1)) + n; }},
      {"Q", 3, [](std::uint64_t o) { return E::quaternion(o); }, [](unsigned n) { return (1ULL << (n - 2)) + n; }},
      {"SD", 4, [](std::uint64_t o) { return E::semidihedral(o); },
       [](unsigned n) { return 3 * (1ULL << (n - 3)) + n; }},
  };

  std::map<long long, std::vector<std::string>> by_offset;
  for (const auto& f : fams) {
    std::vector<std::string> values;
    for (unsigned n = f.n_min; n <= 8; ++n) {
      GroupExpr e = f.make(1ULL << n);
      Group g = make(e, caps);
      std::uint64_t via_spectrum = cyclic_subgroup_count(g);
      std::uint64_t distinct = cyclic_subgroups(g).size();
      if (via_spectrum != distinct)
        r.fail(to_string(e), "spectrum count " + std::to_string(via_spectrum) + " != distinct <a> count " +
                                 std::to_string(distinct));
      auto offset = static_cast<long long>(distinct) - static_cast<long long>(f.formula(n));
      by_offset[offset].push_back(to_string(e));
      values.push_back(std::to_string(distinct));
      if (n == 3 && std::string(f.name) == "Q") r.note(to_string(e), "|C| = " + std::to_string(distinct));
    }
    r.findings.push_back(std::string(f.name) + ": |C| = " + join(values, ", ") + " for n = " +
                         std::to_string(f.n_min) + "..8");
  }
  if (by_offset.size() != 1) {
    for (const auto& [offset, labels] : by_offset)
      r.fail(join(labels, ", "), "enumerated |C| minus formula = " + std::to_string(offset));
  } else {
    long long offset = by_offset.begin()->first;
    std::string convention = offset == 0    ? "trivial subgroup counted in C(G)"
                             : offset == 1 ? "trivial subgroup not counted by the formulas"
                                           : "constant offset " + std::to_string(offset);
    r.findings.push_back("single convention for all three formulas: " + convention + " (offset " +
                         std::to_string(offset) + ")");
    r.caveats.push_back("|C(Q8)| = 5 by enumeration: <-1>, <i>, <j>, <k> and the trivial subgroup");
  }
  return r;
}

CheckResult Verifier::check_dihedral_integers() {
  CheckResult r;
  r.id = "prop2.6";
  r.title = "D8 is the only dihedral group with integer h_m; 1 < h_m(D_2n) < 4";
  r.population = "D_2n for 2 <= n <= " + std::to_string(options_.dihedral_nmax) + " by closed form";
  std::vector<std::uint64_t> hits;
  for (std::uint64_t n = 2; n <= options_.dihedral_nmax; ++n) {
    Rational h = h_m_dihedral_closed(big(n));
    std::string label = "D(" + std::to_string(2 * n) + ")";
    if (h.is_integer()) {
      hits.push_back(n);
      if (n != 4) r.fail(label, "integer h_m = " + h.str());
    }
    if (!(Rational(1) < h && h < Rational(4))) r.fail(label, "h_m = " + h.str() + " outside (1, 4)");
    if (n == 3 || n == 4) r.note(label, "h_m = " + h.str());
  }
  if (std::find(hits.begin(), hits.end(), 4) == hits.end()) r.fail("D(8)", "h_m not an integer");
  r.findings.push_back("integer h_m only at n = 4 among " + std::to_string(options_.dihedral_nmax - 1) + " values");
  r.caveats.push_back("bounded scan; the statement is universal");
  return r;
}

CheckResult Verifier::check_sl23_product() {
  CheckResult r;
  r.id = "remark2.7";
  r.title = "h_m(SL(2,3)) = 24/7 and h_m(SL(2,3) x C_7^7) = 24*7^5";
  r.population = "SL(2,3) by enumeration, SL(2,3) x C_7^k by the multiplicative path (k = 7) and by "
                 "enumeration (k = 1, 2)";
  const Caps& caps = options_.caps;
  EvalContext ctx{&catalog_, caps};

  Rational h_sl = h_m_of(families::sl23());
  if (h_sl != ratio(24, 7)) r.fail("SL23", "h_m = " + h_sl.str());
  else r.note("SL23", "h_m = " + h_sl.str());

  GroupExpr big_expr = E::product({E::sl23(), E::cyclic(pow(BigInt(7), 7))});
  StatReport s = eval_expr(big_expr, ctx);
  Rational expected(BigInt(24) * pow(BigInt(7), 5));
  if (s.h_m != expected || s.path != EvalPath::multiplicative)
    r.fail(to_string(big_expr), "h_m = " + s.h_m.str() + ", path " + std::string(to_string(s.path)));
  else r.note(to_string(big_expr), "h_m = " + s.h_m.str() + ", path multiplicative");

  for (unsigned k = 1; k <= 2; ++k) {
    GroupExpr e = E::product({E::sl23(), E::cyclic(pow(BigInt(7), k))});
    Rational brute = h_m_of(make(e, caps));
    Rational product = h_sl * h_m_cyclic_closed(pow(BigInt(7), k));
    if (brute != product) r.fail(to_string(e), "enumerated " + brute.str() + " != product " + product.str());
    else r.note(to_string(e), "h_m = " + brute.str() + " (enumerated, equals the product)");
  }

  if (const CatalogEntry* e = catalog_.find(24, 3)) {
    Group g = build_group(*e, caps);
    if (!is_isomorphic(g, families::sl23(), caps)) r.fail("Cat(24,3)", "not isomorphic to SL23");
  }
  return r;
}

CheckResult Verifier::check_value_two() {
  CheckResult r;
  r.id = "thm2.5";
  r.title = "h_m(G) = 2 iff G is C4 or D8";
  r.population = catalog_population() + "; plus C_n and D_2n for n <= 1000 by closed form";
  require_complete(r);
  const Caps& caps = options_.caps;

  Group c4 = families::cyclic(4, caps);
  Group d8 = families::dihedral(8, caps);
  bool has_c4 = false, has_d8 = false;
  for (const auto& m : population()) {
    if (m.h_m != Rational(2)) continue;
    bool is_c4 = m.group.size() == 4 && is_isomorphic(m.group, c4, caps);
    bool is_d8 = m.group.size() == 8 && is_isomorphic(m.group, d8, caps);
    if (!is_c4 && !is_d8) {
      r.fail(m.tag(), "h_m = 2 but not C4 or D8");
      continue;
    }
    if ((is_c4 && has_c4) || (is_d8 && has_d8)) r.fail(m.tag(), "duplicate isomorphism type");
    has_c4 |= is_c4;
    has_d8 |= is_d8;
    r.note(m.tag(), "h_m = 2/1");
  }
  if (!has_c4) r.fail("C4", "no catalog group of order 4 with h_m = 2");
  if (!has_d8) r.fail("D8", "no catalog group of order 8 with h_m = 2");

  for (std::uint64_t n = 1; n <= 1000; ++n) {
    if (h_m_cyclic_closed(big(n)) == Rational(2) && n != 4) r.fail("C(" + std::to_string(n) + ")", "h_m = 2/1");
    if (h_m_dihedral_closed(big(n)) == Rational(2) && n != 4)
      r.fail("D(" + std::to_string(2 * n) + ")", "h_m = 2/1");
  }
  return r;
}

CheckResult Verifier::check_spectral_sum() {
  CheckResult r;
  r.id = "thm2.5-sum";
  r.title = "h_m(G) = 2 forces sum over cyclic subgroups of (phi(d)-1) <= 1";
  r.population = catalog_population();
  require_complete(r);
  std::vector<std::string> small_sum;
  for (const auto& m : population()) {
    std::uint64_t s = spectral_sum(m.spectrum);
    if (s <= 1) small_sum.push_back(m.entry->name + " (" + std::to_string(s) + ", h_m = " + m.h_m.str() + ")");
    if (m.h_m == Rational(2)) {
      if (s > 1) r.fail(m.tag(), "h_m = 2/1 with sum " + std::to_string(s));
      else r.note(m.tag(), "sum = " + std::to_string(s));
    }
  }
  r.findings.push_back("groups with sum <= 1: " + join(small_sum, ", "));
  return r;
}

CheckResult Verifier::check_at_most_two() {
  CheckResult r;
  r.id = "thm2.8";
  r.title = "the non-trivial groups with h_m <= 2 are C2^n, C3, S3, C4, D8; min h_m = 4/3 at C2";
  r.population = catalog_population() + "; plus C2^n for n <= 10 by enumeration";
  require_complete(r);
  const Caps& caps = options_.caps;

  const std::vector<GroupExpr> expected = {
      E::elementary_abelian(2, 1), E::elementary_abelian(2, 2), E::elementary_abelian(2, 3),
      E::elementary_abelian(2, 4), E::cyclic(3), E::symmetric(3), E::cyclic(4), E::dihedral(8),
  };
  std::vector<Sample> targets = samples(expected, caps);
  std::vector<bool> matched(targets.size(), false);

  std::optional<Rational> min_h;
  std::vector<std::string> argmin;
  for (const auto& m : population()) {
    if (m.group.size() < 2) continue;
    if (!min_h || m.h_m < *min_h) {
      min_h = m.h_m;
      argmin = {m.tag()};
    } else if (m.h_m == *min_h) {
      argmin.push_back(m.tag());
    }
    if (m.h_m > Rational(2)) continue;
    bool found = false;
    for (std::size_t t = 0; t < targets.size(); ++t) {
      if (targets[t].group.size() != m.group.size() || !is_isomorphic(targets[t].group, m.group, caps)) continue;
      if (matched[t]) r.fail(m.tag(), "second group isomorphic to " + targets[t].label);
      matched[t] = found = true;
      r.note(m.tag(), "h_m = " + m.h_m.str());
    }
    if (!found) r.fail(m.tag(), "h_m = " + m.h_m.str() + " <= 2 but not in the list");
  }
  for (std::size_t t = 0; t < targets.size(); ++t)
    if (!matched[t]) r.fail(targets[t].label, "listed but absent from the catalog scan");

  if (!min_h || *min_h != ratio(4, 3) || argmin.size() != 1)
    r.fail(join(argmin, ", "), "minimum h_m = " + (min_h ? min_h->str() : std::string("none")));
  else if (argmin.size() == 1)
    r.findings.push_back("minimum h_m over non-trivial catalog groups: 4/3 at " + argmin.front());

  for (unsigned n = 5; n <= 10; ++n) {
    Rational h = h_m_of(families::elementary_abelian(2, n, caps));
    if (h > Rational(2)) r.fail("E(2," + std::to_string(n) + ")", "h_m = " + h.str());
  }
  return r;
}

CheckResult Verifier::check_value_three() {
  CheckResult r;
  r.id = "prop2.9-2.10";
  r.title = "no group of odd order and no nilpotent group has h_m = 3; Dic3 attains 3";
  r.population = catalog_population() + "; plus C_n for n <= 10000 by closed form; Dic3, C2^n (n <= 8), C3";
  const Caps& caps = options_.caps;

  for (const auto& m : population()) {
    if (m.h_m != Rational(3)) continue;
    if (m.group.size() % 2 == 1) r.fail(m.tag(), "odd order with h_m = 3");
    if (is_nilpotent(m.group)) r.fail(m.tag(), "nilpotent with h_m = 3");
    r.note(m.tag(), "h_m = 3/1, non-nilpotent");
  }
  for (std::uint64_t n = 1; n <= 10000; ++n)
    if (h_m_cyclic_closed(big(n)) == Rational(3)) r.fail("C(" + std::to_string(n) + ")", "h_m = 3/1");

  Group dic3 = families::dicyclic(3, caps);
  Rational h = h_m_of(dic3);
  if (h != Rational(3) || dic3.size() % 2 != 0 || is_nilpotent(dic3))
    r.fail("Dic(3)", "h_m = " + h.str() + (is_nilpotent(dic3) ? ", nilpotent" : ", non-nilpotent"));
  else r.note("Dic(3)", "h_m = 3/1, order 12, non-nilpotent");
  if (const CatalogEntry* e = catalog_.find(12, 1)) {
    if (!is_isomorphic(build_group(*e, caps), dic3, caps)) r.fail("Cat(12,1)", "not isomorphic to Dic(3)");
  }

  for (unsigned n = 1; n <= 8; ++n) {
    Rational got = h_m_of(families::elementary_abelian(2, n, caps));
    Rational want(pow(BigInt(2), n + 1), pow(BigInt(2), n) + 1);
    if (got != want) r.fail("E(2," + std::to_string(n) + ")", "h_m = " + got.str() + ", expected " + want.str());
  }
  Rational c3 = h_m_of(families::cyclic(3, caps));
  if (c3 != ratio(9, 5)) r.fail("C(3)", "h_m = " + c3.str());
  r.findings.push_back("h_m(C2^n) = 2^(n+1)/(2^n+1) for n <= 8 and h_m(C3) = 9/5 by enumeration");
  return r;
}

bool ScanPredicate::accepts(const Rational& h) const {
  switch (kind) {
    case Kind::all: return true;
    case Kind::integer: return h.is_integer();
    case Kind::eq: return h == value;
    case Kind::le: return h <= value;
  }
  return false;
}

std::string ScanPredicate::str() const {
  switch (kind) {
    case Kind::all: return "all";
    case Kind::integer: return "integer";
    case Kind::eq: return "eq=" + value.str();
    case Kind::le: return "le=" + value.str();
  }
  return "all";
}

ScanPredicate parse_predicate(std::string_view text) {
  ScanPredicate p;
  if (text == "all") {
    p.kind = ScanPredicate::Kind::all;
    return p;
  }
  if (text == "integer") return p;
  auto eq = text.find('=');
  if (eq != std::string_view::npos) {
    auto key = text.substr(0, eq);
    auto value = parse_rational(text.substr(eq + 1));
    if (value && (key == "eq" || key == "le")) {
      p.kind = key == "eq" ? ScanPredicate::Kind::eq : ScanPredicate::Kind::le;
      p.value = *value;
      return p;
    }
  }
  throw std::invalid_argument("bad predicate '" + std::string(text) + "'; expected all, integer, eq=K or le=R");
}

ScanReport scan_integer_hm(const Catalog& catalog, const ScanOptions& options) {
  ScanReport report;
  const std::uint64_t covered = catalog.complete_up_to();
  auto within = [&](const BigInt& order) {
    return !options.max_order || order <= static_cast<unsigned long>(*options.max_order);
  };
  auto add = [&](ScanRow row) {
    if (!within(row.order) || !options.predicate.accepts(row.h_m)) return;
    row.integer = row.h_m.is_integer();
    report.rows.push_back(std::move(row));
  };

  for (const auto& e : catalog.entries()) {
    Group g = build_group(e, options.caps);
    add({e.name, "catalog", big(e.order), e.id, h_m_of(g), false});
  }
  for (std::uint64_t n = covered + 1; n <= options.cyclic_max; ++n)
    add({"C(" + std::to_string(n) + ")", "cyclic", big(n), 0, h_m_cyclic_closed(big(n)), false});
  for (std::uint64_t n = 1; n <= options.dihedral_max; ++n) {
    if (2 * n <= covered) continue;
    add({"D(" + std::to_string(2 * n) + ")", "dihedral", big(2 * n), 0, h_m_dihedral_closed(big(n)), false});
  }
  EvalContext ctx{&catalog, options.caps};
  for (const auto& e : options.expressions) {
    StatReport s = eval_expr(e, ctx);
    add({to_string(e), "expr", s.order, 0, s.h_m, false});
  }
  std::stable_sort(report.rows.begin(), report.rows.end(), [](const ScanRow& a, const ScanRow& b) {
    if (a.order != b.order) return a.order < b.order;
    if (a.id != b.id) return a.id < b.id;
    return a.label < b.label;
  });

  std::ostringstream pop;
  pop << "catalog (" << catalog.entries().size() << " groups, exhaustive up to order " << covered << ")";
  if (options.cyclic_max > covered) pop << ", C_n for " << covered + 1 << " <= n <= " << options.cyclic_max;
  if (2 * options.dihedral_max > covered) pop << ", D_2n for 2n > " << covered << " and n <= " << options.dihedral_max;
  if (!options.expressions.empty()) pop << ", " << options.expressions.size() << " expressions";
  if (options.max_order) pop << "; order <= " << *options.max_order;
  pop << "; predicate " << options.predicate.str();
  report.population = pop.str();
  report.caveats.push_back("exhaustive up to order N=" + std::to_string(covered) + "; rows above order " +
                           std::to_string(covered) + " are family samples, not exhaustive");
  for (const auto& m : catalog.missing_orders()) report.caveats.push_back("catalog incomplete: " + m);
  return report;
}

nlohmann::ordered_json to_json(const ScanReport& r, int digits) {
  nlohmann::ordered_json j;
  j["population"] = r.population;
  j["caveats"] = r.caveats;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : r.rows) {
    nlohmann::ordered_json o;
    o["label"] = row.label;
    o["source"] = row.source;
    o["order"] = row.order.get_str();
    o["id"] = row.id;
    o["h_m"] = row.h_m.str();
    o["h_m_approx"] = row.h_m.to_decimal(digits);
    o["integer"] = row.integer;
    rows.push_back(std::move(o));
  }
  j["rows"] = rows;
  return j;
}

}  // namespace hm
