// Acceptance run: one line per criterion with its tolerance and time budget.
// Exit status is 0 when every criterion has its pinned outcome.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hm/catalog.hpp"
#include "hm/cli/parser.hpp"
#include "hm/constructions.hpp"
#include "hm/exactmath.hpp"
#include "hm/families.hpp"
#include "hm/spectrum.hpp"
#include "hm/statistics.hpp"
#include "hm/structure.hpp"
#include "hm/verifier.hpp"
#include "oracles.hpp"

using hm::BigInt;
using hm::Group;
using hm::Rational;

namespace {

namespace fam = hm::families;

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back("violated: " + what);
    }
  }
  void note(const std::string& what) { notes.push_back(what); }
};

struct Criterion {
  int number;
  std::string title;
  std::string tolerance;
  double budget_s;
  bool expected_pass;
  std::function<Outcome()> run;
};

Rational frac(long n, long d) { return Rational(BigInt(n), BigInt(d)); }

Rational from_oracle(const oracle::Frac& f) {
  return Rational(BigInt(static_cast<long>(f.num)), BigInt(static_cast<long>(f.den)));
}

const hm::Catalog& catalog() { return hm::Catalog::embedded(); }

struct Member {
  const hm::CatalogEntry* entry;
  Group group;
  Rational h_m;
};

const std::vector<Member>& members() {
  static const std::vector<Member> all = [] {
    std::vector<Member> out;
    for (const auto& e : catalog().entries()) {
      Group g = hm::build_group(e);
      Rational h = Rational(BigInt(static_cast<unsigned long>(g.size()))) / from_oracle(oracle::naive_m(g));
      out.push_back({&e, std::move(g), std::move(h)});
    }
    return out;
  }();
  return all;
}

std::string tag(const hm::CatalogEntry& e) {
  return "(" + std::to_string(e.order) + "," + std::to_string(e.id) + ") " + e.name;
}

hm::StatReport eval(const std::string& text) {
  hm::EvalContext ctx{&catalog(), {}};
  return hm::eval_expr(hm::cli::parse_expr(text), ctx);
}

// Matches `found` against `expected` up to isomorphism, one to one.
bool same_up_to_iso(const std::vector<const Group*>& found, const std::vector<Group>& expected, Outcome& out) {
  std::vector<bool> used(expected.size(), false);
  bool ok = found.size() == expected.size();
  for (const Group* g : found) {
    bool hit = false;
    for (std::size_t i = 0; i < expected.size() && !hit; ++i)
      if (!used[i] && g->size() == expected[i].size() && hm::is_isomorphic(*g, expected[i])) used[i] = hit = true;
    if (!hit) {
      ok = false;
      out.note("unexpected " + g->label());
    }
  }
  for (std::size_t i = 0; i < expected.size(); ++i)
    if (!used[i]) out.note("missing " + expected[i].label());
  return ok;
}

Outcome exact_values() {
  Outcome o;
  o.require(eval("C(1)").h_m == Rational(1), "h_m(1) = 1");
  o.require(eval("C(4)").h_m == Rational(2), "h_m(C4) = 2");
  o.require(eval("D(8)").h_m == Rational(2), "h_m(D8) = 2");
  o.require(eval("SL23").h_m == frac(24, 7), "h_m(SL(2,3)) = 24/7");
  auto big = eval("SL23 x C(7^7)");
  o.require(big.h_m == Rational(24 * hm::pow(BigInt(7), 5)), "h_m(SL(2,3) x C_7^7) = 24*7^5");
  o.require(big.h_m == Rational(403368), "24*7^5 = 403368");
  o.require(big.path == hm::EvalPath::multiplicative, "SL(2,3) x C_7^7 on the multiplicative path");
  o.require(eval("Cat(12,1)").h_m == Rational(3), "h_m(Cat(12,1)) = 3");
  std::optional<Rational> min_h;
  std::vector<std::string> argmin;
  for (const auto& m : members()) {
    if (m.group.size() == 1) continue;
    if (!min_h || m.h_m < *min_h) {
      min_h = m.h_m;
      argmin = {m.entry->name};
    } else if (m.h_m == *min_h) {
      argmin.push_back(m.entry->name);
    }
  }
  o.require(min_h && *min_h == frac(4, 3) && argmin == std::vector<std::string>{"C2"}, "min h_m = 4/3 only at C2");
  o.note("SL(2,3) x C_7^7: h_m = " + big.h_m.str() + " via " + std::string(hm::to_string(big.path)));
  return o;
}

Outcome pgroup_integers() {
  Outcome o;
  std::vector<const Group*> integer_groups;
  std::size_t checked = 0, in_stated_orders = 0;
  for (const auto& m : members()) {
    auto pp = hm::as_prime_power(BigInt(static_cast<unsigned long>(m.group.size())));
    if (!pp) continue;
    ++checked;
    if (m.group.size() == 4 || m.group.size() == 8 || m.group.size() == 9 || m.group.size() == 16) ++in_stated_orders;
    if (m.h_m.is_integer()) integer_groups.push_back(&m.group);
  }
  o.require(same_up_to_iso(integer_groups, {fam::cyclic(4), fam::dihedral(8)}, o),
            "integer h_m among prime-power-order catalog groups exactly C4, D8");
  o.note(std::to_string(checked) + " non-trivial prime-power-order catalog groups, " +
         std::to_string(in_stated_orders) + " of orders 4, 8, 9, 16");
  std::vector<std::string> hits;
  for (unsigned long p : {2UL, 3UL, 5UL}) {
    for (unsigned long n = 1; n <= p + p * p; ++n) {
      auto r = eval("C(" + std::to_string(p) + "^" + std::to_string(n) + ")");
      o.require(r.path == hm::EvalPath::closed_form, "C_{p^n} on the closed-form path");
      bool want = n == p || n == p + p * p;
      o.require(r.h_m.is_integer() == want, "C(" + std::to_string(p) + "^" + std::to_string(n) +
                                                ") integer iff n in {p, p+p^2}");
      if (r.h_m.is_integer()) hits.push_back("C(" + std::to_string(p) + "^" + std::to_string(n) + ")");
    }
  }
  for (const char* listed : {"C(2^2)", "C(2^6)", "C(3^12)", "C(5^30)"})
    o.require(std::find(hits.begin(), hits.end(), listed) != hits.end(), std::string(listed) + " integer");
  std::string joined;
  for (const auto& h : hits) joined += (joined.empty() ? "" : ", ") + h;
  o.note("integer cyclic p-power cases: " + joined);
  return o;
}

std::vector<const Group*> scan_rows(const hm::ScanReport& rep, std::vector<Group>& storage) {
  storage.clear();
  for (const auto& row : rep.rows)
    if (row.source == "catalog") storage.push_back(catalog().get(row.order.get_ui(), row.id));
  std::vector<const Group*> out;
  for (const auto& g : storage) out.push_back(&g);
  return out;
}

bool has_caveat(const hm::ScanReport& rep) {
  for (const auto& c : rep.caveats)
    if (c.find("exhaustive up to order N=16") != std::string::npos) return true;
  return false;
}

Outcome small_hm_scans() {
  Outcome o;
  hm::ScanOptions two;
  two.max_order = 16;
  two.predicate = hm::parse_predicate("eq=2");
  auto rep2 = hm::scan_integer_hm(catalog(), two);
  std::vector<Group> store;
  o.require(rep2.rows.size() == 2, "h_m = 2 scan returns two rows");
  o.require(same_up_to_iso(scan_rows(rep2, store), {fam::cyclic(4), fam::dihedral(8)}, o), "h_m = 2 iff C4 or D8");
  o.require(has_caveat(rep2), "exhaustiveness caveat on the h_m = 2 scan");

  hm::ScanOptions le;
  le.max_order = 16;
  le.predicate = hm::parse_predicate("le=2");
  auto rep_le = hm::scan_integer_hm(catalog(), le);
  auto rows = scan_rows(rep_le, store);
  std::vector<const Group*> nontrivial;
  for (const Group* g : rows)
    if (g->size() > 1) nontrivial.push_back(g);
  o.require(rows.size() == nontrivial.size() + 1, "trivial group listed once with h_m = 1");
  std::vector<Group> expected = {fam::elementary_abelian(2, 1), fam::elementary_abelian(2, 2),
                                 fam::elementary_abelian(2, 3), fam::elementary_abelian(2, 4),
                                 fam::cyclic(3),               fam::symmetric(3),
                                 fam::cyclic(4),               fam::dihedral(8)};
  o.require(same_up_to_iso(nontrivial, expected, o), "1 < h_m <= 2 iff C2^n, C3, S3, C4, D8");
  o.require(has_caveat(rep_le), "exhaustiveness caveat on the h_m <= 2 scan");
  o.note(std::to_string(rep2.rows.size()) + " rows with h_m = 2, " + std::to_string(nontrivial.size()) +
         " non-trivial rows with h_m <= 2");
  return o;
}

Outcome dihedral_scan() {
  Outcome o;
  std::vector<unsigned long> integers;
  bool window = true;
  for (unsigned long n = 2; n <= 100000; ++n) {
    Rational h = hm::h_m_dihedral_closed(BigInt(n));
    if (h.is_integer()) integers.push_back(n);
    if (!(Rational(1) < h && h < Rational(4))) window = false;
  }
  o.require(integers == std::vector<unsigned long>{4}, "integer h_m(D_2n) only at n = 4");
  o.require(window, "1 < h_m(D_2n) < 4 for 2 <= n <= 100000");
  o.note("99999 closed-form values, integer at n = 4 only");
  return o;
}

Outcome value_three() {
  Outcome o;
  std::size_t odd = 0, nilpotent = 0;
  for (const auto& m : members()) {
    if (m.group.size() % 2 == 1) {
      ++odd;
      o.require(m.h_m != Rational(3), "odd order " + tag(*m.entry) + " has h_m != 3");
    }
    if (hm::is_nilpotent(m.group)) {
      ++nilpotent;
      o.require(m.h_m != Rational(3), "nilpotent " + tag(*m.entry) + " has h_m != 3");
    }
  }
  Group dic = fam::dicyclic(3);
  o.require(dic.size() % 2 == 0, "Dic3 has even order");
  o.require(!hm::is_nilpotent(dic), "Dic3 is not nilpotent");
  o.require(hm::h_m_of(dic) == Rational(3), "h_m(Dic3) = 3");
  o.require(hm::is_isomorphic(dic, catalog().get(12, 1)), "Dic3 is Cat(12,1)");
  o.note(std::to_string(odd) + " odd-order and " + std::to_string(nilpotent) + " nilpotent catalog groups");
  return o;
}

Outcome minimum_bound() {
  Outcome o;
  std::vector<std::string> below, equal_non_p, strict_p;
  for (const auto& m : members()) {
    const Group& g = m.group;
    if (g.size() == 1) continue;
    auto n = BigInt(static_cast<unsigned long>(g.size()));
    BigInt p = hm::smallest_prime_divisor(n);
    BigInt c(static_cast<unsigned long>(oracle::distinct_cyclic_subgroups(g)));
    Rational bound = Rational(p * n) / Rational((p - 1) * c + 1);
    Rational remark = Rational(p * n) / Rational((p - 1) * n + 1);
    bool p_group = hm::as_prime_power(n).has_value();
    o.require(m.h_m >= remark, tag(*m.entry) + ": h_m >= p|G|/((p-1)|G|+1)");
    if (m.h_m < bound) below.push_back(tag(*m.entry) + " " + m.h_m.str() + " < " + bound.str());
    if (m.h_m == bound && !p_group) equal_non_p.push_back(tag(*m.entry));
    if (m.h_m != bound && p_group) strict_p.push_back(tag(*m.entry));
  }
  auto list = [](const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size() && i < 4; ++i) s += (i ? "; " : "") + v[i];
    if (v.size() > 4) s += "; ...";
    return s;
  };
  o.require(below.empty(), "h_m >= p|G|/((p-1)|C(G)|+1) on every catalog group");
  o.require(equal_non_p.empty(), "equality only for prime-power orders");
  o.require(strict_p.empty(), "equality for every prime-power order");
  if (!below.empty()) o.note(std::to_string(below.size()) + " below the bound: " + list(below));
  if (!equal_non_p.empty()) o.note(std::to_string(equal_non_p.size()) + " equal, not p-groups: " + list(equal_non_p));
  o.note("the weaker bound with |G| in place of |C(G)| holds on all catalog groups");
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  hm::Caps no_table;
  no_table.table_limit = 0;
  for (unsigned long n = 1; n <= 2000; ++n) {
    Group g = fam::cyclic(n, no_table);
    Rational brute;
    for (auto ord : g.element_orders()) brute += Rational(BigInt(1), BigInt(static_cast<unsigned long>(ord)));
    if (hm::m_cyclic_closed(BigInt(n)) != brute) o.require(false, "m(C_" + std::to_string(n) + ") closed = brute");
  }
  for (unsigned long n = 1; n <= 300; ++n) {
    Group g = fam::dihedral(2 * n);
    Rational brute = Rational(BigInt(2 * n)) / from_oracle(oracle::naive_m(g));
    if (hm::h_m_dihedral_closed(BigInt(n)) != brute) o.require(false, "h_m(D_" + std::to_string(2 * n) + ") closed = brute");
  }
  for (const auto& m : members()) {
    auto s = hm::order_spectrum(m.group);
    o.require(s.total() == m.group.size(), tag(*m.entry) + ": sum n_d = |G|");
    for (const auto& [d, count] : s.entries())
      o.require(count % oracle::phi(d) == 0, tag(*m.entry) + ": phi(d) | n_d");
    o.require(s.cyclic_subgroup_total() == oracle::distinct_cyclic_subgroups(m.group),
              tag(*m.entry) + ": |C| from spectrum = distinct <a>");
  }
  o.note("C_n for n <= 2000, D_2n for n <= 300, " + std::to_string(members().size()) + " catalog spectra");
  return o;
}

Outcome monotonicity_suite() {
  Outcome o;
  hm::Verifier v(catalog());
  auto r = v.run("prop2.1-2.2");
  o.require(r.status() == "pass", "verifier suite prop2.1-2.2 passes");
  for (const auto& w : r.witnesses)
    if (!r.passed) o.note("counterexample " + w.group + ": " + w.values);
  std::size_t pairs = 0;
  for (const auto& a : members())
    for (const auto& b : members()) {
      if (a.group.size() * b.group.size() > 256) continue;
      ++pairs;
      Group ab = hm::direct_product(a.group, b.group);
      Rational m = from_oracle(oracle::naive_m(ab));
      Rational ma = Rational(BigInt(static_cast<unsigned long>(a.group.size()))) / a.h_m;
      Rational mb = Rational(BigInt(static_cast<unsigned long>(b.group.size()))) / b.h_m;
      bool coprime = hm::gcd_u64(a.group.size(), b.group.size()) == 1;
      o.require(m >= ma * mb, "m(A x B) >= m(A) m(B)");
      o.require((m == ma * mb) == coprime, "m(A x B) = m(A) m(B) iff coprime");
      if (coprime) o.require(hm::h_m_of(ab) == a.h_m * b.h_m, "h_m multiplicative on coprime pairs");
    }
  for (const auto& f : r.findings) o.note(f);
  o.note(std::to_string(pairs) + " catalog pairs re-checked against the element-sum oracle");
  return o;
}

// Cyclic subgroup counts by order, from the distinct <a> sets.
std::map<std::uint64_t, std::uint64_t> cyclic_counts(const Group& g) {
  std::set<std::vector<hm::Element>> seen;
  std::map<std::uint64_t, std::uint64_t> out;
  for (hm::Element a = 0; a < g.size(); ++a) {
    std::vector<hm::Element> members{g.identity()};
    for (hm::Element x = a; x != g.identity(); x = g.op(x, a)) members.push_back(x);
    std::sort(members.begin(), members.end());
    std::uint64_t size = members.size();
    if (seen.insert(std::move(members)).second) ++out[size];
  }
  return out;
}

Outcome congruences() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& m : members()) {
    const Group& g = m.group;
    if (g.size() == 1 || hm::is_cyclic(g)) continue;
    auto pp = hm::as_prime_power(BigInt(static_cast<unsigned long>(g.size())));
    if (!pp) continue;
    std::uint64_t p = pp->prime.get_ui();
    auto counts = cyclic_counts(g);
    if (p == 2) {
      bool maximal_class = false;
      if (g.size() >= 8) {
        maximal_class = hm::is_isomorphic(g, fam::dihedral(g.size())) ||
                        hm::is_isomorphic(g, fam::generalized_quaternion(g.size())) ||
                        (g.size() >= 16 && hm::is_isomorphic(g, fam::semidihedral(g.size())));
      }
      if (maximal_class) continue;
      o.require(counts[2] % 4 == 3, tag(*m.entry) + ": n1' = 3 mod 4");
    } else {
      o.require(counts[p] % (p * p) == (p + 1) % (p * p), tag(*m.entry) + ": n1' = p+1 mod p^2");
    }
    for (const auto& [d, c] : counts)
      if (d > p) o.require(c % p == 0, tag(*m.entry) + ": n_i' = 0 mod p for order " + std::to_string(d));
    ++checked;
  }
  hm::Verifier v(catalog());
  o.require(v.run("congruences").status() == "pass", "verifier check congruences passes");
  o.note(std::to_string(checked) + " non-cyclic catalog p-groups outside maximal class");
  return o;
}

Outcome c_formulas() {
  Outcome o;
  std::ostringstream counts;
  for (unsigned n = 3; n <= 8; ++n) {
    std::uint64_t order = 1ULL << n;
    std::uint64_t d = oracle::distinct_cyclic_subgroups(fam::dihedral(order));
    std::uint64_t q = oracle::distinct_cyclic_subgroups(fam::generalized_quaternion(order));
    o.require(d == (1ULL << (n - 1)) + n, "|C(D_2^" + std::to_string(n) + ")| = 2^(n-1)+n");
    o.require(q == (1ULL << (n - 2)) + n, "|C(Q_2^" + std::to_string(n) + ")| = 2^(n-2)+n");
    counts << " D" << order << "=" << d << " Q" << order << "=" << q;
    if (n >= 4) {
      std::uint64_t sd = oracle::distinct_cyclic_subgroups(fam::semidihedral(order));
      o.require(sd == 3 * (1ULL << (n - 3)) + n, "|C(SD_2^" + std::to_string(n) + ")| = 3*2^(n-3)+n");
      counts << " SD" << order << "=" << sd;
    }
  }
  o.note("convention: trivial subgroup counted (offset 0) for all three formulas;" + counts.str());
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "exact values", "exact rational equality", 1, true, exact_values},
      {2, "p-groups with integer h_m", "exact equality", 5, true, pgroup_integers},
      {3, "h_m = 2 and h_m <= 2 scans to order 16", "exact, up to isomorphism", 10, true, small_hm_scans},
      {4, "dihedral scan 2 <= n <= 10^5", "exact", 10, true, dihedral_scan},
      {5, "no odd-order or nilpotent group with h_m = 3", "exact", 5, true, value_three},
      {6, "minimum bound with |C(G)|", "exact", 5, false, minimum_bound},
      {7, "closed forms against brute force", "exact", 60, true, oracle_equivalence},
      {8, "monotonicity and multiplicativity suite", "exact", 120, true, monotonicity_suite},
      {9, "cyclic-subgroup count congruences", "exact", 5, true, congruences},
      {10, "|C| formulas for D, Q, SD at n = 3..8", "exact", 10, true, c_formulas},
  };

  int passed = 0, failed = 0, unexpected = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.ok = false;
      out.notes.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_budget = secs < c.budget_s;
    if (!in_budget) out.notes.push_back("over time budget");
    bool pass = out.ok && in_budget;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s / budget %.0f s", secs, c.budget_s);
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << c.number << " " << c.title << " (" << c.tolerance << "; "
              << timing << ")";
    if (!c.expected_pass) std::cout << " [expected FAIL]";
    std::cout << '\n';
    for (const auto& n : out.notes) std::cout << "       " << n << '\n';
    (pass ? passed : failed)++;
    if (pass != c.expected_pass) ++unexpected;
  }
  std::cout << passed << " passed, " << failed << " failed, " << unexpected << " unexpected\n";
  return unexpected == 0 ? 0 : 1;
}
