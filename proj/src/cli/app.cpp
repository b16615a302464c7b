#include "hm/cli/app.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hm/catalog.hpp"
#include "hm/cli/format.hpp"
#include "hm/cli/parser.hpp"
#include "hm/error.hpp"
#include "hm/statistics.hpp"
#include "hm/structure.hpp"
#include "hm/verifier.hpp"

namespace hm::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string catalog_path;
  std::string format = "table";
  std::optional<int> digits;
  std::vector<std::string> caps;
  bool timestamp = false;
};

Caps parse_caps(const std::vector<std::string>& items) {
  Caps caps;
  const std::map<std::string, std::size_t Caps::*> keys = {
      {"elements", &Caps::max_elements},
      {"table", &Caps::table_limit},
      {"subgroups", &Caps::subgroup_limit},
      {"iso", &Caps::isomorphism_limit},
  };
  for (const auto& item : items) {
    auto eq = item.find('=');
    auto key = keys.find(item.substr(0, eq));
    if (eq == std::string::npos || key == keys.end())
      throw UsageError("bad --caps entry '" + item + "'; expected elements=N, table=N, subgroups=N or iso=N");
    try {
      std::size_t used = 0;
      auto value = std::stoull(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument(item);
      caps.*(key->second) = value;
    } catch (const std::logic_error&) {
      throw UsageError("bad --caps value in '" + item + "'");
    }
  }
  return caps;
}

class Session {
 public:
  Session(const Globals& g, std::ostream& out) : globals_(g), out_(out), caps_(parse_caps(g.caps)) {
    if (g.format != "table" && g.format != "json" && g.format != "csv")
      throw UsageError("--format must be table, json or csv");
    std::string path = g.catalog_path;
    if (path.empty())
      if (const char* env = std::getenv("HM_CATALOG")) path = env;
    if (path.empty()) {
      catalog_ = &Catalog::embedded();
    } else {
      owned_ = std::make_unique<Catalog>(load_catalog_file(path));
      catalog_ = owned_.get();
    }
  }

  const Catalog& catalog() const { return *catalog_; }
  const Caps& caps() const { return caps_; }
  const std::string& format() const { return globals_.format; }
  int digits() const { return globals_.digits.value_or(6); }
  bool decimals() const { return globals_.digits.has_value(); }
  std::ostream& out() { return out_; }

  void emit(const Table& t) {
    if (format() == "csv") {
      write_csv(out_, t);
    } else {
      write_table(out_, t);
    }
  }

  void emit(nlohmann::ordered_json doc) {
    if (globals_.timestamp) doc["generated"] = now();
    out_ << doc.dump(2) << '\n';
  }

  void stamp_text() {
    if (globals_.timestamp && format() == "table") out_ << "generated: " << now() << '\n';
  }

 private:
  static std::string now() {
    std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
  }

  const Globals& globals_;
  std::ostream& out_;
  Caps caps_;
  std::unique_ptr<Catalog> owned_;
  const Catalog* catalog_ = nullptr;
};

std::string spectrum_text(const OrderSpectrum& s) {
  std::string out;
  for (const auto& e : s.entries()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e.order) + ":" + std::to_string(e.count);
  }
  return out;
}

int cmd_stats(Session& s, const std::vector<std::string>& exprs) {
  std::vector<StatReport> reports;
  EvalContext ctx{&s.catalog(), s.caps()};
  for (const auto& text : exprs) reports.push_back(eval_expr(parse_expr(text), ctx));

  if (s.format() == "json") {
    nlohmann::ordered_json doc;
    doc["command"] = "stats";
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(to_json(r, s.digits()));
    doc["reports"] = arr;
    s.emit(std::move(doc));
    return kOk;
  }
  if (s.format() == "csv") {
    Table t;
    t.header = {"label", "order", "exponent", "m", "h_m"};
    if (s.decimals()) t.header.push_back("h_m_approx");
    for (const char* h : {"c_count", "integer", "path", "spectrum"}) t.header.emplace_back(h);
    for (const auto& r : reports) {
      std::vector<std::string> row = {r.label, r.order.get_str(), r.exponent.get_str(), r.m.str(), r.h_m.str()};
      if (s.decimals()) row.push_back(r.h_m.to_decimal(s.digits()));
      row.push_back(r.c_count ? r.c_count->get_str() : "");
      row.emplace_back(r.integer_flag ? "true" : "false");
      row.emplace_back(to_string(r.path));
      row.push_back(r.spectrum ? spectrum_text(*r.spectrum) : "");
      t.rows.push_back(std::move(row));
    }
    s.emit(t);
    return kOk;
  }
  s.stamp_text();
  bool first = true;
  for (const auto& r : reports) {
    if (!first) s.out() << '\n';
    first = false;
    Table t;
    t.header = {"field", "value"};
    t.rows.push_back({"group", r.label});
    t.rows.push_back({"order", r.order.get_str()});
    t.rows.push_back({"exponent", r.exponent.get_str()});
    if (r.spectrum) t.rows.push_back({"spectrum", spectrum_text(*r.spectrum)});
    t.rows.push_back({"m", r.m.str()});
    t.rows.push_back({"h_m", r.h_m.str()});
    if (s.decimals()) t.rows.push_back({"h_m approx", r.h_m.to_decimal(s.digits())});
    if (r.c_count) t.rows.push_back({"|C(G)|", r.c_count->get_str()});
    t.rows.push_back({"integer", r.integer_flag ? "yes" : "no"});
    t.rows.push_back({"path", std::string(to_string(r.path))});
    s.emit(t);
  }
  return kOk;
}

struct ScanFlags {
  std::optional<std::uint64_t> max_order;
  std::string families;
  std::string predicate = "integer";
  std::vector<std::string> exprs;
};

int cmd_scan(Session& s, const ScanFlags& f) {
  ScanOptions opt;
  opt.max_order = f.max_order;
  opt.caps = s.caps();
  try {
    opt.predicate = parse_predicate(f.predicate);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!f.families.empty()) {
    opt.cyclic_max = 0;
    opt.dihedral_max = 0;
    std::stringstream ss(f.families);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto colon = item.find(':');
      std::string name = item.substr(0, colon);
      std::uint64_t n = 0;
      try {
        if (colon == std::string::npos) throw std::invalid_argument(item);
        std::size_t used = 0;
        n = std::stoull(item.substr(colon + 1), &used);
        if (used != item.size() - colon - 1) throw std::invalid_argument(item);
      } catch (const std::logic_error&) {
        throw UsageError("bad --families entry '" + item + "'; expected cyclic:N or dihedral:N");
      }
      if (name == "cyclic") opt.cyclic_max = n;
      else if (name == "dihedral") opt.dihedral_max = n;
      else throw UsageError("unknown family '" + name + "'; expected cyclic or dihedral");
    }
  }
  for (const auto& e : f.exprs) opt.expressions.push_back(parse_expr(e));

  ScanReport report = scan_integer_hm(s.catalog(), opt);
  if (s.format() == "json") {
    auto doc = to_json(report, s.digits());
    doc["predicate"] = opt.predicate.str();
    s.emit(std::move(doc));
    return kOk;
  }
  Table t;
  t.header = {"order", "id", "group", "source", "h_m"};
  if (s.decimals()) t.header.push_back("h_m_approx");
  t.header.push_back("integer");
  for (const auto& r : report.rows) {
    std::vector<std::string> row = {r.order.get_str(), r.id ? std::to_string(r.id) : "", r.label, r.source, r.h_m.str()};
    if (s.decimals()) row.push_back(r.h_m.to_decimal(s.digits()));
    row.emplace_back(r.integer ? "yes" : "no");
    t.rows.push_back(std::move(row));
  }
  if (s.format() == "table") {
    s.stamp_text();
    s.out() << "population: " << report.population << '\n';
    for (const auto& c : report.caveats) s.out() << "caveat: " << c << '\n';
    s.out() << '\n';
  }
  s.emit(t);
  return kOk;
}

struct VerifyFlags {
  std::vector<std::string> checks;
  bool all = false;
  std::optional<std::uint64_t> nmax;
};

int cmd_verify(Session& s, const VerifyFlags& f) {
  VerifyOptions opt;
  opt.caps = s.caps();
  if (f.nmax) opt.dihedral_nmax = *f.nmax;
  if (opt.dihedral_nmax < 4) throw UsageError("--nmax must be >= 4");
  Verifier v(s.catalog(), opt);

  std::vector<std::string> ids = f.all || f.checks.empty() ? Verifier::check_ids() : f.checks;
  for (const auto& id : ids) {
    const auto& valid = Verifier::check_ids();
    if (std::find(valid.begin(), valid.end(), id) == valid.end()) {
      std::string list;
      for (const auto& x : valid) list += (list.empty() ? "" : ", ") + x;
      throw UsageError("unknown check '" + id + "'; valid checks: " + list);
    }
  }
  std::vector<CheckResult> results;
  for (const auto& id : ids) results.push_back(v.run(id));

  std::size_t passed = 0, failed = 0, inconclusive = 0;
  for (const auto& r : results) {
    if (r.passed) ++passed;
    else if (r.conclusive) ++failed;
    else ++inconclusive;
  }

  if (s.format() == "json") {
    nlohmann::ordered_json doc;
    doc["command"] = "verify";
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : results) arr.push_back(to_json(r));
    doc["checks"] = arr;
    doc["summary"] = {{"passed", passed}, {"failed", failed}, {"inconclusive", inconclusive}};
    s.emit(std::move(doc));
  } else if (s.format() == "csv") {
    Table t;
    t.header = {"id", "status", "title", "population", "witness_total", "caveats", "findings"};
    auto joined = [](const std::vector<std::string>& v) {
      std::string out;
      for (const auto& x : v) out += (out.empty() ? "" : "; ") + x;
      return out;
    };
    for (const auto& r : results)
      t.rows.push_back({r.id, std::string(r.status()), r.title, r.population, std::to_string(r.witness_total),
                        joined(r.caveats), joined(r.findings)});
    s.emit(t);
  } else {
    s.stamp_text();
    auto& out = s.out();
    for (const auto& r : results) {
      out << '[' << r.status() << "] " << r.id << ": " << r.title << '\n';
      out << "  population: " << r.population << '\n';
      for (const auto& c : r.caveats) out << "  caveat: " << c << '\n';
      for (const auto& x : r.findings) out << "  finding: " << x << '\n';
      if (!r.witnesses.empty()) {
        out << "  " << (r.passed ? "examples" : "counterexamples") << " (" << r.witnesses.size() << " of "
            << r.witness_total << "):\n";
        for (const auto& w : r.witnesses) out << "    " << w.group << ": " << w.values << '\n';
      }
    }
    out << passed << " passed, " << failed << " failed, " << inconclusive << " inconclusive\n";
  }
  return failed > 0 ? kCheckFailed : kOk;
}

int cmd_iso(Session& s, const std::string& a_text, const std::string& b_text) {
  EvalContext ctx{&s.catalog(), s.caps()};
  GroupExpr ea = parse_expr(a_text), eb = parse_expr(b_text);
  for (const auto* e : {&ea, &eb})
    if (expr_order(*e) > static_cast<unsigned long>(s.caps().isomorphism_limit))
      throw CapError("iso: order " + expr_order(*e).get_str() + " exceeds isomorphism cap " +
                     std::to_string(s.caps().isomorphism_limit) + "; raise it with --caps iso=N");
  bool iso = is_isomorphic(realize(ea, ctx), realize(eb, ctx), s.caps());
  if (s.format() == "json") {
    nlohmann::ordered_json doc;
    doc["command"] = "iso";
    doc["a"] = to_string(ea);
    doc["b"] = to_string(eb);
    doc["isomorphic"] = iso;
    s.emit(std::move(doc));
  } else if (s.format() == "csv") {
    s.emit(Table{{"a", "b", "isomorphic"}, {{to_string(ea), to_string(eb), iso ? "true" : "false"}}});
  } else {
    s.stamp_text();
    s.out() << to_string(ea) << (iso ? " is isomorphic to " : " is not isomorphic to ") << to_string(eb) << '\n';
  }
  return kOk;
}

int cmd_catalog_validate(Session& s) {
  const Catalog& cat = s.catalog();
  ValidationReport rep = validate_catalog(cat.entries(), s.caps());
  auto missing = cat.missing_orders();
  if (s.format() == "json") {
    nlohmann::ordered_json doc;
    doc["command"] = "catalog-validate";
    doc["entries"] = rep.entries;
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();
    for (const auto& [order, n] : rep.count_per_order) counts[std::to_string(order)] = n;
    doc["count_per_order"] = counts;
    doc["complete_up_to"] = cat.complete_up_to();
    doc["missing"] = missing;
    doc["failures"] = rep.failures;
    doc["ok"] = rep.ok();
    s.emit(std::move(doc));
  } else {
    Table t;
    t.header = {"order", "entries", "known"};
    for (const auto& [order, n] : rep.count_per_order) {
      auto known = known_group_count(order);
      t.rows.push_back({std::to_string(order), std::to_string(n), known ? std::to_string(known) : ""});
    }
    if (s.format() == "table") {
      s.stamp_text();
      s.out() << rep.entries << " entries, complete up to order " << cat.complete_up_to() << '\n';
      for (const auto& m : missing) s.out() << "missing: " << m << '\n';
      for (const auto& f : rep.failures) s.out() << "failure: " << f << '\n';
      s.out() << '\n';
    }
    s.emit(t);
  }
  return rep.ok() ? kOk : kCheckFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Harmonic mean of element orders of finite groups", "hm"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--catalog", g.catalog_path, "catalog file (hmcat v1); default $HM_CATALOG or the built-in one");
  app.add_option("--format", g.format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--digits", g.digits, "show decimal approximations with this many digits");
  app.add_option("--caps", g.caps, "enumeration caps: elements=N, table=N, subgroups=N, iso=N")->delimiter(',');
  app.add_flag("--timestamp", g.timestamp, "add a generation timestamp to the report");

  std::vector<std::string> stats_exprs;
  auto* stats = app.add_subcommand("stats", "order statistics of group expressions");
  stats->add_option("expr", stats_exprs, "e.g. \"SL23 x C(7^7)\"")->required();

  ScanFlags scan_flags;
  auto* scan = app.add_subcommand("scan", "scan the catalog and families for h_m values");
  scan->add_option("--max-order", scan_flags.max_order, "only groups of order <= N");
  scan->add_option("--families", scan_flags.families, "cyclic:N1,dihedral:N2 (default cyclic:1000,dihedral:1000)");
  scan->add_option("--predicate", scan_flags.predicate, "all, integer, eq=K or le=R (default integer)");
  scan->add_option("--expr", scan_flags.exprs, "extra group expression (repeatable)");

  VerifyFlags verify_flags;
  auto* verify = app.add_subcommand("verify", "run verification checks");
  verify->add_option("--check", verify_flags.checks, "comma-separated check ids")->delimiter(',');
  verify->add_flag("--all", verify_flags.all, "run every check (default)");
  verify->add_option("--nmax", verify_flags.nmax, "largest n for the dihedral scan (default 100000)");

  std::string iso_a, iso_b;
  auto* iso = app.add_subcommand("iso", "test two groups for isomorphism");
  iso->add_option("a", iso_a)->required();
  iso->add_option("b", iso_b)->required();

  auto* validate = app.add_subcommand("catalog-validate", "check every catalog entry");

  for (auto* sub : {stats, scan, verify, iso, validate}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Session session(g, out);
    if (stats->parsed()) return cmd_stats(session, stats_exprs);
    if (scan->parsed()) return cmd_scan(session, scan_flags);
    if (verify->parsed()) return cmd_verify(session, verify_flags);
    if (iso->parsed()) return cmd_iso(session, iso_a, iso_b);
    return cmd_catalog_validate(session);
  } catch (const CapError& e) {
    err << "hm: cap exceeded: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const ParseError& e) {
    err << "hm: parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "hm: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "hm: error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace hm::cli
