#include "hm/catalog.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "hm/error.hpp"
#include "hm/structure.hpp"

namespace hm {

extern const char* const kEmbeddedCatalog;

namespace {

constexpr std::array<std::uint64_t, kKnownCountBound + 1> kKnownCounts = {
    0, 1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14};

std::uint64_t positive_field(const nlohmann::json& obj, const char* key, std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end()) throw CatalogError(std::string("missing field \"") + key + "\"", line);
  if (!it->is_number_integer() || it->get<std::int64_t>() < 1)
    throw CatalogError(std::string("field \"") + key + "\" must be a positive integer", line);
  return it->get<std::uint64_t>();
}

CatalogEntry parse_line(const std::string& text, std::size_t line) {
  nlohmann::json obj;
  try {
    obj = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw CatalogError(std::string("invalid JSON: ") + e.what(), line);
  }
  if (!obj.is_object()) throw CatalogError("expected a JSON object", line);

  CatalogEntry e;
  e.order = positive_field(obj, "order", line);
  e.id = positive_field(obj, "id", line);
  e.degree = positive_field(obj, "degree", line);
  auto name = obj.find("name");
  if (name == obj.end() || !name->is_string()) throw CatalogError("field \"name\" must be a string", line);
  e.name = name->get<std::string>();

  auto gens = obj.find("gens");
  if (gens == obj.end() || !gens->is_array()) throw CatalogError("field \"gens\" must be an array", line);
  for (const auto& g : *gens) {
    if (!g.is_array() || g.size() != e.degree)
      throw CatalogError("each generator must be an array of length degree", line);
    Permutation p;
    p.reserve(e.degree);
    for (const auto& x : g) {
      if (!x.is_number_integer() || x.get<std::int64_t>() < 0)
        throw CatalogError("generator images must be non-negative integers", line);
      p.push_back(x.get<std::uint32_t>());
    }
    e.gens.push_back(std::move(p));
  }
  return e;
}

void check_version(const std::string& comment, std::size_t line) {
  std::istringstream ss(comment.substr(1));
  std::string tag, version;
  ss >> tag >> version;
  if (tag == "hmcat" && version != "v1") throw CatalogError("unsupported catalog version " + version, line);
}

}  // namespace

std::vector<CatalogEntry> load_catalog(std::istream& in) {
  std::vector<CatalogEntry> out;
  std::set<std::pair<std::uint64_t, std::uint64_t>> keys;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    auto first = text.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (text[first] == '#') {
      check_version(text.substr(first), line);
      continue;
    }
    CatalogEntry e = parse_line(text, line);
    if (!keys.emplace(e.order, e.id).second)
      throw CatalogError("duplicate entry (" + std::to_string(e.order) + "," + std::to_string(e.id) + ")", line);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CatalogEntry> load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog file " + path);
  return load_catalog(in);
}

std::string format_entry(const CatalogEntry& e) {
  std::ostringstream os;
  os << "{\"order\":" << e.order << ",\"id\":" << e.id << ",\"name\":" << nlohmann::json(e.name).dump()
     << ",\"degree\":" << e.degree << ",\"gens\":[";
  for (std::size_t g = 0; g < e.gens.size(); ++g) {
    if (g) os << ',';
    os << '[';
    for (std::size_t i = 0; i < e.gens[g].size(); ++i) {
      if (i) os << ',';
      os << e.gens[g][i];
    }
    os << ']';
  }
  os << "]}";
  return os.str();
}

void write_catalog(std::ostream& out, std::span<const CatalogEntry> entries) {
  out << "# hmcat v1\n";
  for (const auto& e : entries) out << format_entry(e) << '\n';
}

Group build_group(const CatalogEntry& e, const Caps& caps) {
  return Group::from_permutations(e.degree, e.gens, caps, e.name);
}

std::uint64_t known_group_count(std::uint64_t order) {
  return order <= kKnownCountBound ? kKnownCounts[order] : 0;
}

ValidationReport validate_catalog(std::span<const CatalogEntry> entries, const Caps& caps) {
  ValidationReport report;
  report.entries = entries.size();
  auto tag = [](const CatalogEntry& e) {
    return "(" + std::to_string(e.order) + "," + std::to_string(e.id) + ") " + e.name;
  };

  std::map<std::uint64_t, std::vector<std::pair<const CatalogEntry*, Group>>> by_order;
  std::set<std::pair<std::uint64_t, std::uint64_t>> keys;
  for (const auto& e : entries) {
    ++report.count_per_order[e.order];
    if (!keys.emplace(e.order, e.id).second) report.failures.push_back(tag(e) + ": duplicate (order, id)");
    try {
      Group g = build_group(e, caps);
      if (g.size() != e.order) {
        report.failures.push_back(tag(e) + ": closure has " + std::to_string(g.size()) +
                                  " elements, declared order " + std::to_string(e.order));
        continue;
      }
      auto v = g.validate();
      if (!v.ok) {
        report.failures.push_back(tag(e) + ": " + v.problems.front());
        continue;
      }
      by_order[e.order].emplace_back(&e, std::move(g));
    } catch (const std::exception& ex) {
      report.failures.push_back(tag(e) + ": " + ex.what());
    }
  }

  for (const auto& [order, groups] : by_order) {
    if (order > caps.isomorphism_limit) continue;
    for (std::size_t i = 0; i < groups.size(); ++i)
      for (std::size_t j = i + 1; j < groups.size(); ++j)
        if (is_isomorphic(groups[i].second, groups[j].second, caps))
          report.failures.push_back(tag(*groups[i].first) + " is isomorphic to " + tag(*groups[j].first));
  }
  return report;
}

Catalog::Catalog(std::vector<CatalogEntry> entries) : entries_(std::move(entries)) {
  std::set<std::pair<std::uint64_t, std::uint64_t>> keys;
  for (const auto& e : entries_)
    if (!keys.emplace(e.order, e.id).second)
      throw std::invalid_argument("duplicate catalog entry (" + std::to_string(e.order) + "," +
                                  std::to_string(e.id) + ")");
  std::stable_sort(entries_.begin(), entries_.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    return std::pair(a.order, a.id) < std::pair(b.order, b.id);
  });
}

const Catalog& Catalog::embedded() {
  static const Catalog catalog = [] {
    std::istringstream in(kEmbeddedCatalog);
    return Catalog(load_catalog(in));
  }();
  return catalog;
}

const CatalogEntry* Catalog::find(std::uint64_t order, std::uint64_t id) const {
  for (const auto& e : entries_)
    if (e.order == order && e.id == id) return &e;
  return nullptr;
}

Group Catalog::get(std::uint64_t order, std::uint64_t id, const Caps& caps) const {
  const CatalogEntry* e = find(order, id);
  if (e == nullptr)
    throw std::out_of_range("no catalog entry (" + std::to_string(order) + "," + std::to_string(id) + ")");
  return build_group(*e, caps);
}

std::uint64_t Catalog::complete_up_to() const {
  std::map<std::uint64_t, std::size_t> counts;
  for (const auto& e : entries_) ++counts[e.order];
  std::uint64_t n = 0;
  while (n < kKnownCountBound && counts[n + 1] >= kKnownCounts[n + 1]) ++n;
  return n;
}

std::vector<std::string> Catalog::missing_orders() const {
  std::map<std::uint64_t, std::size_t> counts;
  for (const auto& e : entries_) ++counts[e.order];
  std::vector<std::string> out;
  for (std::uint64_t n = 1; n <= kKnownCountBound; ++n)
    if (counts[n] < kKnownCounts[n])
      out.push_back("order " + std::to_string(n) + " has " + std::to_string(counts[n]) + " of " +
                    std::to_string(kKnownCounts[n]) + " groups");
  return out;
}

}  // namespace hm
