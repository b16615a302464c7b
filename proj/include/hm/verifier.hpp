#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hm/catalog.hpp"
#include "hm/exactmath.hpp"
#include "hm/expr.hpp"
#include "hm/group.hpp"
#include "hm/spectrum.hpp"

namespace hm {

inline constexpr std::size_t kWitnessCap = 20;

struct Witness {
  std::string group;
  std::string values;
};

/// Outcome of one check. A check whose population is known to be incomplete
/// is not conclusive: it still reports passed/failed but does not count as a
/// failure for the exit status.
struct CheckResult {
  std::string id;
  std::string title;
  std::string population;
  bool passed = true;
  bool conclusive = true;
  /// Notable groups while passing; counterexamples once failed.
  std::vector<Witness> witnesses;
  std::size_t witness_total = 0;
  std::vector<std::string> caveats;
  std::vector<std::string> findings;

  /// Records an example; ignored after the check has failed.
  void note(std::string group, std::string values);
  /// Marks the check failed and records a counterexample.
  void fail(std::string group, std::string values);
  /// "pass", "fail", or "inconclusive" for a failure on an incomplete population.
  std::string_view status() const;
};

nlohmann::ordered_json to_json(const CheckResult& r);

/// One catalog group with its precomputed statistics.
struct PopulationMember {
  const CatalogEntry* entry = nullptr;
  Group group;
  OrderSpectrum spectrum;
  Rational m;
  Rational h_m;

  std::string tag() const;
};

struct VerifyOptions {
  Caps caps;
  std::uint64_t dihedral_nmax = 100000;
  /// Cyclic p-groups are scanned up to exponent sum_{i=1}^{s_max} p^i.
  unsigned s_max = 2;
  std::uint64_t product_order_max = 256;
};

class Verifier {
 public:
  explicit Verifier(const Catalog& catalog, VerifyOptions options = {});

  /// Valid ids in report order.
  static const std::vector<std::string>& check_ids();
  /// Throws std::invalid_argument for an unknown id.
  CheckResult run(std::string_view id);
  std::vector<CheckResult> run_all();

  CheckResult check_min_bound();
  CheckResult check_monotonicity();
  CheckResult check_pgroup_integers();
  CheckResult check_congruences();
  CheckResult check_c_formulas();
  CheckResult check_dihedral_integers();
  CheckResult check_sl23_product();
  CheckResult check_value_two();
  CheckResult check_spectral_sum();
  CheckResult check_at_most_two();
  CheckResult check_value_three();

  const std::vector<PopulationMember>& population();

 private:
  std::string catalog_population() const;
  /// Adds the exhaustiveness caveat; marks the result inconclusive when the
  /// catalog misses groups of order <= kKnownCountBound.
  void require_complete(CheckResult& r) const;

  const Catalog& catalog_;
  VerifyOptions options_;
  std::optional<std::vector<PopulationMember>> population_;
};

/// Row filter for scans.
struct ScanPredicate {
  enum class Kind { all, integer, eq, le };
  Kind kind = Kind::integer;
  Rational value;

  bool accepts(const Rational& h_m) const;
  std::string str() const;
};

/// "all", "integer", "eq=K" or "le=R" with K, R exact rationals. Throws
/// std::invalid_argument on anything else.
ScanPredicate parse_predicate(std::string_view text);

struct ScanOptions {
  std::optional<std::uint64_t> max_order;
  std::uint64_t cyclic_max = 1000;    // C_n for n <= this
  std::uint64_t dihedral_max = 1000;  // D_{2n} for n <= this
  std::vector<GroupExpr> expressions;
  ScanPredicate predicate;
  Caps caps;
};

struct ScanRow {
  std::string label;
  std::string source;  // catalog, cyclic, dihedral, expr
  BigInt order;
  std::uint64_t id = 0;  // catalog id, 0 otherwise
  Rational h_m;
  bool integer = false;
};

struct ScanReport {
  std::string population;
  std::vector<std::string> caveats;
  std::vector<ScanRow> rows;
};

/// Integer-h_m scan over the catalog, both closed-form families and extra
/// expressions. Family rows whose order is covered exhaustively by the
/// catalog are omitted so each isomorphism type appears once there. Rows are
/// sorted by order, then id, then label.
ScanReport scan_integer_hm(const Catalog& catalog, const ScanOptions& options);

nlohmann::ordered_json to_json(const ScanReport& r, int digits = 6);

}  // namespace hm
