#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "hm/exactmath.hpp"

namespace hm {

struct GroupExpr;

namespace expr {

struct Cyclic { BigInt order; };
struct Dihedral { BigInt order; };        // D_{2n}, order = 2n
struct GenQuaternion { BigInt order; };   // Q_{2^n}
struct SemiDihedral { BigInt order; };    // SD_{2^n}
struct ElemAbelian { BigInt p; BigInt k; };
struct Symmetric { BigInt n; };
struct SL23 {};
struct Dicyclic { BigInt n; };            // order 4n
struct Catalog { BigInt order; BigInt id; };
struct Product { std::vector<GroupExpr> factors; };

}  // namespace expr

/// Symbolic group description. Products are flat: a Product never has a
/// Product factor and always has at least two factors.
struct GroupExpr {
  using Node = std::variant<expr::Cyclic, expr::Dihedral, expr::GenQuaternion, expr::SemiDihedral,
                            expr::ElemAbelian, expr::Symmetric, expr::SL23, expr::Dicyclic, expr::Catalog,
                            expr::Product>;
  Node node;

  static GroupExpr cyclic(BigInt n) { return {expr::Cyclic{std::move(n)}}; }
  static GroupExpr dihedral(BigInt order) { return {expr::Dihedral{std::move(order)}}; }
  static GroupExpr quaternion(BigInt order) { return {expr::GenQuaternion{std::move(order)}}; }
  static GroupExpr semidihedral(BigInt order) { return {expr::SemiDihedral{std::move(order)}}; }
  static GroupExpr elementary_abelian(BigInt p, BigInt k) { return {expr::ElemAbelian{std::move(p), std::move(k)}}; }
  static GroupExpr symmetric(BigInt n) { return {expr::Symmetric{std::move(n)}}; }
  static GroupExpr sl23() { return {expr::SL23{}}; }
  static GroupExpr dicyclic(BigInt n) { return {expr::Dicyclic{std::move(n)}}; }
  static GroupExpr catalog(BigInt order, BigInt id) { return {expr::Catalog{std::move(order), std::move(id)}}; }
  /// Flattens nested products; a single factor is returned unchanged.
  static GroupExpr product(std::vector<GroupExpr> factors);
};

/// |G| without enumeration.
BigInt expr_order(const GroupExpr& e);

/// Canonical text: "C(823543)", "SL23 x C(823543)". Parsing it gives back e.
std::string to_string(const GroupExpr& e);

bool operator==(const GroupExpr& a, const GroupExpr& b);

}  // namespace hm
