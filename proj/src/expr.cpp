#include "hm/expr.hpp"

#include <stdexcept>

namespace hm {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

GroupExpr GroupExpr::product(std::vector<GroupExpr> factors) {
  std::vector<GroupExpr> flat;
  for (auto& f : factors) {
    if (auto* p = std::get_if<expr::Product>(&f.node)) {
      for (auto& inner : p->factors) flat.push_back(std::move(inner));
    } else {
      flat.push_back(std::move(f));
    }
  }
  if (flat.empty()) throw std::invalid_argument("product of no factors");
  if (flat.size() == 1) return std::move(flat.front());
  return {expr::Product{std::move(flat)}};
}

BigInt expr_order(const GroupExpr& e) {
  return std::visit(Overloaded{
                        [](const expr::Cyclic& c) { return c.order; },
                        [](const expr::Dihedral& d) { return d.order; },
                        [](const expr::GenQuaternion& q) { return q.order; },
                        [](const expr::SemiDihedral& s) { return s.order; },
                        [](const expr::ElemAbelian& a) { return pow(a.p, to_u64(a.k)); },
                        [](const expr::Symmetric& s) {
                          BigInt f;
                          mpz_fac_ui(f.get_mpz_t(), to_u64(s.n));
                          return f;
                        },
                        [](const expr::SL23&) { return BigInt(24); },
                        [](const expr::Dicyclic& d) { return BigInt(4 * d.n); },
                        [](const expr::Catalog& c) { return c.order; },
                        [](const expr::Product& p) {
                          BigInt n = 1;
                          for (const auto& f : p.factors) n *= expr_order(f);
                          return n;
                        },
                    },
                    e.node);
}

std::string to_string(const GroupExpr& e) {
  return std::visit(Overloaded{
                        [](const expr::Cyclic& c) { return "C(" + c.order.get_str() + ")"; },
                        [](const expr::Dihedral& d) { return "D(" + d.order.get_str() + ")"; },
                        [](const expr::GenQuaternion& q) { return "Q(" + q.order.get_str() + ")"; },
                        [](const expr::SemiDihedral& s) { return "SD(" + s.order.get_str() + ")"; },
                        [](const expr::ElemAbelian& a) {
                          return "E(" + a.p.get_str() + "," + a.k.get_str() + ")";
                        },
                        [](const expr::Symmetric& s) { return "S(" + s.n.get_str() + ")"; },
                        [](const expr::SL23&) { return std::string("SL23"); },
                        [](const expr::Dicyclic& d) { return "Dic(" + d.n.get_str() + ")"; },
                        [](const expr::Catalog& c) {
                          return "Cat(" + c.order.get_str() + "," + c.id.get_str() + ")";
                        },
                        [](const expr::Product& p) {
                          std::string s;
                          for (const auto& f : p.factors) {
                            if (!s.empty()) s += " x ";
                            s += to_string(f);
                          }
                          return s;
                        },
                    },
                    e.node);
}

bool operator==(const GroupExpr& a, const GroupExpr& b) { return to_string(a) == to_string(b); }

}  // namespace hm
