#include "hm/cli/parser.hpp"

#include <array>
#include <cctype>
#include <string>
#include <vector>

#include "hm/error.hpp"

namespace hm::cli {

namespace {

constexpr unsigned long kMaxExponent = 4096;

struct Arg {
  BigInt value;
  std::size_t offset;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupExpr parse() {
    std::vector<GroupExpr> factors;
    factors.push_back(term());
    while (true) {
      skip_ws();
      if (at_end()) break;
      if (text_[pos_] != 'x') throw ParseError("unexpected " + token_at(pos_) + ", expected 'x' or end", pos_);
      ++pos_;
      factors.push_back(term());
    }
    return GroupExpr::product(std::move(factors));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string token_at(std::size_t at) const {
    if (at >= text_.size()) return "end of input";
    std::size_t end = at;
    while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
    if (end == at) end = at + 1;
    return "token '" + std::string(text_.substr(at, end - at)) + "'";
  }

  void expect(char c) {
    skip_ws();
    if (at_end() || text_[pos_] != c)
      throw ParseError("expected '" + std::string(1, c) + "', got " + token_at(pos_), pos_);
    ++pos_;
  }

  BigInt integer() {
    skip_ws();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected an integer, got " + token_at(start), start);
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  Arg number() {
    skip_ws();
    std::size_t start = pos_;
    BigInt base = integer();
    skip_ws();
    if (!at_end() && text_[pos_] == '^') {
      ++pos_;
      skip_ws();
      std::size_t exp_at = pos_;
      BigInt e = integer();
      if (e > kMaxExponent) throw ParseError("exponent " + e.get_str() + " too large", exp_at);
      base = pow(base, e.get_ui());
    }
    return {base, start};
  }

  std::vector<Arg> args(const std::string& name, std::size_t name_at, std::size_t arity) {
    expect('(');
    std::vector<Arg> out;
    out.push_back(number());
    while (true) {
      skip_ws();
      if (!at_end() && text_[pos_] == ',') {
        ++pos_;
        out.push_back(number());
        continue;
      }
      break;
    }
    expect(')');
    if (out.size() != arity)
      throw ParseError(name + " takes " + std::to_string(arity) + " argument" + (arity == 1 ? "" : "s") + ", got " +
                           std::to_string(out.size()),
                       name_at);
    return out;
  }

  static bool is_power_of_two(const BigInt& n) { return n > 0 && mpz_popcount(n.get_mpz_t()) == 1; }

  GroupExpr term() {
    skip_ws();
    const std::size_t at = pos_;
    static constexpr std::array<std::string_view, 9> kNames = {"SL23", "Dic", "Cat", "SD", "C", "D", "Q", "E", "S"};
    std::string_view name;
    for (auto n : kNames)
      if (text_.substr(pos_, n.size()) == n) {
        name = n;
        break;
      }
    if (name.empty()) {
      if (at >= text_.size()) throw ParseError("expected a group term, got end of input", at);
      throw ParseError("unknown " + token_at(at), at);
    }
    pos_ += name.size();
    const std::string nm(name);

    if (name == "SL23") return GroupExpr::sl23();
    if (name == "E" || name == "Cat") {
      auto a = args(nm, at, 2);
      if (name == "E") {
        if (!is_prime(a[0].value)) throw ParseError("E needs a prime, got " + a[0].value.get_str(), a[0].offset);
        if (a[1].value < 1) throw ParseError("E needs k >= 1", a[1].offset);
        return GroupExpr::elementary_abelian(a[0].value, a[1].value);
      }
      if (a[0].value < 1) throw ParseError("Cat order must be >= 1", a[0].offset);
      if (a[1].value < 1) throw ParseError("Cat id must be >= 1", a[1].offset);
      return GroupExpr::catalog(a[0].value, a[1].value);
    }

    Arg a = args(nm, at, 1).front();
    const BigInt& v = a.value;
    if (name == "C") {
      if (v < 1) throw ParseError("C needs n >= 1", a.offset);
      return GroupExpr::cyclic(v);
    }
    if (name == "D") {
      if (v < 2 || mpz_odd_p(v.get_mpz_t())) throw ParseError("D takes an even group order >= 2, got " + v.get_str(), a.offset);
      return GroupExpr::dihedral(v);
    }
    if (name == "Q") {
      if (v < 8 || !is_power_of_two(v)) throw ParseError("Q takes a power of 2 >= 8, got " + v.get_str(), a.offset);
      return GroupExpr::quaternion(v);
    }
    if (name == "SD") {
      if (v < 16 || !is_power_of_two(v)) throw ParseError("SD takes a power of 2 >= 16, got " + v.get_str(), a.offset);
      return GroupExpr::semidihedral(v);
    }
    if (name == "S") {
      if (v < 1) throw ParseError("S needs n >= 1", a.offset);
      return GroupExpr::symmetric(v);
    }
    if (v < 2) throw ParseError("Dic needs n >= 2", a.offset);
    return GroupExpr::dicyclic(v);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupExpr parse_expr(std::string_view text) { return Parser(text).parse(); }

}  // namespace hm::cli
