#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace hm {

using BigInt = mpz_class;

/// Exact fraction kept in canonical form: positive denominator and
/// gcd(|num|, den) = 1. Zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& value) : value_(value) {}
  /// Throws std::domain_error when den == 0.
  Rational(const BigInt& num, const BigInt& den);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  /// The integer value when is_integer(), otherwise nullopt.
  std::optional<BigInt> to_integer() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Canonical "num/den" rendering; integers print as "k/1".
  std::string str() const;
  /// Decimal approximation rounded half away from zero to `digits` places.
  std::string to_decimal(int digits = 6) const;

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Reads "k", "p/q" or a finite decimal such as "2.5", exactly. nullopt on
/// malformed text or a zero denominator.
std::optional<Rational> parse_rational(std::string_view text);

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Primes strictly increasing; empty for 1.
using Factorization = std::vector<PrimePower>;

/// Trial division, short-circuited once the cofactor is a probable prime.
/// Throws std::invalid_argument for n <= 0 and CapError when the cofactor has
/// two prime factors beyond the trial-division bound.
Factorization factorize(const BigInt& n);
BigInt reconstruct(const Factorization& f);

BigInt euler_phi(const BigInt& n);
BigInt euler_phi(const Factorization& f);
/// Throws std::invalid_argument for n < 2.
BigInt smallest_prime_divisor(const BigInt& n);
bool is_prime(const BigInt& n);
/// Number of positive divisors.
BigInt divisor_count(const Factorization& f);
/// All positive divisors in increasing order.
std::vector<BigInt> divisors(const BigInt& n);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);
BigInt pow(const BigInt& base, unsigned long exponent);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t euler_phi_u64(std::uint64_t n);

/// If n = p^k for a prime p and k >= 1, returns (p, k).
std::optional<PrimePower> as_prime_power(const BigInt& n);

/// Throws std::overflow_error when n is negative or does not fit.
std::uint64_t to_u64(const BigInt& n);

}  // namespace hm
