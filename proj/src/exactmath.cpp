#include "hm/exactmath.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "hm/error.hpp"

namespace hm {

namespace {

// Cofactors are tested for primality (GMP BPSW) whenever they shrink, so this
// bound is only reached for products of two large primes.
constexpr unsigned long kTrialDivisionBound = 100'000'000UL;
// Below this, plain trial division in 64-bit arithmetic is fast enough.
constexpr std::uint64_t kSmallFactorLimit = 1ULL << 40;

Factorization factorize_u64(std::uint64_t n) {
  Factorization out;
  auto take = [&](std::uint64_t p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.push_back({BigInt(static_cast<unsigned long>(p)), e});
  };
  take(2);
  take(3);
  for (std::uint64_t p = 5; p <= n / p; p += 6) {
    take(p);
    take(p + 2);
  }
  if (n > 1) out.push_back({BigInt(static_cast<unsigned long>(n)), 1U});
  return out;
}

bool fits_u64(const BigInt& n) { return sgn(n) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

bool is_small(const BigInt& n) { return fits_u64(n) && to_u64(n) < kSmallFactorLimit; }

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw std::domain_error("zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

std::optional<BigInt> Rational::to_integer() const {
  if (!is_integer()) return std::nullopt;
  return value_.get_num();
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::string Rational::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal(int digits) const {
  if (digits < 0) digits = 0;
  BigInt num = abs(value_.get_num());
  const BigInt& den = value_.get_den();
  BigInt scale = pow(BigInt(10), static_cast<unsigned long>(digits));
  BigInt scaled = (2 * num * scale + den) / (2 * den);
  std::string s = scaled.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits))
      s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  if (sgn(value_) < 0 && sgn(scaled) != 0) s.insert(0, "-");
  return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::optional<Rational> parse_rational(std::string_view text) {
  auto digits_only = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  bool negative = !text.empty() && text.front() == '-';
  if (negative) text.remove_prefix(1);
  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!digits_only(num) || !digits_only(den)) return std::nullopt;
    BigInt d{std::string(den)};
    if (d == 0) return std::nullopt;
    value = Rational(BigInt(std::string(num)), d);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    if (!digits_only(whole) || !digits_only(frac)) return std::nullopt;
    value = Rational(BigInt(std::string(whole) + std::string(frac)), pow(BigInt(10), frac.size()));
  } else {
    if (!digits_only(text)) return std::nullopt;
    value = Rational(BigInt(std::string(text)));
  }
  return negative ? -value : value;
}

Factorization factorize(const BigInt& n) {
  if (sgn(n) <= 0) throw std::invalid_argument("factorize: argument must be positive");
  if (is_small(n)) return factorize_u64(to_u64(n));

  Factorization out;
  BigInt rest = n;
  auto take = [&](unsigned long p) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    if (e > 0) out.push_back({BigInt(p), e});
    return e > 0;
  };
  take(2);
  bool changed = true;
  for (unsigned long p = 3; rest > 1; p += 2) {
    if (changed) {
      if (is_small(rest)) {
        for (auto& pp : factorize_u64(to_u64(rest))) out.push_back(std::move(pp));
        return out;
      }
      if (is_prime(rest)) {
        out.push_back({rest, 1U});
        return out;
      }
      changed = false;
    }
    if (p > kTrialDivisionBound)
      throw CapError("factorize: cofactor " + rest.get_str() + " beyond trial-division bound");
    changed = take(p);
  }
  return out;
}

BigInt reconstruct(const Factorization& f) {
  BigInt n = 1;
  for (const auto& pp : f) n *= pow(pp.prime, pp.exponent);
  return n;
}

BigInt euler_phi(const Factorization& f) {
  BigInt phi = 1;
  for (const auto& pp : f) phi *= pow(pp.prime, pp.exponent - 1) * (pp.prime - 1);
  return phi;
}

BigInt euler_phi(const BigInt& n) { return euler_phi(factorize(n)); }

BigInt smallest_prime_divisor(const BigInt& n) {
  if (n < 2) throw std::invalid_argument("smallest_prime_divisor: argument must be >= 2");
  if (mpz_even_p(n.get_mpz_t())) return 2;
  if (is_small(n)) {
    std::uint64_t v = to_u64(n);
    for (std::uint64_t p = 3; p <= v / p; p += 2)
      if (v % p == 0) return BigInt(static_cast<unsigned long>(p));
    return n;
  }
  return factorize(n).front().prime;
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (fits_u64(n)) {
    std::uint64_t v = to_u64(n);
    if (v < (1ULL << 32)) {
      if (v % 2 == 0) return v == 2;
      for (std::uint64_t p = 3; p * p <= v; p += 2)
        if (v % p == 0) return false;
      return true;
    }
  }
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

BigInt divisor_count(const Factorization& f) {
  BigInt count = 1;
  for (const auto& pp : f) count *= pp.exponent + 1;
  return count;
}

std::vector<BigInt> divisors(const BigInt& n) {
  std::vector<BigInt> out{1};
  for (const auto& pp : factorize(n)) {
    std::size_t base = out.size();
    BigInt power = 1;
    for (unsigned e = 1; e <= pp.exponent; ++e) {
      power *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd_u64(a, b) * b;
}

std::uint64_t euler_phi_u64(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("euler_phi: argument must be positive");
  std::uint64_t phi = n;
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    phi -= phi / p;
  }
  if (n > 1) phi -= phi / n;
  return phi;
}

std::optional<PrimePower> as_prime_power(const BigInt& n) {
  if (n < 2) return std::nullopt;
  BigInt p = smallest_prime_divisor(n);
  BigInt rest = n;
  unsigned k = 0;
  while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
    rest /= p;
    ++k;
  }
  if (rest != 1) return std::nullopt;
  return PrimePower{p, k};
}

std::uint64_t to_u64(const BigInt& n) {
  if (!fits_u64(n)) throw std::overflow_error("integer " + n.get_str() + " does not fit in 64 bits");
  std::uint64_t v = 0;
  mpz_export(&v, nullptr, -1, sizeof v, 0, 0, n.get_mpz_t());
  return v;
}

}  // namespace hm
