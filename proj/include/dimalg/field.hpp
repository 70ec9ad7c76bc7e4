// Coefficient fields for exact linear algebra: arbitrary-precision rationals
// (GMP) and prime fields GF(p) with a runtime modulus.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dimalg {

struct RationalField {
  using Elt = mpq_class;
  std::string name() const { return "QQ"; }
  Elt zero() const { return Elt(0); }
  Elt one() const { return Elt(1); }
  Elt from_int(long long v) const { return Elt(static_cast<long>(v)); }
  bool is_zero(const Elt& x) const { return sgn(x) == 0; }
  Elt neg(const Elt& x) const { return -x; }
  Elt add(const Elt& x, const Elt& y) const { return x + y; }
  Elt sub(const Elt& x, const Elt& y) const { return x - y; }
  Elt mul(const Elt& x, const Elt& y) const { return x * y; }
  Elt inv(const Elt& x) const { return 1 / x; }
  static std::string to_string(const Elt& x) { return x.get_str(); }
};

struct PrimeField {
  std::uint32_t p;

  explicit PrimeField(std::uint32_t prime = 101) : p(prime) {
    if (prime < 2) throw std::invalid_argument("PrimeField: modulus must be >= 2");
  }

  using Elt = std::int64_t;  // stored reduced to [0, p)
  std::string name() const { return "GF(" + std::to_string(p) + ")"; }
  Elt zero() const { return 0; }
  Elt one() const { return 1; }
  Elt from_int(long long v) const {
    Elt r = v % static_cast<Elt>(p);
    return r < 0 ? r + p : r;
  }
  bool is_zero(const Elt& x) const { return x == 0; }
  Elt neg(const Elt& x) const { return x == 0 ? 0 : static_cast<Elt>(p) - x; }
  Elt add(const Elt& x, const Elt& y) const {
    Elt r = x + y;
    return r >= static_cast<Elt>(p) ? r - p : r;
  }
  Elt sub(const Elt& x, const Elt& y) const {
    Elt r = x - y;
    return r < 0 ? r + p : r;
  }
  Elt mul(const Elt& x, const Elt& y) const { return (x * y) % p; }
  Elt pow(Elt base, std::uint64_t e) const {
    Elt r = 1;
    base %= p;
    while (e) {
      if (e & 1) r = (r * base) % p;
      base = (base * base) % p;
      e >>= 1;
    }
    return r;
  }
  Elt inv(const Elt& x) const {
    if (x == 0) throw std::domain_error("PrimeField: inverse of zero");
    return pow(x, p - 2);  // p prime
  }
  static std::string to_string(const Elt& x) { return std::to_string(x); }
};

inline bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace dimalg
