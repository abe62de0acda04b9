#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sinv {

// Ring-object style field wrappers: the field instance carries whatever state
// the arithmetic needs (nothing for Q, the modulus for F_p) and all scalar
// arithmetic goes through it.  Element containers store a copy of the field
// so operations never need an extra context argument.

// Exact rationals on GMP.  Values are kept canonical (reduced, positive
// denominator) so equality is structural.
struct RationalField {
  using Elem = mpq_class;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_long(long n) const { return Elem(static_cast<signed long>(n)); }
  Elem from_ratio(long num, long den) const {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Elem q(static_cast<signed long>(num), static_cast<signed long>(den));
    q.canonicalize();
    return q;
  }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return Elem(1) / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  // Used only for pretty-printing "c - d" instead of "c + -d".
  bool is_negative(const Elem& a) const { return sgn(a) < 0; }
  Elem abs_value(const Elem& a) const { return abs(a); }
  std::string str(const Elem& a) const { return a.get_str(); }
  const char* name() const { return "rational"; }
};

// F_p for an odd prime p < 2^31 (so products fit in u64 without tricks).
// This is the fuzzing backend; values are least nonnegative residues.
struct PrimeField {
  using Elem = std::uint64_t;
  std::uint64_t p = 0;

  PrimeField() = default;
  explicit PrimeField(std::uint64_t prime) : p(prime) {
    if (p < 3 || p % 2 == 0 || p >= (std::uint64_t(1) << 31) || !is_prime(p))
      throw std::invalid_argument("modulus must be an odd prime < 2^31");
  }

  static bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_long(long n) const {
    long r = n % static_cast<long>(p);
    if (r < 0) r += static_cast<long>(p);
    return static_cast<Elem>(r);
  }
  Elem from_ratio(long num, long den) const {
    Elem d = from_long(den);
    if (d == 0) throw std::invalid_argument("denominator divisible by p");
    return mul(from_long(num), inv(d));
  }
  Elem add(Elem a, Elem b) const { Elem s = a + b; return s >= p ? s - p : s; }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    // Fermat: a^(p-2) mod p.
    Elem r = 1, base = a;
    std::uint64_t e = p - 2;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }
  bool eq(Elem a, Elem b) const { return a == b; }
  bool is_negative(Elem) const { return false; }
  Elem abs_value(Elem a) const { return a; }
  std::string str(Elem a) const { return std::to_string(a); }
  const char* name() const { return "fp"; }
};

}  // namespace sinv
