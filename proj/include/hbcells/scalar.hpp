#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace hbcells {

// Exact element of the coefficient field: an arbitrary-precision rational
// (modulus 0) or a residue modulo a prime p < 2^31.
//
// A rational with an integer value acts as a "literal": combining it with a
// residue mod p converts it into F_p, so Scalar(1) can be used as the unit of
// either kind of field. Combining residues of different primes throws.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(mpq_class value);

  static Scalar rational(long num, long den);
  static Scalar modular(std::int64_t value, std::uint32_t prime);

  std::uint32_t modulus() const { return p_; }
  bool is_rational() const { return p_ == 0; }
  bool is_zero() const;
  bool is_one() const;
  bool is_negative() const;  // only meaningful over Q; false for residues

  // Value for Q; for residues, the canonical representative in [0, p).
  mpq_class rational_value() const;
  std::uint64_t residue() const { return r_; }

  Scalar inverse() const;  // throws DivisionByZero on 0

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  // "a/b" over Q, residue over F_p.
  std::string to_string() const;

  // Converts to the field with the given modulus (0 keeps it rational).
  Scalar in_field(std::uint32_t prime) const;

 private:
  void unify_with(const Scalar& o);

  std::uint32_t p_ = 0;
  std::uint64_t r_ = 0;
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// The coefficient field fixed for one computation.
struct Field {
  std::uint32_t prime = 0;  // 0 means Q

  static Field rationals() { return {}; }
  static Field prime_field(std::uint32_t p);

  Scalar from_int(std::int64_t v) const;
  Scalar zero() const { return from_int(0); }
  Scalar one() const { return from_int(1); }
  bool is_finite() const { return prime != 0; }
  std::string name() const;
};

bool is_prime(std::uint64_t n);

}  // namespace hbcells
