#include "hbcells/scalar.hpp"

#include <ostream>

#include "hbcells/errors.hpp"

namespace hbcells {

namespace {

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = result * base % m;
    base = base * base % m;
    exp >>= 1U;
  }
  return result;
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Scalar::Scalar(mpq_class value) : q_(std::move(value)) { q_.canonicalize(); }

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::modular(std::int64_t value, std::uint32_t prime) {
  if (!is_prime(prime) || prime >= (1U << 31U)) {
    throw UsageError("modulus must be a prime below 2^31, got " + std::to_string(prime));
  }
  Scalar s;
  s.p_ = prime;
  std::int64_t r = value % static_cast<std::int64_t>(prime);
  if (r < 0) r += prime;
  s.r_ = static_cast<std::uint64_t>(r);
  s.q_ = 0;
  return s;
}

Scalar Scalar::in_field(std::uint32_t prime) const {
  if (prime == p_) return *this;
  if (prime == 0) throw UsageError("cannot lift a residue to Q");
  if (p_ != 0) throw UsageError("scalars from different prime fields");
  std::uint64_t num = reduce_mpz(q_.get_num(), prime);
  std::uint64_t den = reduce_mpz(q_.get_den(), prime);
  if (den == 0) throw DivisionByZero();
  Scalar s;
  s.p_ = prime;
  s.r_ = num * mod_pow(den, prime - 2, prime) % prime;
  return s;
}

void Scalar::unify_with(const Scalar& o) {
  if (p_ == o.p_) return;
  if (p_ == 0) {
    *this = in_field(o.p_);
  } else if (o.p_ != 0) {
    throw UsageError("scalars from different prime fields");
  }
}

bool Scalar::is_zero() const { return p_ == 0 ? sgn(q_) == 0 : r_ == 0; }

bool Scalar::is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

bool Scalar::is_negative() const { return p_ == 0 && sgn(q_) < 0; }

mpq_class Scalar::rational_value() const {
  return p_ == 0 ? q_ : mpq_class(static_cast<unsigned long>(r_));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Scalar s = *this;
  if (p_ == 0) {
    s.q_ = 1 / q_;
  } else {
    s.r_ = mod_pow(r_, p_ - 2, p_);
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (p_ == 0 && o.p_ == 0) {
    q_ += o.q_;
    return *this;
  }
  unify_with(o);
  Scalar other = o.in_field(p_);
  r_ = (r_ + other.r_) % p_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (p_ == 0 && o.p_ == 0) {
    q_ -= o.q_;
    return *this;
  }
  unify_with(o);
  Scalar other = o.in_field(p_);
  r_ = (r_ + p_ - other.r_) % p_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (p_ == 0 && o.p_ == 0) {
    q_ *= o.q_;
    return *this;
  }
  unify_with(o);
  Scalar other = o.in_field(p_);
  r_ = r_ * other.r_ % p_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DivisionByZero();
  if (p_ == 0 && o.p_ == 0) {
    q_ /= o.q_;
    return *this;
  }
  unify_with(o);
  return *this *= o.in_field(p_).inverse();
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (p_ == 0) {
    s.q_ = -q_;
  } else {
    s.r_ = (p_ - r_) % p_;
  }
  return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ == b.p_) return a.p_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
  if (a.p_ != 0 && b.p_ != 0) return false;
  const Scalar& modular = a.p_ != 0 ? a : b;
  const Scalar& rational = a.p_ != 0 ? b : a;
  return rational.in_field(modular.p_).r_ == modular.r_;
}

std::string Scalar::to_string() const {
  return p_ == 0 ? q_.get_str() : std::to_string(r_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Field Field::prime_field(std::uint32_t p) {
  if (!is_prime(p) || p >= (1U << 31U)) {
    throw UsageError("field characteristic must be a prime below 2^31, got " +
                     std::to_string(p));
  }
  return Field{p};
}

Scalar Field::from_int(std::int64_t v) const {
  return prime == 0 ? Scalar(static_cast<long>(v)) : Scalar::modular(v, prime);
}

std::string Field::name() const { return prime == 0 ? "Q" : "F_" + std::to_string(prime); }

}  // namespace hbcells
