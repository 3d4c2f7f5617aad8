#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "hbcells/monomial.hpp"
#include "hbcells/scalar.hpp"

namespace hbcells {

struct Term {
  Monomial mono;
  Scalar coef;
  friend bool operator==(const Term&, const Term&) = default;
};

// Multivariate polynomial over an exact field, stored as a term list sorted
// in decreasing lex order with no zero coefficients. The zero polynomial is
// the empty list; Lt/Lc are the front element.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  // Terms in any order; like monomials are collected, zeros dropped.
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms);
  static Polynomial constant(std::size_t nvars, const Scalar& c);
  static Polynomial monomial(const Monomial& m, const Scalar& c = Scalar(1));
  static Polynomial variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  // All three throw UsageError on the zero polynomial.
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Scalar& leading_coefficient() const { return leading_term().coef; }

  Scalar coefficient(const Monomial& m) const;
  bool is_constant() const;
  bool is_homogeneous() const;
  // Maximal total degree; -1 for the zero polynomial.
  std::int64_t total_degree() const;
  std::uint32_t degree_in(std::size_t var) const;

  void drop_leading_term();

  Polynomial monic() const;
  Polynomial mul_term(const Monomial& m, const Scalar& c) const;
  Polynomial scaled(const Scalar& c) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  // Replace variable `var` by `value` (a polynomial in the same ring).
  Polynomial substitute(std::size_t var, const Polynomial& value) const;
  Scalar evaluate(std::span<const Scalar> point) const;
  Polynomial in_field(std::uint32_t prime) const;

  // Canonical form: terms in decreasing lex order, rationals as a/b,
  // e.g. "x^3 - 1/2*x*y^3 + y^5".
  std::string to_string(const std::vector<std::string>& names) const;
  std::string to_string() const;

 private:
  void check_arity(const Polynomial& o) const;

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

Polynomial pow(const Polynomial& p, std::uint32_t e);

}  // namespace hbcells
