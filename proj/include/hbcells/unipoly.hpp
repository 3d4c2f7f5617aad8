#pragma once

#include <climits>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hbcells/polynomial.hpp"
#include "hbcells/scalar.hpp"

namespace hbcells {

// Polynomial in one variable (y in k[x,y]); coefficient vector indexed by
// degree, trimmed so the leading coefficient is nonzero.
class UniPoly {
 public:
  // Degree of the zero polynomial, so "r = 0 or deg r < deg h" is one test.
  static constexpr int kMinusInfinity = INT_MIN;

  UniPoly() = default;
  explicit UniPoly(std::vector<Scalar> coeffs);
  static UniPoly constant(const Scalar& c);
  static UniPoly monomial(int degree, const Scalar& c = Scalar(1));

  int degree() const { return coeffs_.empty() ? kMinusInfinity : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Scalar coefficient(int degree) const;
  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  const Scalar& leading_coefficient() const;
  Scalar constant_term() const { return coefficient(0); }

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly operator-() const;
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  // Embed into a polynomial ring, as a polynomial in variable `var`.
  Polynomial to_polynomial(std::size_t nvars, std::size_t var) const;
  // Inverse of to_polynomial; UsageError if p involves other variables.
  static UniPoly from_polynomial(const Polynomial& p, std::size_t var);

  std::string to_string(const std::string& var = "y") const;

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

// Euclidean division f = h*q + r with r = 0 or deg r < deg h.
// Throws DivisionByZero when h = 0.
std::pair<UniPoly, UniPoly> divide_univariate(const UniPoly& f, const UniPoly& h);

}  // namespace hbcells
