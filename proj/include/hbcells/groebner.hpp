#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hbcells/monomial.hpp"
#include "hbcells/polynomial.hpp"

namespace hbcells {

// Generators of an ideal of k[x_1..x_n] under lex order x_1 > ... > x_n.
struct IdealBasis {
  std::size_t nvars = 0;
  std::vector<Polynomial> elements;

  IdealBasis() = default;
  IdealBasis(std::size_t n, std::vector<Polynomial> elems);
  explicit IdealBasis(std::vector<Polynomial> elems);

  bool is_homogeneous() const;
  std::string to_string() const;
  friend bool operator==(const IdealBasis&, const IdealBasis&) = default;
};

// Minimally generated monomial ideal; generators are kept in decreasing lex
// order.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t nvars) : nvars_(nvars) {}
  MonomialIdeal(std::size_t nvars, std::vector<Monomial> generators);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool contains(const Monomial& m) const;
  bool is_unit() const;
  // Exponent of the smallest pure power of x_var in the ideal, if any.
  std::optional<std::uint32_t> pure_power(std::size_t var) const;

  std::string to_string() const;
  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t nvars_;
  std::vector<Monomial> gens_;
};

// S(f,g) = (L/Lt f) f / Lc f - (L/Lt g) g / Lc g, L = lcm(Lt f, Lt g).
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

struct Reduction {
  Polynomial remainder;
  std::vector<Polynomial> quotients;
};

// Full multivariate division: f = sum q_i b_i + remainder with no term of
// the remainder divisible by any Lt(b_i). Zero basis elements are ignored.
Reduction reduce(const Polynomial& f, const IdealBasis& basis);

// Unique reduced lex Groebner basis, sorted by decreasing leading monomial.
// Throws UsageError if every generator is zero.
IdealBasis buchberger_reduced(const IdealBasis& gens);

// Do all S-polynomials reduce to zero?
bool is_groebner_basis(const IdealBasis& basis);

MonomialIdeal leading_term_ideal(const IdealBasis& gb);

// Number of standard monomials; nullopt when infinite.
std::optional<std::uint64_t> colength(const MonomialIdeal& e);

// Monomials of total degree d, in decreasing lex order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t d);

// beta_{0,j}(I) computed as dim I_j - dim (R_1 I_{j-1})_j by exact row
// reduction. UsageError if I is not homogeneous.
std::size_t graded_minimal_generators(const IdealBasis& ideal, std::uint32_t j);

}  // namespace hbcells
