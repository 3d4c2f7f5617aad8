#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hbcells/groebner.hpp"
#include "hbcells/monomial.hpp"

namespace hbcells {

// Monomial ideal E of finite colength in k[x,y] with radical (x,y), stored as
// m_0..m_t where m_i = min{j : x^{t-i} y^j in E}, so that
//   E = (x^t, x^{t-1} y^{m_1}, ..., y^{m_t}),  0 = m_0 < m_1 <= ... <= m_t.
// d_i = m_i - m_{i-1} for i = 1..t.
class Staircase {
 public:
  // Both throw UsageError on an invalid vector.
  static Staircase from_m(std::vector<int> m);
  static Staircase from_d(const std::vector<int>& d);

  int t() const { return static_cast<int>(m_.size()) - 1; }
  const std::vector<int>& m() const { return m_; }
  int m(int i) const { return m_.at(static_cast<std::size_t>(i)); }
  // 1-based, i = 1..t.
  int d(int i) const;
  std::vector<int> d_vector() const;

  std::uint64_t colength() const;
  // All d_i > 0.
  bool is_lex_segment() const;

  std::string to_string() const;  // "m=[0,3,3,5]"

  friend bool operator==(const Staircase&, const Staircase&) = default;
  friend auto operator<=>(const Staircase& a, const Staircase& b) { return a.m_ <=> b.m_; }

 private:
  explicit Staircase(std::vector<int> m) : m_(std::move(m)) {}
  std::vector<int> m_;
};

// Accepts "m=[0,3,3,5]", "d=[3,0,2]" or a bare list read as m.
Staircase parse_staircase(std::string_view text);

// UsageError if E does not live in two variables; DomainError if E has
// infinite colength or is the unit ideal.
Staircase staircase_from_monomial_ideal(const MonomialIdeal& e);

// x^{t-i} y^{m_i}, i = 0..t; with `minimal`, indices with m_{i+1} = m_i are
// dropped. Decreasing lex order.
std::vector<Monomial> generators(const Staircase& e, bool minimal);
MonomialIdeal to_monomial_ideal(const Staircase& e);

// Indices i (0..t) whose generator x^{t-i} y^{m_i} is a minimal generator.
std::vector<int> minimal_generator_indices(const Staircase& e);

// Hilbert function h_j of R/I for any graded I with Hilbert series
// h(z) = 1 + 2z + ... + c z^{c-1} + sum_{j=c}^s h_j z^j and
// s+1 >= c >= h_c >= ... >= h_s > 0. Entries past s are zero.
class HSeries {
 public:
  // Throws DomainError naming the violated inequality.
  explicit HSeries(std::vector<int> h);

  const std::vector<int>& values() const { return h_; }
  int operator[](int j) const;
  int s() const { return static_cast<int>(h_.size()) - 1; }
  // Initial degree: first j with h_j < j + 1.
  int c() const { return c_; }
  int total() const;
  // p_0..p_{s+1}, coefficients of (1 - z) h(z).
  std::vector<int> first_difference() const;

 private:
  std::vector<int> h_;
  int c_ = 0;
};

HSeries parse_hseries(std::string_view text);

// h_j = number of standard monomials of degree j; sums to the colength.
std::vector<int> hilbert_function(const Staircase& e);

// The lex-segment ideal L(h): in each degree j, the span of the j+1-h_j
// lex-largest monomials.
Staircase lex_segment_from_hseries(const HSeries& h);

// Every admissible Hilbert function with total at most max_total, in
// lexicographic order of the value vectors.
std::vector<HSeries> enumerate_hseries(int max_total);

// All staircases of colength d, increasing lexicographically in m.
std::vector<Staircase> enumerate_staircases(int d);

}  // namespace hbcells
