#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace hbcells {

// Exponent vector x_1^{e_1} ... x_n^{e_n}.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  Monomial(std::initializer_list<std::uint32_t> exps) : exps_(exps) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);

  std::size_t nvars() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }

  std::uint64_t degree() const;
  bool is_one() const;

  // Does *this divide other?
  bool divides(const Monomial& other) const;
  // other / *this, when divisible.
  std::optional<Monomial> quotient_of(const Monomial& other) const;

  Monomial operator*(const Monomial& o) const;
  Monomial& operator*=(const Monomial& o);
  // Requires divisibility; throws UsageError otherwise.
  Monomial operator/(const Monomial& o) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::vector<std::uint32_t> exps_;
};

// Lexicographic order with x_1 > x_2 > ... > x_n. Throws UsageError on
// mismatched variable counts.
std::strong_ordering lex_compare(const Monomial& a, const Monomial& b);

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

// Strict weak ordering "a is lex-greater than b", for containers sorted in
// decreasing lex order.
struct LexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return lex_compare(a, b) > 0; }
};

// Default variable names: {x, y} for two variables, x1..xn otherwise.
std::vector<std::string> default_variable_names(std::size_t nvars);

}  // namespace hbcells
