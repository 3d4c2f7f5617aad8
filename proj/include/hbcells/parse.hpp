#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hbcells/polynomial.hpp"
#include "hbcells/scalar.hpp"

namespace hbcells {

// Grammar (whitespace ignored):
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*      divisor must be a nonzero constant
//   factor := primary ['^' integer]
//   primary:= integer | name | '(' expr ')'
// Throws ParseError (with byte position) on syntax errors and unknown
// variables, DivisionByZero on a zero denominator.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables,
                            Field field = Field::rationals());

// Comma-separated list of polynomials, e.g. "x-3, y-2".
std::vector<Polynomial> parse_polynomial_list(std::string_view text,
                                              const std::vector<std::string>& variables,
                                              Field field = Field::rationals());

}  // namespace hbcells
