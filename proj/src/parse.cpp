#include "hbcells/parse.hpp"

#include <cctype>

#include "hbcells/errors.hpp"

namespace hbcells {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars, Field field)
      : text_(text), vars_(vars), field_(field) {}

  Polynomial parse_all() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

  std::vector<Polynomial> parse_list() {
    std::vector<Polynomial> out;
    out.push_back(expr());
    skip_ws();
    while (pos_ < text_.size() && text_[pos_] == ',') {
      ++pos_;
      out.push_back(expr());
      skip_ws();
    }
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    skip_ws();
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      if (accept('*')) {
        acc *= factor();
      } else if (accept('/')) {
        std::size_t at = pos_;
        Polynomial d = factor();
        if (!d.is_constant()) throw ParseError("divisor must be a constant", at);
        if (d.is_zero()) throw DivisionByZero();
        acc = acc.scaled(d.leading_coefficient().inverse());
      } else {
        return acc;
      }
    }
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      if (pos_ - start > 6) throw ParseError("exponent too large", start);
      return pow(base, static_cast<std::uint32_t>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpq_class value(std::string(text_.substr(start, pos_ - start)));
      return Polynomial::constant(vars_.size(), Scalar(value).in_field(field_.prime));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == name) {
          return Polynomial::monomial(Monomial::variable(vars_.size(), i), field_.one());
        }
      }
      throw ParseError("unknown variable '" + name + "'", start);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  Field field_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables,
                            Field field) {
  return Parser(text, variables, field).parse_all();
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text,
                                              const std::vector<std::string>& variables,
                                              Field field) {
  return Parser(text, variables, field).parse_list();
}

}  // namespace hbcells
