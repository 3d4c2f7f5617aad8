#include <random>

#include "doctest.h"
#include "hbcells/errors.hpp"
#include "hbcells/monomial.hpp"
#include "hbcells/parse.hpp"
#include "hbcells/polynomial.hpp"
#include "hbcells/scalar.hpp"
#include "hbcells/unipoly.hpp"

using namespace hbcells;

namespace {

const std::vector<std::string> kXY{"x", "y"};

Polynomial P(const std::string& s) { return parse_polynomial(s, kXY); }
Polynomial P(const std::string& s, Field f) { return parse_polynomial(s, kXY, f); }

Polynomial random_poly(std::mt19937_64& rng, std::size_t nvars, Field f) {
  std::uniform_int_distribution<int> nterms(0, 5), ex(0, 3), co(-5, 5);
  std::vector<Term> terms;
  int n = nterms(rng);
  for (int k = 0; k < n; ++k) {
    std::vector<std::uint32_t> e(nvars);
    for (auto& v : e) v = static_cast<std::uint32_t>(ex(rng));
    Scalar c = f.from_int(co(rng));
    if (!f.is_finite() && co(rng) > 2) c /= Scalar(3);
    terms.push_back({Monomial(e), c});
  }
  return Polynomial::from_terms(nvars, terms);
}

UniPoly random_uni(std::mt19937_64& rng, int maxdeg) {
  std::uniform_int_distribution<int> deg(-1, maxdeg), co(-4, 4);
  std::vector<Scalar> c;
  int d = deg(rng);
  for (int i = 0; i <= d; ++i) c.push_back(Scalar::rational(co(rng), 1 + (co(rng) + 4) % 3));
  return UniPoly(c);
}

}  // namespace

TEST_CASE("scalar arithmetic is exact") {
  Scalar a = Scalar::rational(1, 3);
  CHECK(a + a + a == Scalar(1));
  CHECK((Scalar(1) / Scalar(7)) * Scalar(7) == Scalar(1));
  CHECK(Scalar::rational(-6, 4).to_string() == "-3/2");
  CHECK_THROWS_AS(Scalar(0).inverse(), DivisionByZero);
  Scalar r = Scalar::modular(3, 7);
  CHECK(r * r.inverse() == Scalar::modular(1, 7));
  CHECK(r + Scalar(4) == Scalar::modular(0, 7));
  CHECK_THROWS(Scalar::modular(1, 5) + Scalar::modular(1, 7));
  CHECK(is_prime(2147483647));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("lex_compare examples") {
  CHECK(lex_compare(Monomial{1, 0}, Monomial{0, 5}) > 0);
  CHECK(lex_compare(Monomial{2, 1}, Monomial{2, 1}) == 0);
  std::vector<Monomial> chain{{3, 0}, {2, 3}, {1, 3}, {0, 5}};
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) CHECK(lex_compare(chain[i], chain[i + 1]) > 0);
  CHECK_THROWS_AS(lex_compare(Monomial{1, 0}, Monomial{1, 0, 0}), UsageError);
}

TEST_CASE("lex order is total and multiplicative") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint32_t> ex(0, 4);
  for (int k = 0; k < 500; ++k) {
    Monomial a{ex(rng), ex(rng), ex(rng)}, b{ex(rng), ex(rng), ex(rng)}, c{ex(rng), ex(rng), ex(rng)};
    auto ab = lex_compare(a, b);
    CHECK(lex_compare(b, a) == (0 <=> ab));
    CHECK((ab == 0) == (a == b));
    CHECK(lex_compare(a * c, b * c) == ab);
    if (ab > 0 && lex_compare(b, c) > 0) CHECK(lex_compare(a, c) > 0);
  }
}

TEST_CASE("parse_polynomial examples") {
  Polynomial p = P("x^2*y - 3/2");
  CHECK(p.size() == 2);
  CHECK(p.coefficient(Monomial{2, 1}) == Scalar(1));
  CHECK(p.coefficient(Monomial{0, 0}) == Scalar::rational(-3, 2));
  CHECK(P("x - y - 1").size() == 3);
  Polynomial q = P("y^2 + y^2");
  CHECK(q.size() == 1);
  CHECK(q.coefficient(Monomial{0, 2}) == Scalar(2));
  CHECK(P("(x+y)^2") == P("x^2 + 2*x*y + y^2"));
  CHECK(P("x*y/4") == P("1/4*x*y"));
  CHECK(P("-(x - 1)") == P("1 - x"));
}

TEST_CASE("parse errors carry positions") {
  try {
    P("x + * y");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(P("x + z"), ParseError);
  CHECK_THROWS_AS(P("x/0"), DivisionByZero);
  CHECK_THROWS_AS(P("x/(1-1)"), DivisionByZero);
  CHECK_THROWS_AS(P("x/y"), ParseError);
  CHECK_THROWS_AS(P("(x"), ParseError);
  CHECK_THROWS_AS(P(""), ParseError);
}

TEST_CASE("canonical printing") {
  CHECK(P("y^5 + x^3 - 1/2*x*y^3").to_string() == "x^3 - 1/2*x*y^3 + y^5");
  CHECK(Polynomial(2).to_string() == "0");
  CHECK(P("-x + 1").to_string() == "-x + 1");
  CHECK(P("x^3 - 1/2*x*y^3 + y^5", Field::prime_field(7)).to_string() == "x^3 + 3*x*y^3 + y^5");
}

TEST_CASE("print then parse is the identity") {
  std::mt19937_64 rng(11);
  for (Field f : {Field::rationals(), Field::prime_field(5)}) {
    for (int k = 0; k < 300; ++k) {
      Polynomial p = random_poly(rng, 2, f);
      CHECK(parse_polynomial(p.to_string(), kXY, f) == p);
    }
  }
  std::vector<std::string> names{"x1", "x2", "x3"};
  for (int k = 0; k < 100; ++k) {
    Polynomial p = random_poly(rng, 3, Field::rationals());
    CHECK(parse_polynomial(p.to_string(names), names) == p);
  }
}

TEST_CASE("ring axioms hold exactly") {
  std::mt19937_64 rng(3);
  for (Field f : {Field::rationals(), Field::prime_field(3), Field::prime_field(101)}) {
    for (int k = 0; k < 100; ++k) {
      Polynomial a = random_poly(rng, 2, f), b = random_poly(rng, 2, f), c = random_poly(rng, 2, f);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a + b - b == a);
      CHECK((a - a).is_zero());
      if (!a.is_zero() && !b.is_zero()) {
        CHECK(lex_compare((a * b).leading_monomial(), a.leading_monomial() * b.leading_monomial()) == 0);
      }
    }
  }
}

TEST_CASE("polynomial queries") {
  Polynomial p = P("x^3 - 1/2*x*y^3 + y^5");
  CHECK(p.leading_monomial() == Monomial{3, 0});
  CHECK(p.total_degree() == 5);
  CHECK_FALSE(p.is_homogeneous());
  CHECK(P("x^2 - x*y").is_homogeneous());
  CHECK(Polynomial(2).total_degree() == -1);
  CHECK_THROWS_AS(Polynomial(2).leading_term(), UsageError);
  CHECK(p.substitute(1, P("0")) == P("x^3"));
  std::vector<Scalar> pt{Scalar(2), Scalar(1)};
  CHECK(p.evaluate(pt) == Scalar(8));
  std::vector<Scalar> pt2{Scalar(1), Scalar(2)};
  CHECK(p.evaluate(pt2) == Scalar(29));
  CHECK(pow(P("x+y"), 3) == P("x^3 + 3*x^2*y + 3*x*y^2 + y^3"));
}

TEST_CASE("divide_univariate examples") {
  auto u = [](std::vector<long> c) {
    std::vector<Scalar> s(c.begin(), c.end());
    return UniPoly(s);
  };
  auto [q1, r1] = divide_univariate(u({1, 0, 0, 1}), u({0, 0, 1}));
  CHECK(q1 == u({0, 1}));
  CHECK(r1 == u({1}));
  auto [q2, r2] = divide_univariate(UniPoly(), u({0, 1}));
  CHECK(q2.is_zero());
  CHECK(r2.is_zero());
  auto [q3, r3] = divide_univariate(u({0, 2, 1}), u({1, 1}));
  CHECK(q3 == u({1, 1}));
  CHECK(r3 == u({-1}));
  CHECK(u({1, 1}) * q3 + r3 == u({0, 2, 1}));
  CHECK_THROWS_AS(divide_univariate(u({1}), UniPoly()), DivisionByZero);
  CHECK(UniPoly().degree() == UniPoly::kMinusInfinity);
}

TEST_CASE("division with remainder is correct and unique") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 500; ++k) {
    UniPoly f = random_uni(rng, 6), h = random_uni(rng, 3);
    if (h.is_zero()) continue;
    auto [q, r] = divide_univariate(f, h);
    CHECK(h * q + r == f);
    CHECK(r.degree() < h.degree());
    // Uniqueness: any other (q', r') with q' = q + e, e != 0 has deg r' >= deg h.
    UniPoly e = random_uni(rng, 2);
    if (!e.is_zero()) CHECK((r - h * e).degree() >= h.degree());
  }
}

TEST_CASE("unipoly conversions") {
  UniPoly a = UniPoly::from_polynomial(P("y^2 - 3"), 1);
  CHECK(a.degree() == 2);
  CHECK(a.constant_term() == Scalar(-3));
  CHECK(a.to_polynomial(2, 1) == P("y^2 - 3"));
  CHECK_THROWS_AS(UniPoly::from_polynomial(P("x*y"), 1), UsageError);
  CHECK(a.to_string() == "y^2 - 3");
}
