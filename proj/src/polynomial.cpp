#include "hbcells/polynomial.hpp"

#include <algorithm>
#include <ostream>

#include "hbcells/errors.hpp"

namespace hbcells {

namespace {

// Merge two sorted term lists, b scaled by sign.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    auto cmp = lex_compare(a[i].mono, b[j].mono);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(subtract ? Term{b[j].mono, -b[j].coef} : b[j]);
      ++j;
    } else {
      Scalar c = subtract ? a[i].coef - b[j].coef : a[i].coef + b[j].coef;
      if (!c.is_zero()) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(subtract ? Term{b[j].mono, -b[j].coef} : b[j]);
  return out;
}

}  // namespace

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.mono.nvars() != nvars) throw UsageError("term has the wrong number of variables");
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return lex_compare(a.mono, b.mono) > 0; });
  Polynomial p(nvars);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef += t.coef;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coef.is_zero()) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coef.is_zero()) p.terms_.pop_back();
  return p;
}

Polynomial Polynomial::constant(std::size_t nvars, const Scalar& c) {
  Polynomial p(nvars);
  if (!c.is_zero()) p.terms_.push_back({Monomial(nvars), c});
  return p;
}

Polynomial Polynomial::monomial(const Monomial& m, const Scalar& c) {
  Polynomial p(m.nvars());
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  return monomial(Monomial::variable(nvars, index));
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw UsageError("leading term of the zero polynomial");
  return terms_.front();
}

void Polynomial::drop_leading_term() {
  if (!terms_.empty()) terms_.erase(terms_.begin());
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.mono == m) return t.coef;
  }
  return Scalar(0);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  auto d = terms_.front().mono.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Term& t) { return t.mono.degree() == d; });
}

std::int64_t Polynomial::total_degree() const {
  std::int64_t d = -1;
  for (const auto& t : terms_) d = std::max<std::int64_t>(d, static_cast<std::int64_t>(t.mono.degree()));
  return d;
}

std::uint32_t Polynomial::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[var]);
  return d;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || terms_.front().coef.is_one()) return *this;
  return scaled(terms_.front().coef.inverse());
}

Polynomial Polynomial::mul_term(const Monomial& m, const Scalar& c) const {
  Polynomial p(nvars_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coef * c});
  return p;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  Polynomial p(nvars_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono, t.coef * c});
  return p;
}

void Polynomial::check_arity(const Polynomial& o) const {
  if (nvars_ != o.nvars_) {
    throw UsageError("polynomials over different variable counts (" + std::to_string(nvars_) +
                     " vs " + std::to_string(o.nvars_) + ")");
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_arity(o);
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_arity(o);
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial Polynomial::operator-() const { return scaled(Scalar(-1)); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_arity(b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.nvars());
  const Polynomial& small = a.size() <= b.size() ? a : b;
  const Polynomial& large = a.size() <= b.size() ? b : a;
  if (small.size() == 1) return large.mul_term(small.terms_[0].mono, small.terms_[0].coef);
  std::vector<Term> all;
  all.reserve(a.size() * b.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) all.push_back({s.mono * t.mono, s.coef * t.coef});
  }
  return Polynomial::from_terms(a.nvars(), std::move(all));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

Polynomial Polynomial::substitute(std::size_t var, const Polynomial& value) const {
  check_arity(value);
  if (var >= nvars_) throw UsageError("substitution variable out of range");
  std::uint32_t maxdeg = degree_in(var);
  if (maxdeg == 0) return *this;
  std::vector<Polynomial> powers{Polynomial::constant(nvars_, Scalar(1))};
  for (std::uint32_t e = 1; e <= maxdeg; ++e) powers.push_back(powers.back() * value);
  std::vector<Term> untouched;
  Polynomial result(nvars_);
  for (const auto& t : terms_) {
    std::uint32_t e = t.mono[var];
    if (e == 0) {
      untouched.push_back(t);
      continue;
    }
    Monomial rest = t.mono;
    rest[var] = 0;
    result += powers[e].mul_term(rest, t.coef);
  }
  result += from_terms(nvars_, std::move(untouched));
  return result;
}

Scalar Polynomial::evaluate(std::span<const Scalar> point) const {
  if (point.size() != nvars_) throw UsageError("evaluation point has the wrong dimension");
  Scalar sum(0);
  for (const auto& t : terms_) {
    Scalar v = t.coef;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (std::uint32_t e = 0; e < t.mono[i]; ++e) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::in_field(std::uint32_t prime) const {
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) ts.push_back({t.mono, t.coef.in_field(prime)});
  return from_terms(nvars_, std::move(ts));
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Scalar c = t.coef;
    bool negative = c.is_negative();
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += c.to_string();
    } else if (c.is_one()) {
      out += t.mono.to_string(names);
    } else {
      out += c.to_string() + "*" + t.mono.to_string(names);
    }
  }
  return out;
}

std::string Polynomial::to_string() const { return to_string(default_variable_names(nvars_)); }

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

Polynomial pow(const Polynomial& p, std::uint32_t e) {
  Polynomial result = Polynomial::constant(p.nvars(), Scalar(1));
  Polynomial base = p;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

}  // namespace hbcells
