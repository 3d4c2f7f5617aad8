#include "hbcells/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "hbcells/errors.hpp"

namespace hbcells {

namespace {

void check_same_arity(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) {
    throw UsageError("monomials over different variable counts (" + std::to_string(a.nvars()) +
                     " vs " + std::to_string(b.nvars()) + ")");
  }
}

}  // namespace

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t power) {
  if (index >= nvars) throw UsageError("variable index out of range");
  Monomial m(nvars);
  m.exps_[index] = power;
  return m;
}

std::uint64_t Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::uint32_t e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  check_same_arity(*this, other);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

std::optional<Monomial> Monomial::quotient_of(const Monomial& other) const {
  if (!divides(other)) return std::nullopt;
  Monomial q(nvars());
  for (std::size_t i = 0; i < exps_.size(); ++i) q.exps_[i] = other.exps_[i] - exps_[i];
  return q;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r = *this;
  r *= o;
  return r;
}

Monomial& Monomial::operator*=(const Monomial& o) {
  check_same_arity(*this, o);
  for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] += o.exps_[i];
  return *this;
}

Monomial Monomial::operator/(const Monomial& o) const {
  auto q = o.quotient_of(*this);
  if (!q) throw UsageError("monomial division is not exact");
  return *q;
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
  if (names.size() != exps_.size()) throw UsageError("wrong number of variable names");
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
  check_same_arity(a, b);
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (ea[i] != eb[i]) return ea[i] <=> eb[i];
  }
  return std::strong_ordering::equal;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  check_same_arity(a, b);
  Monomial r(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  check_same_arity(a, b);
  Monomial r(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) { return gcd(a, b).is_one(); }

std::vector<std::string> default_variable_names(std::size_t nvars) {
  if (nvars == 2) return {"x", "y"};
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= nvars; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

}  // namespace hbcells
