#include "hbcells/unipoly.hpp"

#include <algorithm>

#include "hbcells/errors.hpp"

namespace hbcells {

UniPoly::UniPoly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Scalar& c) { return UniPoly(std::vector<Scalar>{c}); }

UniPoly UniPoly::monomial(int degree, const Scalar& c) {
  if (degree < 0) throw UsageError("negative degree");
  std::vector<Scalar> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar UniPoly::coefficient(int degree) const {
  if (degree < 0 || degree >= static_cast<int>(coeffs_.size())) return Scalar(0);
  return coeffs_[static_cast<std::size_t>(degree)];
}

const Scalar& UniPoly::leading_coefficient() const {
  if (coeffs_.empty()) throw UsageError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

Polynomial UniPoly::to_polynomial(std::size_t nvars, std::size_t var) const {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    terms.push_back({Monomial::variable(nvars, var, static_cast<std::uint32_t>(i)), coeffs_[i]});
  }
  return Polynomial::from_terms(nvars, std::move(terms));
}

UniPoly UniPoly::from_polynomial(const Polynomial& p, std::size_t var) {
  std::vector<Scalar> coeffs(p.is_zero() ? 0 : p.degree_in(var) + 1);
  for (const auto& t : p.terms()) {
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      if (i != var && t.mono[i] != 0) throw UsageError("polynomial is not univariate");
    }
    coeffs[t.mono[var]] = t.coef;
  }
  return UniPoly(std::move(coeffs));
}

std::string UniPoly::to_string(const std::string& var) const {
  return to_polynomial(1, 0).to_string({var});
}

std::pair<UniPoly, UniPoly> divide_univariate(const UniPoly& f, const UniPoly& h) {
  if (h.is_zero()) throw DivisionByZero();
  UniPoly r = f;
  if (r.degree() < h.degree()) return {UniPoly(), r};
  std::vector<Scalar> q(static_cast<std::size_t>(r.degree() - h.degree()) + 1);
  Scalar lead_inv = h.leading_coefficient().inverse();
  while (!r.is_zero() && r.degree() >= h.degree()) {
    int shift = r.degree() - h.degree();
    Scalar c = r.leading_coefficient() * lead_inv;
    q[static_cast<std::size_t>(shift)] = c;
    r -= UniPoly::monomial(shift, c) * h;
  }
  return {UniPoly(std::move(q)), r};
}

}  // namespace hbcells
