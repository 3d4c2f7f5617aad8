#include "hbcells/generic_cells.hpp"

#include <algorithm>
#include <optional>

#include "hbcells/errors.hpp"

namespace hbcells {

void ParamPolynomial::add_term(const Monomial& m, const Polynomial& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Polynomial ParamPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Polynomial(nparams_) : it->second;
}

void ParamPolynomial::add_multiple(const Polynomial& c, const Monomial& s, const ParamPolynomial& other) {
  for (const auto& [m, coef] : other.terms_) add_term(m * s, c * coef);
}

Polynomial ParamPolynomial::specialize(const std::vector<Scalar>& lambda) const {
  std::vector<Term> out;
  for (const auto& [m, coef] : terms_) out.push_back({m, coef.evaluate(lambda)});
  return Polynomial::from_terms(nvars_, std::move(out));
}

std::string ParamPolynomial::to_string(const std::vector<std::string>& xnames,
                                       const std::vector<std::string>& pnames) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, coef] : terms_) {
    // A single negative term prints as a subtraction.
    bool negative = coef.size() == 1 && coef.leading_coefficient().is_negative();
    Polynomial shown = negative ? -coef : coef;
    if (!out.empty()) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    std::string c = shown.to_string(pnames);
    if (shown.size() > 1) c = "(" + c + ")";
    if (m.is_one()) {
      out += c;
    } else if (shown.is_constant() && shown.leading_coefficient() == Scalar(1)) {
      out += m.to_string(xnames);
    } else {
      out += c + "*" + m.to_string(xnames);
    }
  }
  return out;
}

namespace {

// Standard monomials in the box below the pure powers of E.
std::vector<Monomial> standard_monomials(const MonomialIdeal& e) {
  const std::size_t n = e.nvars();
  std::vector<std::uint32_t> bound(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto p = e.pure_power(v);
    if (!p) throw DomainError("monomial ideal has infinite colength; the ungraded family is infinite");
    bound[v] = *p;
  }
  std::vector<Monomial> out;
  Monomial cur(n);
  while (true) {
    if (!e.contains(cur)) out.push_back(cur);
    std::size_t v = 0;
    while (v < n) {
      if (++cur[v] < bound[v]) break;
      cur[v] = 0;
      ++v;
    }
    if (v == n) break;
  }
  std::sort(out.begin(), out.end(), LexGreater{});
  return out;
}

}  // namespace

GenericFamily generic_family(const std::vector<Monomial>& gens, std::size_t nvars, bool graded) {
  if (nvars == 0) throw UsageError("need at least one variable");
  for (const auto& g : gens) {
    if (g.nvars() != nvars) throw UsageError("generator has the wrong number of variables");
  }
  GenericFamily f;
  f.nvars = nvars;
  f.graded = graded;
  f.e = MonomialIdeal(nvars, gens);
  if (f.e.generators().empty()) throw UsageError("monomial ideal needs at least one generator");
  if (f.e.is_unit()) throw DomainError("the unit ideal has an empty family");
  f.leads = f.e.generators();
  std::sort(f.leads.begin(), f.leads.end(), [](const Monomial& a, const Monomial& b) { return lex_compare(a, b) < 0; });

  std::vector<Monomial> pool;
  if (!graded) pool = standard_monomials(f.e);

  std::vector<std::vector<Monomial>> tails;
  for (const auto& m : f.leads) {
    std::vector<Monomial> cand;
    if (graded) {
      cand = monomials_of_degree(nvars, static_cast<std::uint32_t>(m.degree()));
      std::erase_if(cand, [&](const Monomial& c) { return f.e.contains(c) || lex_compare(c, m) >= 0; });
    } else {
      for (const auto& c : pool)
        if (lex_compare(c, m) < 0) cand.push_back(c);
    }
    for (const auto& c : cand) f.parameters.push_back({m, c});
    tails.push_back(std::move(cand));
  }
  const std::size_t np = f.parameters.size();
  std::size_t k = 0;
  for (std::size_t g = 0; g < f.leads.size(); ++g) {
    ParamPolynomial p(nvars, np);
    p.add_term(f.leads[g], Polynomial::constant(np, Scalar(1)));
    for (const auto& c : tails[g]) p.add_term(c, -Polynomial::variable(np, k++));
    f.members.push_back(std::move(p));
  }
  return f;
}

std::vector<Polynomial> buchberger_equations(const GenericFamily& f) {
  const std::size_t np = f.nparams();
  const Polynomial one = Polynomial::constant(np, Scalar(1));
  std::vector<Polynomial> eqs;
  const std::size_t r = f.members.size();
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = a + 1; b < r; ++b) {
      const Monomial& ma = f.leads[a];
      const Monomial& mb = f.leads[b];
      if (coprime(ma, mb)) continue;
      Monomial l = lcm(ma, mb);
      ParamPolynomial s(f.nvars, np);
      s.add_multiple(one, l / ma, f.members[a]);
      s.add_multiple(-one, l / mb, f.members[b]);

      ParamPolynomial rem(f.nvars, np);
      while (!s.is_zero()) {
        auto it = s.terms().begin();
        Monomial t = it->first;
        Polynomial c = it->second;
        std::size_t best = r;
        for (std::size_t g = 0; g < r; ++g) {
          if (f.leads[g].divides(t) && (best == r || lex_compare(f.leads[g], f.leads[best]) > 0)) best = g;
        }
        if (best == r) {
          rem.add_term(t, c);
          s.add_term(t, -c);
        } else {
          s.add_multiple(-c, t / f.leads[best], f.members[best]);
        }
      }
      for (const auto& [m, c] : rem.terms()) eqs.push_back(c);
    }
  }
  return eqs;
}

namespace {

// If eq = c * lambda_k + B with c a nonzero scalar and B free of lambda_k,
// returns -B/c.
std::optional<Polynomial> linear_solution(const Polynomial& eq, std::size_t k) {
  if (eq.degree_in(k) != 1) return std::nullopt;
  const Monomial lam = Monomial::variable(eq.nvars(), k);
  std::optional<Scalar> c;
  std::vector<Term> rest;
  for (const auto& t : eq.terms()) {
    if (t.mono[k] == 0) {
      rest.push_back(t);
    } else if (t.mono == lam) {
      c = t.coef;
    } else {
      return std::nullopt;
    }
  }
  if (!c) return std::nullopt;
  return Polynomial::from_terms(eq.nvars(), std::move(rest)).scaled(-c->inverse());
}

void normalize(std::vector<Polynomial>& eqs) {
  std::vector<Polynomial> out;
  for (auto& e : eqs) {
    if (e.is_zero()) continue;
    Polynomial m = e.monic();
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(std::move(m));
  }
  eqs = std::move(out);
}

bool in_ideal(const Polynomial& f, const std::vector<Polynomial>& gens) {
  if (gens.empty()) return f.is_zero();
  IdealBasis gb = buchberger_reduced(IdealBasis(f.nvars(), gens));
  return reduce(f, gb).remainder.is_zero();
}

}  // namespace

EliminationReport eliminate_linear(std::vector<Polynomial> eqs, std::size_t nparams) {
  for (const auto& e : eqs) {
    if (e.nvars() != nparams) throw UsageError("equation ring does not match the parameter count");
  }
  EliminationReport report;
  report.initial = nparams;
  std::vector<bool> gone(nparams, false);
  normalize(eqs);
  while (true) {
    bool found = false;
    for (std::size_t q = 0; q < eqs.size() && !found; ++q) {
      for (std::size_t k = 0; k < nparams && !found; ++k) {
        if (gone[k]) continue;
        auto value = linear_solution(eqs[q], k);
        if (!value) continue;
        found = true;
        gone[k] = true;
        for (auto& e : eqs) {
          if (e.degree_in(k) > 0) e = e.substitute(k, *value);
        }
        report.eliminated.push_back({k, std::move(*value)});
      }
    }
    if (!found) break;
    normalize(eqs);
  }
  for (std::size_t k = 0; k < nparams; ++k)
    if (!gone[k]) report.survivors.push_back(k);

  // Drop equations implied by the others, scanning from the end.
  for (std::size_t q = eqs.size(); q-- > 0;) {
    std::vector<Polynomial> others;
    for (std::size_t o = 0; o < eqs.size(); ++o)
      if (o != q) others.push_back(eqs[o]);
    if (in_ideal(eqs[q], others)) eqs.erase(eqs.begin() + static_cast<std::ptrdiff_t>(q));
  }
  report.residual = std::move(eqs);
  return report;
}

bool affine_space_check(const EliminationReport& report) { return report.residual.empty(); }

std::vector<Scalar> solve_parameters(const EliminationReport& report, const std::vector<Scalar>& survivor_values) {
  if (survivor_values.size() != report.survivors.size()) {
    throw UsageError("expected " + std::to_string(report.survivors.size()) + " survivor values");
  }
  std::vector<Scalar> lambda(report.initial, Scalar(0));
  for (std::size_t i = 0; i < report.survivors.size(); ++i) lambda[report.survivors[i]] = survivor_values[i];
  for (auto it = report.eliminated.rbegin(); it != report.eliminated.rend(); ++it) {
    lambda[it->parameter] = it->value.evaluate(lambda);
  }
  return lambda;
}

IdealBasis specialize_family(const GenericFamily& f, const std::vector<Scalar>& lambda) {
  if (lambda.size() != f.nparams()) throw UsageError("parameter vector has the wrong length");
  IdealBasis out(f.nvars, {});
  for (const auto& m : f.members) out.elements.push_back(m.specialize(lambda));
  return out;
}

std::vector<std::size_t> single_parameter_factors(const Polynomial& p) {
  std::vector<std::size_t> out;
  if (p.is_zero()) return out;
  for (std::size_t k = 0; k < p.nvars(); ++k) {
    bool divides = std::all_of(p.terms().begin(), p.terms().end(), [&](const Term& t) { return t.mono[k] > 0; });
    if (divides) out.push_back(k);
  }
  return out;
}

std::vector<std::string> lambda_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("a" + std::to_string(i));
  return names;
}

}  // namespace hbcells
