#include "hbcells/groebner.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <tuple>

#include "hbcells/errors.hpp"
#include "hbcells/linalg.hpp"

namespace hbcells {

IdealBasis::IdealBasis(std::size_t n, std::vector<Polynomial> elems)
    : nvars(n), elements(std::move(elems)) {
  for (const auto& p : elements) {
    if (p.nvars() != nvars) throw UsageError("generator over the wrong number of variables");
  }
}

IdealBasis::IdealBasis(std::vector<Polynomial> elems)
    : IdealBasis(elems.empty() ? 0 : elems.front().nvars(), std::move(elems)) {}

bool IdealBasis::is_homogeneous() const {
  return std::all_of(elements.begin(), elements.end(),
                     [](const Polynomial& p) { return p.is_homogeneous(); });
}

std::string IdealBasis::to_string() const {
  std::string out;
  for (const auto& p : elements) {
    if (!out.empty()) out += ", ";
    out += p.to_string();
  }
  return out;
}

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Monomial> generators) : nvars_(nvars) {
  for (const auto& g : generators) {
    if (g.nvars() != nvars) throw UsageError("monomial generator over the wrong number of variables");
  }
  // Sort by degree so a divisor is always seen before its multiples.
  std::sort(generators.begin(), generators.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return lex_compare(a, b) > 0;
  });
  for (auto& g : generators) {
    bool redundant = std::any_of(gens_.begin(), gens_.end(),
                                 [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) gens_.push_back(std::move(g));
  }
  std::sort(gens_.begin(), gens_.end(), LexGreater{});
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::is_unit() const {
  return gens_.size() == 1 && gens_.front().is_one();
}

std::optional<std::uint32_t> MonomialIdeal::pure_power(std::size_t var) const {
  std::optional<std::uint32_t> best;
  for (const auto& g : gens_) {
    bool pure = true;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (i != var && g[i] != 0) pure = false;
    }
    if (pure && (!best || g[var] < *best)) best = g[var];
  }
  return best;
}

std::string MonomialIdeal::to_string() const {
  std::string out = "(";
  auto names = default_variable_names(nvars_);
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i > 0) out += ", ";
    out += gens_[i].to_string(names);
  }
  return out + ")";
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw UsageError("S-polynomial of a zero polynomial");
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  return f.mul_term(l / f.leading_monomial(), f.leading_coefficient().inverse()) -
         g.mul_term(l / g.leading_monomial(), g.leading_coefficient().inverse());
}

Reduction reduce(const Polynomial& f, const IdealBasis& basis) {
  Reduction out;
  out.remainder = Polynomial(f.nvars());
  out.quotients.assign(basis.elements.size(), Polynomial(f.nvars()));
  std::vector<Term> rem;
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term lt = p.leading_term();
    bool reduced = false;
    for (std::size_t i = 0; i < basis.elements.size(); ++i) {
      const Polynomial& b = basis.elements[i];
      if (b.is_zero()) continue;
      auto q = b.leading_monomial().quotient_of(lt.mono);
      if (!q) continue;
      Scalar c = lt.coef / b.leading_coefficient();
      out.quotients[i] += Polynomial::monomial(*q, c);
      p -= b.mul_term(*q, c);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.push_back(lt);
      p.drop_leading_term();
    }
  }
  out.remainder = Polynomial::from_terms(f.nvars(), std::move(rem));
  return out;
}

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

// Smallest lcm first: total degree, then lex.
struct PairAfter {
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() > b.lcm.degree();
    auto c = lex_compare(a.lcm, b.lcm);
    if (c != 0) return c > 0;
    return std::tie(a.i, a.j) > std::tie(b.i, b.j);
  }
};

// Drop elements whose leading monomial is a multiple of another's, reduce
// tails, normalize to monic and sort.
std::vector<Polynomial> auto_reduce(std::vector<Polynomial> g) {
  std::sort(g.begin(), g.end(), [](const Polynomial& a, const Polynomial& b) {
    return lex_compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  std::vector<Polynomial> minimal;
  for (auto& p : g) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& q) {
      return q.leading_monomial().divides(p.leading_monomial());
    });
    if (!redundant) minimal.push_back(p.monic());
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    IdealBasis others(minimal.front().nvars(), {});
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      if (k != i) others.elements.push_back(minimal[k]);
    }
    const Term lead = minimal[i].leading_term();
    Polynomial tail = minimal[i] - Polynomial::monomial(lead.mono, lead.coef);
    minimal[i] = Polynomial::monomial(lead.mono, lead.coef) + reduce(tail, others).remainder;
  }
  std::sort(minimal.begin(), minimal.end(), [](const Polynomial& a, const Polynomial& b) {
    return lex_compare(a.leading_monomial(), b.leading_monomial()) > 0;
  });
  return minimal;
}

}  // namespace

IdealBasis buchberger_reduced(const IdealBasis& gens) {
  std::vector<Polynomial> g;
  for (const auto& p : gens.elements) {
    if (!p.is_zero()) g.push_back(p.monic());
  }
  if (g.empty()) throw UsageError("ideal needs at least one nonzero generator");
  const std::size_t n = gens.nvars;
  for (const auto& p : g) {
    if (p.is_constant()) return IdealBasis(n, {p});
  }

  std::priority_queue<Pair, std::vector<Pair>, PairAfter> pairs;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      const Monomial& a = g[i].leading_monomial();
      const Monomial& b = g[j].leading_monomial();
      if (coprime(a, b)) continue;
      pairs.push({i, j, lcm(a, b)});
    }
  };
  for (std::size_t j = 1; j < g.size(); ++j) add_pairs_for(j);

  while (!pairs.empty()) {
    Pair pr = pairs.top();
    pairs.pop();
    Polynomial r = reduce(s_polynomial(g[pr.i], g[pr.j]), IdealBasis(n, g)).remainder;
    if (r.is_zero()) continue;
    if (r.is_constant()) return IdealBasis(n, {r.monic()});
    g.push_back(r.monic());
    add_pairs_for(g.size() - 1);
  }
  return IdealBasis(n, auto_reduce(std::move(g)));
}

bool is_groebner_basis(const IdealBasis& basis) {
  for (std::size_t i = 0; i < basis.elements.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.elements.size(); ++j) {
      if (!reduce(s_polynomial(basis.elements[i], basis.elements[j]), basis).remainder.is_zero()) {
        return false;
      }
    }
  }
  return true;
}

MonomialIdeal leading_term_ideal(const IdealBasis& gb) {
  std::vector<Monomial> lts;
  for (const auto& p : gb.elements) {
    if (!p.is_zero()) lts.push_back(p.leading_monomial());
  }
  return MonomialIdeal(gb.nvars, std::move(lts));
}

std::optional<std::uint64_t> colength(const MonomialIdeal& e) {
  const std::size_t n = e.nvars();
  std::vector<std::uint32_t> bounds(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto p = e.pure_power(v);
    if (!p) return std::nullopt;
    bounds[v] = *p;
  }
  if (n == 0) return e.is_unit() ? 0 : 1;
  std::uint64_t count = 0;
  Monomial m(n);
  // Odometer over the box [0, bounds).
  for (;;) {
    if (!e.contains(m)) ++count;
    std::size_t v = 0;
    while (v < n) {
      if (m[v] + 1 < bounds[v]) {
        ++m[v];
        break;
      }
      m[v] = 0;
      ++v;
    }
    if (v == n) break;
  }
  return count;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t d) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  Monomial m(nvars);
  // Recursive fill in decreasing lex order: largest first exponent first.
  auto rec = [&](auto&& self, std::size_t var, std::uint32_t left) -> void {
    if (var + 1 == nvars) {
      m[var] = left;
      out.push_back(m);
      return;
    }
    for (std::uint32_t e = left + 1; e-- > 0;) {
      m[var] = e;
      self(self, var + 1, left - e);
    }
    m[var] = 0;
  };
  rec(rec, 0, d);
  return out;
}

std::size_t graded_minimal_generators(const IdealBasis& ideal, std::uint32_t j) {
  IdealBasis gb = buchberger_reduced(ideal);
  if (!gb.is_homogeneous()) throw UsageError("graded_minimal_generators needs a homogeneous ideal");
  const std::size_t n = gb.nvars;
  auto basis = monomials_of_degree(n, j);
  std::map<Monomial, std::size_t, LexGreater> column;
  for (std::size_t c = 0; c < basis.size(); ++c) column[basis[c]] = c;

  ScalarMatrix all;
  ScalarMatrix from_below;
  for (const auto& g : gb.elements) {
    auto dg = static_cast<std::uint32_t>(g.total_degree());
    if (dg > j) continue;
    for (const auto& m : monomials_of_degree(n, j - dg)) {
      std::vector<Scalar> row(basis.size());
      for (const auto& t : g.terms()) row[column.at(t.mono * m)] = t.coef;
      if (dg < j) from_below.push_back(row);
      all.push_back(std::move(row));
    }
  }
  return rank(std::move(all)) - rank(std::move(from_below));
}

}  // namespace hbcells
