#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "hbcells/groebner.hpp"
#include "hbcells/monomial.hpp"
#include "hbcells/polynomial.hpp"

namespace hbcells {

// Polynomial in x_1..x_n whose coefficients are polynomials over Q in the
// parameters lambda_1..lambda_N; terms are kept in decreasing lex order.
class ParamPolynomial {
 public:
  using TermMap = std::map<Monomial, Polynomial, LexGreater>;

  ParamPolynomial(std::size_t nvars, std::size_t nparams) : nvars_(nvars), nparams_(nparams) {}

  std::size_t nvars() const { return nvars_; }
  std::size_t nparams() const { return nparams_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Adds c * m, dropping the term if it cancels.
  void add_term(const Monomial& m, const Polynomial& c);
  Polynomial coefficient(const Monomial& m) const;
  // Adds c * s * other.
  void add_multiple(const Polynomial& c, const Monomial& s, const ParamPolynomial& other);

  // Evaluate the parameters, giving a polynomial in the x variables.
  Polynomial specialize(const std::vector<Scalar>& lambda) const;

  std::string to_string(const std::vector<std::string>& xnames, const std::vector<std::string>& pnames) const;

 private:
  std::size_t nvars_;
  std::size_t nparams_;
  TermMap terms_;
};

struct ParameterSlot {
  Monomial lead;   // the generator m
  Monomial tail;   // the monomial m' it multiplies
};

// f_m = m - sum lambda(m, m') m' for the minimal generators m of E, in
// increasing lex order of m; within each f_m the m' run in decreasing lex
// order and parameters are numbered consecutively in that order.
//   graded:   m' not in E, deg m' = deg m, m' < m
//   ungraded: m' not in E, m' < m (needs finite colength)
struct GenericFamily {
  std::size_t nvars = 0;
  bool graded = true;
  MonomialIdeal e{0};
  std::vector<Monomial> leads;
  std::vector<ParamPolynomial> members;
  std::vector<ParameterSlot> parameters;

  std::size_t nparams() const { return parameters.size(); }
};

// UsageError if gens are not monomials in nvars variables; DomainError if
// ungraded and E has infinite colength.
GenericFamily generic_family(const std::vector<Monomial>& gens, std::size_t nvars, bool graded);

// Every coefficient of every S-pair remainder, as a polynomial in the
// lambdas, in S-pair order. Pairs with coprime leading monomials are skipped;
// each reduction step uses the lex-largest dividing leading monomial.
std::vector<Polynomial> buchberger_equations(const GenericFamily& f);

struct Elimination {
  std::size_t parameter;  // 0-based
  Polynomial value;       // lambda_parameter = value, free of lambda_parameter
};

struct EliminationReport {
  std::size_t initial = 0;
  std::vector<Elimination> eliminated;  // in order of elimination
  std::vector<std::size_t> survivors;   // 0-based, increasing
  std::vector<Polynomial> residual;     // monic, deduplicated, irredundant

  std::size_t eliminated_count() const { return eliminated.size(); }
  std::size_t surviving_count() const { return survivors.size(); }
};

// Repeatedly picks the first equation (in list order) and the first
// parameter lambda (by index) such that the equation is c*lambda + B with c a
// nonzero scalar and B free of lambda, then substitutes lambda = -B/c
// everywhere. Residual equations are made monic and deduplicated; an
// equation lying in the ideal generated by the remaining ones is dropped.
EliminationReport eliminate_linear(std::vector<Polynomial> eqs, std::size_t nparams);

// Residual equations vanish completely.
bool affine_space_check(const EliminationReport& report);

// Full parameter vector from values of the survivors (in survivor order),
// back-substituting the eliminations.
std::vector<Scalar> solve_parameters(const EliminationReport& report, const std::vector<Scalar>& survivor_values);

// The generators f_m at a parameter point.
IdealBasis specialize_family(const GenericFamily& f, const std::vector<Scalar>& lambda);

// Parameters lambda_k that divide p, i.e. linear factors of the form lambda_k.
std::vector<std::size_t> single_parameter_factors(const Polynomial& p);

std::vector<std::string> lambda_names(std::size_t n);  // a1..aN

}  // namespace hbcells
