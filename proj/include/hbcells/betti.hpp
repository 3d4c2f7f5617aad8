#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hbcells/grid.hpp"
#include "hbcells/polynomial.hpp"
#include "hbcells/scalar.hpp"
#include "hbcells/staircase.hpp"

namespace hbcells {

// Degrees of the graded resolution
//   0 -> sum_i R(-b_i) -> sum_i R(-a_i) -> I -> 0
// of any homogeneous I with Lt(I) = E, through M0(E) + N, N in T3(E).
struct ResolutionDegrees {
  std::vector<int> a;  // a_1..a_{t+1} (stored 0-based), a_i = t+1-i+m_{i-1}
  std::vector<int> b;  // b_1..b_t, b_i = a_{i+1}+1
};

ResolutionDegrees resolution_degrees(const Staircase& e);

// One entry of M(p)_j: zero, one, or the parameter p_k, where k is the
// 1-based position of (row, col) in S(E).
struct PieceEntry {
  enum class Kind { Zero, One, Param };
  Kind kind = Kind::Zero;
  int param = 0;
  friend bool operator==(const PieceEntry&, const PieceEntry&) = default;
};

// M(p)_j: rows w_j = {i : a_i = j}, columns v_j = {i : b_i = j}. The star
// reduction drops each i in w_j cap v_j as both a row and a column.
struct GradedPieceMatrix {
  int j = 0;
  std::vector<int> rows;
  std::vector<int> cols;
  Grid<PieceEntry> entries;
  std::vector<int> star_rows;
  std::vector<int> star_cols;

  Grid<PieceEntry> star() const;
  // Parameter indices occurring in the matrix, increasing.
  std::vector<int> parameters() const;
};

GradedPieceMatrix graded_matrix(const Staircase& e, int j);

// Degrees j with w_j or v_j nonempty, increasing.
std::vector<int> resolution_degree_range(const Staircase& e);

struct BettiEntry {
  int beta0 = 0;
  int beta1 = 0;
  friend bool operator==(const BettiEntry&, const BettiEntry&) = default;
};

// Degree j -> (beta_{0,j}, beta_{1,j}); degrees where both vanish are omitted.
using BettiTable = std::map<int, BettiEntry>;

// Betti numbers of the ideal of maximal minors of M0(E) + N(p), where p
// lists one scalar per element of S(E) in column-major order:
//   beta_{0,j} = #w_j - rank M(p)_j,  beta_{1,j} = #v_j - rank M(p)_j.
// UsageError if p.size() != #S(E).
BettiTable betti_numbers(const Staircase& e, const std::vector<Scalar>& p);

// beta_{0,j}(E) = #(w_j minus w_j cap v_j).
int monomial_beta0(const Staircase& e, int j);

// V(E, j, >= u) = {p : rank M(p)_j^* <= beta_{0,j}(E) - u}.
struct StratumDescriptor {
  GradedPieceMatrix piece;
  int u = 0;
  int rank_bound = 0;  // negative: the stratum is empty
};

StratumDescriptor stratum_descriptor(const Staircase& e, int j, int u);

// Equations of the stratum as polynomials in p_1..p_{#S(E)}: the nonzero
// (rank_bound+1)-minors of the star matrix, up to sign and deduplicated.
// Empty when the rank condition is vacuous; {1} when the stratum is empty.
std::vector<Polynomial> stratum_equations(const StratumDescriptor& d, std::size_t nparams);

// Codimension (beta_{1,j} - beta_{0,j} + u) u of V(L, j, >= u) for a
// lex-segment L. UsageError if L is not a lex-segment, DomainError if u is
// outside [beta_{0,j} - beta_{1,j}, beta_{0,j}].
int lex_codim(const Staircase& l, int j, int u);

enum class GDimMethod { Bella, Brutta };

// dim G(h): h_c + sum_{j=c}^{s} p_j p_{j+1} (bella), or #S(L(h)) (brutta).
int g_dim(const HSeries& h, GDimMethod method);

std::vector<std::string> parameter_names(std::size_t n);  // p1..pn

}  // namespace hbcells
