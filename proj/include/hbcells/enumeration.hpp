#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hbcells/staircase.hpp"

namespace hbcells {

struct CensusRecord {
  Staircase e;
  std::uint64_t dims[4];  // V0, V1, V2, V3
};

// Polynomial in q with integer coefficients, exponent -> coefficient.
using QPolynomial = std::map<int, std::int64_t>;

std::string to_string(const QPolynomial& p);  // "q^4 + q^3"
std::uint64_t evaluate(const QPolynomial& p, std::uint64_t q);

struct CellCensus {
  int colength = 0;
  std::vector<CensusRecord> records;  // in enumerate_staircases order
  QPolynomial total;                  // sum over E of q^{dim V0(E)}
};

CellCensus cell_census(int d);

// Number of ideals of colength d in F_q[x,y], computed without any cell
// theory: such ideals correspond to commuting pairs (X, Y) of d x d matrices
// with a cyclic vector, up to conjugation. Supports q in {2, 3, 4} and
// d in {1, 2, 3}; UsageError otherwise.
std::uint64_t brute_force_ideal_count(int d, int q);

}  // namespace hbcells
