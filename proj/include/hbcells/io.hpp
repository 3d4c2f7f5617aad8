#pragma once

#include <string>

#include "json.hpp"

#include "hbcells/betti.hpp"
#include "hbcells/enumeration.hpp"
#include "hbcells/generic_cells.hpp"
#include "hbcells/hilbert_burch.hpp"

namespace hbcells {

using Json = nlohmann::ordered_json;

// Scalars are JSON integers when integral and small, else "a/b" strings
// (residues mod p are plain integers).
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, Field field = Field::rationals());

Json staircase_to_json(const Staircase& e);  // {"m":[...]}
Staircase staircase_from_json(const Json& j);

// {"m":[...], "N":[[[c0,c1,...], ...], ...]}, rows i = 1..t+1, columns
// j = 1..t, each entry the coefficient vector in y (empty for zero).
Json cell_matrix_to_json(const CellMatrix& n);
CellMatrix cell_matrix_from_json(const Json& j, Field field = Field::rationals());

// "[[-2],[3]]": rows of entries printed as polynomials in y.
std::string cell_matrix_to_text(const CellMatrix& n);

Json frame_to_json(const CanonicalFrame& f);

// {"j", "rows", "cols", "entries", "star_rows", "star_cols", "u",
// "rank_bound"}; entries is a list of rows of ["p",k] / ["zero"] / ["one"].
Json stratum_to_json(const StratumDescriptor& d);
StratumDescriptor stratum_from_json(const Json& j);

Json betti_to_json(const BettiTable& t);
BettiTable betti_from_json(const Json& j);

Json census_to_json(const CellCensus& c);
CellCensus census_from_json(const Json& j);

Json elimination_to_json(const EliminationReport& r, bool with_log);

// Bordered display of M0(E) + N: the b_i above the columns and the a_i to
// the left of the rows.
std::string hilbert_burch_latex(const CellMatrix& n);
// Bordered display of M(p)_j, or of its star reduction.
std::string piece_latex(const GradedPieceMatrix& g, bool star);

std::string piece_entry_text(const PieceEntry& e);  // "p7", "0", "1"

}  // namespace hbcells
