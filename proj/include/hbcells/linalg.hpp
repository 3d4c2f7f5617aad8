#pragma once

#include <cstddef>
#include <vector>

#include "hbcells/scalar.hpp"

namespace hbcells {

using ScalarMatrix = std::vector<std::vector<Scalar>>;

// Exact rank by Gaussian elimination. Rows may be empty (0 columns).
std::size_t rank(ScalarMatrix rows);

// Reduced row echelon form; returns the pivot columns. Zero rows are dropped.
std::vector<std::size_t> row_reduce(ScalarMatrix& rows);

}  // namespace hbcells
