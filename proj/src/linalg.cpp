#include "hbcells/linalg.hpp"

#include <utility>

namespace hbcells {

std::vector<std::size_t> row_reduce(ScalarMatrix& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t ncols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    Scalar inv = rows[r][c].inverse();
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Scalar f = rows[i][c];
      for (std::size_t k = c; k < ncols; ++k) rows[i][k] -= f * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::size_t rank(ScalarMatrix rows) { return row_reduce(rows).size(); }

}  // namespace hbcells
