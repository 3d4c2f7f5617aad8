#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "hbcells/errors.hpp"

namespace hbcells {

// Dense rows x cols matrix addressed with 1-based (row, col) pairs, matching
// the usual n_{i,j} / u_{i,j} indexing of Hilbert-Burch matrices.
template <class T>
class Grid {
 public:
  Grid() = default;
  Grid(int rows, int cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {
    if (rows < 0 || cols < 0) throw UsageError("negative matrix dimension");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& at(int i, int j) { return data_[index(i, j)]; }
  const T& at(int i, int j) const { return data_[index(i, j)]; }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t index(int i, int j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_) throw UsageError("matrix index out of range");
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j - 1);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

struct IndexPair {
  int row;
  int col;
  friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

}  // namespace hbcells
