#pragma once

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

namespace sclink {

/// One nonzero ("star") position of a structured matrix, 1-based (row, col).
using Star = std::pair<int, int>;

/// Zero/star pattern of a structured matrix.
///
/// Only star positions are stored; the list is kept sorted row-major and
/// duplicate-free, so patterns compare and serialize deterministically.
class SparsityPattern {
public:
  SparsityPattern() = default;
  SparsityPattern(int n_rows, int n_cols);
  SparsityPattern(int n_rows, int n_cols, std::vector<Star> stars);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t star_count() const { return stars_.size(); }
  bool empty() const { return stars_.empty(); }

  bool contains(int row, int col) const;

  /// Inserts a star; duplicates are ignored. Throws std::out_of_range for
  /// positions outside the matrix.
  void add(int row, int col);

  const std::vector<Star>& stars() const { return stars_; }

  SparsityPattern transposed() const;

  friend bool operator==(const SparsityPattern&, const SparsityPattern&) = default;

private:
  void check_bounds(int row, int col) const;

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Star> stars_;
};

}  // namespace sclink
