#include "sclink/pattern.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sclink {

SparsityPattern::SparsityPattern(int n_rows, int n_cols) : rows_(n_rows), cols_(n_cols) {
  if (n_rows < 0 || n_cols < 0) {
    throw std::invalid_argument("pattern dimensions must be nonnegative");
  }
}

SparsityPattern::SparsityPattern(int n_rows, int n_cols, std::vector<Star> stars)
    : SparsityPattern(n_rows, n_cols) {
  for (const Star& s : stars) {
    check_bounds(s.first, s.second);
  }
  std::sort(stars.begin(), stars.end());
  stars.erase(std::unique(stars.begin(), stars.end()), stars.end());
  stars_ = std::move(stars);
}

void SparsityPattern::check_bounds(int row, int col) const {
  if (row < 1 || row > rows_ || col < 1 || col > cols_) {
    throw std::out_of_range("star (" + std::to_string(row) + "," + std::to_string(col) +
                            ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                            " pattern");
  }
}

bool SparsityPattern::contains(int row, int col) const {
  return std::binary_search(stars_.begin(), stars_.end(), Star{row, col});
}

void SparsityPattern::add(int row, int col) {
  check_bounds(row, col);
  Star s{row, col};
  auto it = std::lower_bound(stars_.begin(), stars_.end(), s);
  if (it == stars_.end() || *it != s) {
    stars_.insert(it, s);
  }
}

SparsityPattern SparsityPattern::transposed() const {
  std::vector<Star> flipped;
  flipped.reserve(stars_.size());
  for (const Star& s : stars_) {
    flipped.emplace_back(s.second, s.first);
  }
  return SparsityPattern(cols_, rows_, std::move(flipped));
}

}  // namespace sclink
