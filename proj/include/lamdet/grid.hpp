#pragma once

#include <cassert>
#include <compare>
#include <cstddef>
#include <vector>

namespace lamdet {

/// Dense row-major rectangular array with 0-based indexing.
template <typename T>
class Grid {
 public:
  Grid() = default;
  Grid(int rows, int cols, const T& fill = T{})
      : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {}

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(int i, int j) {
    assert(in_range(i, j));
    return data_[index(i, j)];
  }
  const T& operator()(int i, int j) const {
    assert(in_range(i, j));
    return data_[index(i, j)];
  }

  bool in_range(int i, int j) const noexcept {
    return i >= 0 && j >= 0 && i < rows_ && j < cols_;
  }

  /// Value at (i,j), or `outside` when the index is out of range.
  T get_or(int i, int j, const T& outside) const {
    return in_range(i, j) ? data_[index(i, j)] : outside;
  }

  const std::vector<T>& data() const noexcept { return data_; }

  bool operator==(const Grid&) const = default;
  auto operator<=>(const Grid& other) const {
    if (auto c = rows_ <=> other.rows_; c != 0) return c;
    if (auto c = cols_ <=> other.cols_; c != 0) return c;
    return data_ <=> other.data_;
  }

 private:
  std::size_t index(int i, int j) const noexcept {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(j);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using IntGrid = Grid<int>;

}  // namespace lamdet
