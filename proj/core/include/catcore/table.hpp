#pragma once

#include <cassert>
#include <vector>

namespace catcore {

inline constexpr int kNone = -1;

// Dense 2D table of ids; kNone marks an undefined entry.
class Table {
 public:
  Table() = default;
  Table(int rows, int cols, int fill = kNone)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  int operator()(int r, int c) const {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return data_[static_cast<size_t>(r) * cols_ + c];
  }
  int& at(int r, int c) {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return data_[static_cast<size_t>(r) * cols_ + c];
  }
  bool in_range(int r, int c) const { return r >= 0 && r < rows_ && c >= 0 && c < cols_; }
  // Lookup that tolerates out-of-range indices.
  int get(int r, int c) const { return in_range(r, c) ? (*this)(r, c) : kNone; }

  bool operator==(const Table&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> data_;
};

}  // namespace catcore
