#pragma once

#include <cstdint>
#include <vector>

namespace bigrade {

/// Small dense integer matrix, row-major.
class IntMatrix {
public:
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::int64_t> data_;
};

/// Exact rank over Q (characteristic 0) or over F_p.
///
/// Characteristic 0 uses fraction-free Bareiss elimination in 64-bit
/// arithmetic and redoes the elimination with arbitrary precision if an
/// intermediate overflows.
std::size_t rank(const IntMatrix& matrix, int characteristic);

}  // namespace bigrade
