#include "bigrade/rank.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <utility>

namespace bigrade {

namespace {

using BigInt = boost::multiprecision::cpp_int;

struct Overflow {};

std::int64_t checked_mul_sub(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  std::int64_t ab = 0, cd = 0, diff = 0;
  if (__builtin_mul_overflow(a, b, &ab) || __builtin_mul_overflow(c, d, &cd) ||
      __builtin_sub_overflow(ab, cd, &diff))
    throw Overflow{};
  return diff;
}

template <class T>
T mul_sub(const T& a, const T& b, const T& c, const T& d) {
  if constexpr (std::is_same_v<T, std::int64_t>)
    return checked_mul_sub(a, b, c, d);
  else
    return a * b - c * d;
}

template <class T>
std::size_t bareiss_rank(std::vector<std::vector<T>> m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m.front().size();
  T prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c)
        m[r][c] = mul_sub(m[rank][col], m[r][c], m[r][col], m[rank][c]) / prev;
      m[r][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

std::size_t rank_mod_p(const IntMatrix& matrix, std::int64_t p) {
  std::vector<std::vector<std::int64_t>> m(matrix.rows(), std::vector<std::int64_t>(matrix.cols()));
  for (std::size_t r = 0; r < matrix.rows(); ++r)
    for (std::size_t c = 0; c < matrix.cols(); ++c) m[r][c] = ((matrix(r, c) % p) + p) % p;

  auto inverse = [p](std::int64_t a) {
    std::int64_t result = 1, base = a, exp = p - 2;
    while (exp > 0) {
      if (exp & 1) result = static_cast<std::int64_t>(result * base % p);
      base = static_cast<std::int64_t>(base * base % p);
      exp >>= 1;
    }
    return result;
  };

  std::size_t rank = 0;
  for (std::size_t col = 0; col < matrix.cols() && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    const std::int64_t inv = inverse(m[rank][col]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][col] == 0) continue;
      const std::int64_t factor = static_cast<std::int64_t>(m[r][col] * inv % p);
      for (std::size_t c = col; c < matrix.cols(); ++c)
        m[r][c] = static_cast<std::int64_t>(((m[r][c] - factor * m[rank][c]) % p + p) % p);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank(const IntMatrix& matrix, int characteristic) {
  if (matrix.rows() == 0 || matrix.cols() == 0) return 0;
  if (characteristic != 0) return rank_mod_p(matrix, characteristic);

  std::vector<std::vector<std::int64_t>> m(matrix.rows(), std::vector<std::int64_t>(matrix.cols()));
  for (std::size_t r = 0; r < matrix.rows(); ++r)
    for (std::size_t c = 0; c < matrix.cols(); ++c) m[r][c] = matrix(r, c);
  try {
    return bareiss_rank(m);
  } catch (const Overflow&) {
    std::vector<std::vector<BigInt>> big(matrix.rows(), std::vector<BigInt>(matrix.cols()));
    for (std::size_t r = 0; r < matrix.rows(); ++r)
      for (std::size_t c = 0; c < matrix.cols(); ++c) big[r][c] = matrix(r, c);
    return bareiss_rank(std::move(big));
  }
}

}  // namespace bigrade
