#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

namespace modrep {

using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const std::vector<BigInt>& entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  BigInt& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  const std::vector<BigInt>& entries() const noexcept { return entries_; }

  void swapRows(std::size_t a, std::size_t b);
  void swapCols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void addRowMultiple(std::size_t dst, std::size_t src, const BigInt& factor);
  /// col[dst] += factor * col[src]
  void addColMultiple(std::size_t dst, std::size_t src, const BigInt& factor);
  void negateRow(std::size_t r);
  void negateCol(std::size_t c);

  bool isZero() const;
  bool isRowZero(std::size_t r) const;

  /// Fraction-free (Bareiss) determinant of a square matrix.
  BigInt determinant() const;

  /// Stack `below` under this matrix (column counts must agree).
  IntMatrix stacked(const IntMatrix& below) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace modrep
