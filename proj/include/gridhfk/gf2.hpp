#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace gridhfk::gf2 {

// Sparse matrix over the two-element field in triplet form: each (row, column)
// pair is one entry equal to 1. Repeated pairs cancel in pairs.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> entries;

  // Sorts entries and drops pairs that cancel.
  void canonicalize();
  bool is_zero() const;
};

// Product a * b over GF(2); a.cols must equal b.rows.
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

// Dense row-major bit matrix, rows packed into 64-bit words.
class BitMatrix {
 public:
  BitMatrix(std::size_t rows, std::size_t cols);
  explicit BitMatrix(const SparseMatrix& sparse);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (row(r)[c / 64] >> (c % 64)) & 1u;
  }
  void toggle(std::size_t r, std::size_t c) { row(r)[c / 64] ^= std::uint64_t{1} << (c % 64); }
  void set(std::size_t r, std::size_t c, bool value) {
    if (get(r, c) != value) toggle(r, c);
  }

  // Gaussian elimination in place; pivot columns are taken in input order.
  // Returns the rank.
  std::size_t eliminate();

 private:
  std::uint64_t* row(std::size_t r) { return words_.data() + r * stride_; }
  const std::uint64_t* row(std::size_t r) const { return words_.data() + r * stride_; }

  std::size_t rows_;
  std::size_t cols_;
  std::size_t stride_;
  std::vector<std::uint64_t> words_;
};

// Rank over GF(2): fill-free sparse pivoting first, then bit-packed
// elimination of what remains.
std::size_t gf2_rank(const SparseMatrix& matrix);

// Bit-packed elimination only.
std::size_t dense_gf2_rank(const SparseMatrix& matrix);

}  // namespace gridhfk::gf2
