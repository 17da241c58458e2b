#include "gridhfk/gf2.hpp"

#include <algorithm>
#include <optional>

namespace gridhfk::gf2 {

void SparseMatrix::canonicalize() {
  std::sort(entries.begin(), entries.end());
  std::vector<std::pair<std::uint32_t, std::uint32_t>> kept;
  kept.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size();) {
    std::size_t j = i;
    while (j < entries.size() && entries[j] == entries[i]) ++j;
    if ((j - i) % 2 == 1) kept.push_back(entries[i]);
    i = j;
  }
  entries = std::move(kept);
}

bool SparseMatrix::is_zero() const {
  SparseMatrix copy = *this;
  copy.canonicalize();
  return copy.entries.empty();
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix lhs = a;
  SparseMatrix rhs = b;
  lhs.canonicalize();
  rhs.canonicalize();

  // Row starts of rhs (entries are sorted by row).
  std::vector<std::size_t> start(rhs.rows + 1, 0);
  for (const auto& [r, c] : rhs.entries) ++start[r + 1];
  for (std::size_t r = 0; r < rhs.rows; ++r) start[r + 1] += start[r];

  SparseMatrix product{lhs.rows, rhs.cols, {}};
  for (const auto& [i, k] : lhs.entries) {
    for (std::size_t e = start[k]; e < start[k + 1]; ++e) {
      product.entries.emplace_back(i, rhs.entries[e].second);
    }
  }
  product.canonicalize();
  return product;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + 63) / 64), words_(rows * stride_, 0) {}

BitMatrix::BitMatrix(const SparseMatrix& sparse) : BitMatrix(sparse.rows, sparse.cols) {
  for (const auto& [r, c] : sparse.entries) toggle(r, c);
}

std::size_t BitMatrix::eliminate() {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    const std::size_t word = col / 64;
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    std::size_t pivot = rank;
    while (pivot < rows_ && !(row(pivot)[word] & bit)) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank) {
      std::swap_ranges(row(pivot) + word, row(pivot) + stride_, row(rank) + word);
    }
    const std::uint64_t* src = row(rank);
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      std::uint64_t* dst = row(r);
      if (!(dst[word] & bit)) continue;
      for (std::size_t w = word; w < stride_; ++w) dst[w] ^= src[w];
    }
    ++rank;
  }
  return rank;
}

namespace {

// Greedy sparse elimination: repeatedly pivots on a lightest row, at its
// lightest column, using row operations. Rows of weight at most 2 and columns
// of weight 1 create no fill. Pivoting stops once every remaining row is
// heavier than kMaxPivotWeight; the rest is left for dense elimination.
class SparseReducer {
 public:
  static constexpr std::size_t kMaxPivotWeight = 128;

  explicit SparseReducer(const SparseMatrix& m)
      : rows_(m.rows), cols_(m.cols), buckets_(kMaxPivotWeight + 1) {
    for (const auto& [r, c] : m.entries) toggle(r, c);
    for (std::uint32_t r = 0; r < rows_.size(); ++r) queue_row(r);
    for (std::uint32_t c = 0; c < cols_.size(); ++c) queue_col(c);
  }

  std::size_t reduce() {
    std::size_t rank = 0;
    while (true) {
      if (!single_cols_.empty()) {
        const std::uint32_t c = single_cols_.back();
        single_cols_.pop_back();
        if (cols_[c].size() != 1) continue;
        pivot(cols_[c][0], c);
        ++rank;
        continue;
      }
      const auto r = lightest_row();
      if (!r) return rank;
      const auto& row = rows_[*r];
      std::uint32_t best = row[0];
      for (auto c : row) {
        if (cols_[c].size() < cols_[best].size()) best = c;
      }
      pivot(*r, best);
      ++rank;
    }
  }

  SparseMatrix core() const {
    SparseMatrix out;
    std::vector<std::uint32_t> col_id(cols_.size(), UINT32_MAX);
    for (const auto& row : rows_) {
      if (row.empty()) continue;
      for (auto c : row) {
        if (col_id[c] == UINT32_MAX) col_id[c] = static_cast<std::uint32_t>(out.cols++);
        out.entries.emplace_back(static_cast<std::uint32_t>(out.rows), col_id[c]);
      }
      ++out.rows;
    }
    return out;
  }

 private:
  static void toggle_in(std::vector<std::uint32_t>& v, std::uint32_t x) {
    const auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it != v.end() && *it == x) {
      v.erase(it);
    } else {
      v.insert(it, x);
    }
  }

  void toggle(std::uint32_t r, std::uint32_t c) {
    toggle_in(rows_[r], c);
    toggle_in(cols_[c], r);
  }

  void queue_row(std::uint32_t r) {
    const std::size_t w = rows_[r].size();
    if (w > 0 && w <= kMaxPivotWeight) {
      buckets_[w].push_back(r);
      lightest_ = std::min(lightest_, w);
    }
  }

  void queue_col(std::uint32_t c) {
    if (cols_[c].size() == 1) single_cols_.push_back(c);
  }

  // Buckets are filled lazily; stale entries are skipped here.
  std::optional<std::uint32_t> lightest_row() {
    for (; lightest_ <= kMaxPivotWeight; ++lightest_) {
      auto& bucket = buckets_[lightest_];
      while (!bucket.empty()) {
        const std::uint32_t r = bucket.back();
        bucket.pop_back();
        if (rows_[r].size() == lightest_) return r;
      }
    }
    return std::nullopt;
  }

  // Clears column c from every other row using row r, then drops r and c.
  void pivot(std::uint32_t r, std::uint32_t c) {
    const std::vector<std::uint32_t> pivot_row = rows_[r];
    const std::vector<std::uint32_t> hits = cols_[c];
    for (auto other : hits) {
      if (other == r) continue;
      for (auto k : pivot_row) toggle(other, k);
      queue_row(other);
    }
    for (auto k : pivot_row) {
      toggle_in(cols_[k], r);
      queue_col(k);
    }
    rows_[r].clear();
  }

  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<std::vector<std::uint32_t>> cols_;
  std::vector<std::vector<std::uint32_t>> buckets_;
  std::size_t lightest_ = kMaxPivotWeight + 1;
  std::vector<std::uint32_t> single_cols_;
};

std::size_t dense_rank(const SparseMatrix& matrix) {
  if (matrix.rows == 0 || matrix.cols == 0 || matrix.entries.empty()) return 0;
  // Pack along the longer side so the elimination loop runs over fewer rows.
  if (matrix.rows > matrix.cols) {
    SparseMatrix transposed{matrix.cols, matrix.rows, {}};
    transposed.entries.reserve(matrix.entries.size());
    for (const auto& [r, c] : matrix.entries) transposed.entries.emplace_back(c, r);
    return BitMatrix(transposed).eliminate();
  }
  return BitMatrix(matrix).eliminate();
}

}  // namespace

std::size_t gf2_rank(const SparseMatrix& matrix) {
  if (matrix.rows == 0 || matrix.cols == 0 || matrix.entries.empty()) return 0;
  SparseReducer reducer(matrix);
  const std::size_t pivots = reducer.reduce();
  return pivots + dense_rank(reducer.core());
}

std::size_t dense_gf2_rank(const SparseMatrix& matrix) { return dense_rank(matrix); }

}  // namespace gridhfk::gf2
