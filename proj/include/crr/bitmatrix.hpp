#ifndef CRR_BITMATRIX_HPP
#define CRR_BITMATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "crr/errors.hpp"

namespace crr {

// Dense 0/1 matrix, row-major, bit-packed into 64-bit words. Carrier for
// S, R, E, P and all Boolean products. Zero-dimension matrices are legal.
// Trailing bits of the last word in each row are kept zero at all times so
// that equality and popcounts work on whole words.
class BitMatrix {
 public:
  BitMatrix() = default;

  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), wpr_(words_for(cols)), bits_(rows * wpr_, 0) {}

  static BitMatrix ones(std::size_t rows, std::size_t cols) {
    BitMatrix m(rows, cols);
    if (cols == 0) return m;
    const std::uint64_t last = last_word_mask(cols);
    for (std::size_t i = 0; i < rows; ++i) {
      std::uint64_t* r = m.row(i);
      for (std::size_t w = 0; w + 1 < m.wpr_; ++w) r[w] = ~0ULL;
      r[m.wpr_ - 1] = last;
    }
    return m;
  }

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return wpr_; }

  bool get(std::size_t i, std::size_t j) const {
    return (bits_[i * wpr_ + (j >> 6)] >> (j & 63)) & 1ULL;
  }

  void set(std::size_t i, std::size_t j, bool v) {
    std::uint64_t& w = bits_[i * wpr_ + (j >> 6)];
    const std::uint64_t bit = 1ULL << (j & 63);
    w = v ? (w | bit) : (w & ~bit);
  }

  const std::uint64_t* row(std::size_t i) const { return bits_.data() + i * wpr_; }
  std::uint64_t* row(std::size_t i) { return bits_.data() + i * wpr_; }

  std::size_t count_ones() const {
    std::size_t c = 0;
    for (std::uint64_t w : bits_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }
  std::size_t count_zeros() const { return rows_ * cols_ - count_ones(); }

  // Fraction of zero cells; 0 for an empty matrix.
  double zero_fraction() const {
    const std::size_t total = rows_ * cols_;
    return total ? static_cast<double>(count_zeros()) / static_cast<double>(total) : 0.0;
  }

  bool is_square() const { return rows_ == cols_; }

  BitMatrix transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (get(i, j)) t.set(j, i, true);
    return t;
  }

  // Rows of '0'/'1' characters, one line per row. Used by the text formats.
  std::string to_lines() const;

  friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.bits_ == b.bits_;
  }

  static std::size_t words_for(std::size_t cols) { return (cols + 63) >> 6; }
  static std::uint64_t last_word_mask(std::size_t cols) {
    const std::size_t rem = cols & 63;
    return rem ? ((1ULL << rem) - 1) : ~0ULL;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t wpr_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Boolean matrix product over ({0,1}, OR, AND). a.cols must equal b.rows.
// The default entry point parallelizes over destination rows with OpenMP when
// the work is large enough; bool_product_serial is the reference kernel kept
// for testing and benchmarking.
BitMatrix bool_product(const BitMatrix& a, const BitMatrix& b);
BitMatrix bool_product_serial(const BitMatrix& a, const BitMatrix& b);

}  // namespace crr

#endif
