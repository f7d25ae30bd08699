#include "crr/bitmatrix.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace crr {

std::string BitMatrix::to_lines() const {
  std::string out;
  out.reserve(rows_ * (cols_ + 1));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(get(i, j) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

namespace {

void check_product_shapes(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows())
    throw ShapeError("bool_product: " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " * " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()));
}

// Row-OR formulation: out.row(i) = OR of b.row(k) over all k with a[i][k]=1.
// Word-parallel, no per-cell branching on the inner dimension words.
inline void product_row(const BitMatrix& a, const BitMatrix& b, BitMatrix& out,
                        std::size_t i) {
  const std::size_t bw = b.words_per_row();
  std::uint64_t* dst = out.row(i);
  const std::uint64_t* arow = a.row(i);
  for (std::size_t kw = 0; kw < a.words_per_row(); ++kw) {
    std::uint64_t word = arow[kw];
    while (word) {
      const std::size_t k = (kw << 6) + static_cast<std::size_t>(__builtin_ctzll(word));
      word &= word - 1;
      const std::uint64_t* brow = b.row(k);
      for (std::size_t w = 0; w < bw; ++w) dst[w] |= brow[w];
    }
  }
}

}  // namespace

BitMatrix bool_product_serial(const BitMatrix& a, const BitMatrix& b) {
  check_product_shapes(a, b);
  BitMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) product_row(a, b, out, i);
  return out;
}

BitMatrix bool_product(const BitMatrix& a, const BitMatrix& b) {
  check_product_shapes(a, b);
  BitMatrix out(a.rows(), b.cols());
#ifdef _OPENMP
  // Rough word-ops estimate; below this the fork/join overhead dominates.
  const std::size_t work = a.rows() * a.words_per_row() * (b.words_per_row() + 1);
  if (work >= (1u << 16)) {
    const std::int64_t n = static_cast<std::int64_t>(a.rows());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i)
      product_row(a, b, out, static_cast<std::size_t>(i));
    return out;
  }
#endif
  for (std::size_t i = 0; i < a.rows(); ++i) product_row(a, b, out, i);
  return out;
}

}  // namespace crr
