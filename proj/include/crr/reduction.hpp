#ifndef CRR_REDUCTION_HPP
#define CRR_REDUCTION_HPP

#include <optional>
#include <utility>

#include "crr/instance.hpp"

namespace crr {

// Set Basis instance: rows of s are the subsets, columns the ground set;
// asks for k basis subsets whose unions realize every row. Equivalently a
// single Boolean factorization s = E.P with inner dimension k.
struct SbInstance {
  BitMatrix s;
  std::size_t k = 1;
};

// Zero-pads with rows (n < m) or columns (n > m) to a square matrix;
// solvability of Set Basis is preserved.
BitMatrix square_pad(const BitMatrix& s);

// The bordered matrix: all-ones first row and first column, a zero second
// row and second column (below/right of the border), the original matrix at
// offset (2,2). Returns (sbar, k+2).
std::pair<BitMatrix, std::size_t> sb_to_sbmod(const SbInstance& sb);

// CRR instance with S = sbar and R the all-ones kbar x kbar matrix. sbar
// must be square (square_pad the Set Basis matrix first).
CrrInstance sbmod_to_crr(const BitMatrix& sbar, std::size_t kbar);

// Full pipeline: pad, border, take R = all-ones. The reduced instance is
// ((max(n,m)+2)^2, k+2).
CrrInstance reduce_sb_to_crr(const SbInstance& sb);

// Bordered factors from Set Basis factors e.p: first E row all ones, second
// row (1,0,...,0); first P row (1,0,...,0), second row all ones. Verifies
// against the reduced CRR instance of e.p by construction. Non-square e.p is
// zero-padded first, mirroring reduce_sb_to_crr.
Reconstruction embed_sb_solution(const BitMatrix& e, const BitMatrix& p);

// Normalizes any verifying model of a reduced instance into the bordered
// shape (row/column permutations plus the two product-preserving rewrites),
// then strips the border, recovering factors of the embedded square matrix.
// Each rewrite is asserted product-preserving in debug builds.
std::pair<BitMatrix, BitMatrix> extract_sb_solution(const Reconstruction& rec);

// Drops pad rows/columns added by square_pad: keeps the first `rows` rows of
// e and the first `cols` columns of p.
std::pair<BitMatrix, BitMatrix> unpad_sb_factors(const BitMatrix& e, const BitMatrix& p,
                                                 std::size_t rows, std::size_t cols);

// Exhaustive search over all k x m basis matrices; returns a factorization
// when one exists. Requires k*m small (refuses above 2^24 candidates).
std::optional<std::pair<BitMatrix, BitMatrix>> sb_enumerate_solution(const SbInstance& sb);

// Decision oracle: full enumeration when m*k <= 16, otherwise k-subsets of
// the intersection closure of the rows (a solution can always be rebuilt
// from closure elements).
bool sb_brute_force(const SbInstance& sb);

}  // namespace crr

#endif
