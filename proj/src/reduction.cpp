#include "crr/reduction.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>
#include <vector>

namespace crr {

namespace {

void check_sb(const SbInstance& sb) {
  if (sb.k < 1) throw ContractError("SbInstance: k must be >= 1");
  if (sb.k > sb.s.rows() && sb.s.rows() > 0)
    throw ContractError("SbInstance: k must not exceed the number of subsets");
}

void swap_matrix_rows(BitMatrix& m, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const bool t = m.get(r1, j);
    m.set(r1, j, m.get(r2, j));
    m.set(r2, j, t);
  }
}

void swap_matrix_cols(BitMatrix& m, std::size_t c1, std::size_t c2) {
  if (c1 == c2) return;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const bool t = m.get(i, c1);
    m.set(i, c1, m.get(i, c2));
    m.set(i, c2, t);
  }
}

bool row_is_unit_first(const BitMatrix& m, std::size_t r) {
  if (m.cols() == 0 || !m.get(r, 0)) return false;
  for (std::size_t j = 1; j < m.cols(); ++j)
    if (m.get(r, j)) return false;
  return true;
}

}  // namespace

BitMatrix square_pad(const BitMatrix& s) {
  if (s.rows() == s.cols()) return s;
  const std::size_t dim = std::max(s.rows(), s.cols());
  BitMatrix out(dim, dim);
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j)
      if (s.get(i, j)) out.set(i, j, true);
  return out;
}

std::pair<BitMatrix, std::size_t> sb_to_sbmod(const SbInstance& sb) {
  check_sb(sb);
  const std::size_t n = sb.s.rows(), m = sb.s.cols();
  BitMatrix sbar(n + 2, m + 2);
  for (std::size_t j = 0; j < m + 2; ++j) sbar.set(0, j, true);
  for (std::size_t i = 0; i < n + 2; ++i) sbar.set(i, 0, true);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (sb.s.get(i, j)) sbar.set(i + 2, j + 2, true);
  return {std::move(sbar), sb.k + 2};
}

CrrInstance sbmod_to_crr(const BitMatrix& sbar, std::size_t kbar) {
  if (!sbar.is_square()) throw ShapeError("sbmod_to_crr: matrix must be square");
  InstanceMeta meta;
  meta.source = "sb_reduction";
  return CrrInstance(sbar, BitMatrix::ones(kbar, kbar), std::move(meta));
}

CrrInstance reduce_sb_to_crr(const SbInstance& sb) {
  check_sb(sb);
  SbInstance padded{square_pad(sb.s), sb.k};
  auto [sbar, kbar] = sb_to_sbmod(padded);
  return sbmod_to_crr(sbar, kbar);
}

Reconstruction embed_sb_solution(const BitMatrix& e, const BitMatrix& p) {
  if (e.cols() != p.rows()) throw ContractError("embed_sb_solution: e.cols != p.rows");
  BitMatrix se = e, sp = p;
  if (e.rows() != p.cols()) {
    // Mirror square_pad on the product: extra zero rows of S need zero rows
    // in E; extra zero columns need zero columns in P.
    const std::size_t dim = std::max(e.rows(), p.cols());
    BitMatrix e2(dim, e.cols());
    for (std::size_t i = 0; i < e.rows(); ++i)
      for (std::size_t a = 0; a < e.cols(); ++a)
        if (e.get(i, a)) e2.set(i, a, true);
    BitMatrix p2(p.rows(), dim);
    for (std::size_t a = 0; a < p.rows(); ++a)
      for (std::size_t j = 0; j < p.cols(); ++j)
        if (p.get(a, j)) p2.set(a, j, true);
    se = std::move(e2);
    sp = std::move(p2);
  }
  const std::size_t n = se.rows(), k = se.cols();
  Reconstruction rec{BitMatrix(n + 2, k + 2), BitMatrix(k + 2, n + 2)};
  for (std::size_t a = 0; a < k + 2; ++a) rec.e.set(0, a, true);
  rec.e.set(1, 0, true);
  for (std::size_t i = 0; i < n; ++i) {
    rec.e.set(i + 2, 0, true);
    for (std::size_t a = 0; a < k; ++a)
      if (se.get(i, a)) rec.e.set(i + 2, a + 2, true);
  }
  rec.p.set(0, 0, true);
  for (std::size_t j = 0; j < n + 2; ++j) rec.p.set(1, j, true);
  for (std::size_t a = 0; a < k; ++a) {
    rec.p.set(a + 2, 0, true);
    for (std::size_t j = 0; j < n; ++j)
      if (sp.get(a, j)) rec.p.set(a + 2, j + 2, true);
  }
  return rec;
}

std::pair<BitMatrix, BitMatrix> extract_sb_solution(const Reconstruction& rec) {
  BitMatrix ebar = rec.e, pbar = rec.p;
  const std::size_t nbar = ebar.rows(), kbar = ebar.cols();
  if (pbar.rows() != kbar || pbar.cols() != nbar)
    throw ContractError("extract_sb_solution: factor shapes are inconsistent");
  if (nbar < 2 || kbar < 2)
    throw ContractError("extract_sb_solution: factors too small for a reduced instance");

  const BitMatrix sbar = bool_product(ebar, pbar);
#ifndef NDEBUG
  const auto preserved = [&] { return bool_product(ebar, pbar) == sbar; };
#endif

  // Row (1,0,...,0) exists in pbar (it alone can produce the second row of
  // the bordered matrix); move it to position 0.
  std::size_t unit_row = kbar;
  for (std::size_t l = 0; l < kbar; ++l)
    if (row_is_unit_first(pbar, l)) {
      unit_row = l;
      break;
    }
  if (unit_row == kbar)
    throw InternalError("extract_sb_solution: no (1,0,...,0) row in P");
  swap_matrix_rows(pbar, unit_row, 0);
  swap_matrix_cols(ebar, unit_row, 0);
  assert(preserved());

  // First row of E all ones: the first bordered row is all ones, so adding
  // more rows to its union changes nothing.
  for (std::size_t a = 0; a < kbar; ++a) ebar.set(0, a, true);
  assert(preserved());

  // First column of P all ones: the first bordered column is all ones and
  // every E row is nonempty.
  for (std::size_t l = 0; l < kbar; ++l) pbar.set(l, 0, true);
  assert(preserved());

  // Some remaining row has a 1 in column 1 (the bordered cell (0,1) needs a
  // witness and row 0 cannot provide it); move it to position 1.
  std::size_t col1_row = 0;
  for (std::size_t l = 1; l < kbar; ++l)
    if (pbar.get(l, 1)) {
      col1_row = l;
      break;
    }
  if (col1_row == 0)
    throw InternalError("extract_sb_solution: no witness row for the border column");
  swap_matrix_rows(pbar, col1_row, 1);
  swap_matrix_cols(ebar, col1_row, 1);
  assert(preserved());

#ifndef NDEBUG
  // Forced by the zero column of the bordered matrix.
  for (std::size_t i = 2; i < nbar; ++i) assert(!ebar.get(i, 1));
#endif

  BitMatrix e(nbar - 2, kbar - 2), p(kbar - 2, nbar - 2);
  for (std::size_t i = 2; i < nbar; ++i)
    for (std::size_t a = 2; a < kbar; ++a)
      if (ebar.get(i, a)) e.set(i - 2, a - 2, true);
  for (std::size_t a = 2; a < kbar; ++a)
    for (std::size_t j = 2; j < nbar; ++j)
      if (pbar.get(a, j)) p.set(a - 2, j - 2, true);
  return {std::move(e), std::move(p)};
}

std::pair<BitMatrix, BitMatrix> unpad_sb_factors(const BitMatrix& e, const BitMatrix& p,
                                                 std::size_t rows, std::size_t cols) {
  if (rows > e.rows() || cols > p.cols())
    throw ShapeError("unpad_sb_factors: target shape exceeds factors");
  BitMatrix eo(rows, e.cols()), po(p.rows(), cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t a = 0; a < e.cols(); ++a)
      if (e.get(i, a)) eo.set(i, a, true);
  for (std::size_t a = 0; a < p.rows(); ++a)
    for (std::size_t j = 0; j < cols; ++j)
      if (p.get(a, j)) po.set(a, j, true);
  return {std::move(eo), std::move(po)};
}

std::optional<std::pair<BitMatrix, BitMatrix>> sb_enumerate_solution(const SbInstance& sb) {
  check_sb(sb);
  const std::size_t n = sb.s.rows(), m = sb.s.cols(), k = sb.k;
  const std::size_t bits = k * m;
  if (bits > 24) throw BudgetError("sb_enumerate_solution: 2^(k*m) too large");

  std::vector<std::uint32_t> s_rows(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (sb.s.get(i, j)) s_rows[i] |= 1u << j;

  const std::uint64_t space = 1ULL << bits;
  const std::uint32_t row_mask = m >= 32 ? ~0u : ((1u << m) - 1);
  std::vector<std::uint32_t> p_rows(k);
  for (std::uint64_t idx = 0; idx < space; ++idx) {
    for (std::size_t l = 0; l < k; ++l)
      p_rows[l] = static_cast<std::uint32_t>(idx >> (l * m)) & row_mask;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      std::uint32_t u = 0;
      for (std::size_t l = 0; l < k; ++l)
        if ((p_rows[l] & ~s_rows[i]) == 0) u |= p_rows[l];
      ok = u == s_rows[i];
    }
    if (!ok) continue;
    BitMatrix e(n, k), p(k, m);
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t j = 0; j < m; ++j)
        if ((p_rows[l] >> j) & 1u) p.set(l, j, true);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < k; ++l)
        if ((p_rows[l] & ~s_rows[i]) == 0) e.set(i, l, true);
    return std::make_pair(std::move(e), std::move(p));
  }
  return std::nullopt;
}

bool sb_brute_force(const SbInstance& sb) {
  check_sb(sb);
  const std::size_t m = sb.s.cols(), k = sb.k;
  if (m * k <= 16) return sb_enumerate_solution(sb).has_value();

  // Intersection closure of the rows; any solution can be rebuilt from it.
  if (m > 63) throw BudgetError("sb_brute_force: ground set too large");
  std::set<std::uint64_t> closure;
  for (std::size_t i = 0; i < sb.s.rows(); ++i) {
    std::uint64_t row = 0;
    for (std::size_t j = 0; j < m; ++j)
      if (sb.s.get(i, j)) row |= 1ULL << j;
    closure.insert(row);
  }
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<std::uint64_t> items(closure.begin(), closure.end());
    for (std::size_t a = 0; a < items.size(); ++a)
      for (std::size_t b = a + 1; b < items.size(); ++b)
        if (closure.insert(items[a] & items[b]).second) grew = true;
  }
  std::vector<std::uint64_t> cand(closure.begin(), closure.end());
  std::vector<std::uint64_t> rows;
  for (std::size_t i = 0; i < sb.s.rows(); ++i) {
    std::uint64_t row = 0;
    for (std::size_t j = 0; j < m; ++j)
      if (sb.s.get(i, j)) row |= 1ULL << j;
    rows.push_back(row);
  }

  const std::size_t take = std::min(k, cand.size());
  std::vector<std::size_t> pick;
  // All subsets of the candidates of size <= k, recursively.
  std::function<bool(std::size_t)> search = [&](std::size_t from) -> bool {
    bool all = true;
    for (std::uint64_t row : rows) {
      std::uint64_t u = 0;
      for (std::size_t c : pick)
        if ((cand[c] & ~row) == 0) u |= cand[c];
      if (u != row) {
        all = false;
        break;
      }
    }
    if (all) return true;
    if (pick.size() == take) return false;
    for (std::size_t c = from; c < cand.size(); ++c) {
      pick.push_back(c);
      if (search(c + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return search(0);
}

}  // namespace crr
