#include "crr/formula.hpp"

namespace crr {

DirectFormula encode_direct(const CrrInstance& inst) {
  DirectFormula f;
  f.n = inst.n();
  f.m = inst.m();
  for (std::size_t i = 0; i < f.n; ++i)
    for (std::size_t j = 0; j < f.n; ++j)
      (inst.s().get(i, j) ? f.s_ones : f.s_zeros).emplace_back(i, j);
  for (std::size_t a = 0; a < f.m; ++a)
    for (std::size_t b = 0; b < f.m; ++b)
      (inst.r().get(a, b) ? f.r_ones : f.r_zeros).emplace_back(a, b);
  return f;
}

bool DirectFormula::eval(const Reconstruction& rec) const {
  if (rec.e.rows() != n || rec.e.cols() != m || rec.p.rows() != m || rec.p.cols() != n)
    throw ShapeError("DirectFormula::eval: reconstruction shape mismatch");
  for (auto [i, j] : s_ones) {
    bool any = false;
    for (std::size_t a = 0; a < m && !any; ++a) any = rec.e.get(i, a) && rec.p.get(a, j);
    if (!any) return false;
  }
  for (auto [i, j] : s_zeros)
    for (std::size_t a = 0; a < m; ++a)
      if (rec.e.get(i, a) && rec.p.get(a, j)) return false;
  for (auto [a, b] : r_ones) {
    bool any = false;
    for (std::size_t i = 0; i < n && !any; ++i) any = rec.p.get(a, i) && rec.e.get(i, b);
    if (!any) return false;
  }
  for (auto [a, b] : r_zeros)
    for (std::size_t i = 0; i < n; ++i)
      if (rec.p.get(a, i) && rec.e.get(i, b)) return false;
  return true;
}

}  // namespace crr
