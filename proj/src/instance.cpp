#include "crr/instance.hpp"

namespace crr {

bool verify(const CrrInstance& inst, const Reconstruction& rec) {
  if (rec.e.rows() != inst.n() || rec.e.cols() != inst.m())
    throw ShapeError("verify: E must be n x m");
  if (rec.p.rows() != inst.m() || rec.p.cols() != inst.n())
    throw ShapeError("verify: P must be m x n");
  return bool_product(rec.e, rec.p) == inst.s() && bool_product(rec.p, rec.e) == inst.r();
}

std::vector<std::size_t> witnesses_s(const CrrInstance& inst, const Reconstruction& rec,
                                     std::size_t i, std::size_t j) {
  if (i >= inst.n() || j >= inst.n()) throw ShapeError("witnesses_s: cell out of range");
  std::vector<std::size_t> ws;
  for (std::size_t a = 0; a < inst.m(); ++a)
    if (rec.e.get(i, a) && rec.p.get(a, j)) ws.push_back(a);
  return ws;
}

}  // namespace crr
