#ifndef CRR_FORMULA_HPP
#define CRR_FORMULA_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "crr/instance.hpp"

namespace crr {

// The direct Boolean formulation of an instance, kept structured:
//   for every s_ij = 1:  OR over a of (e_ia AND p_aj)
//   for every s_ij = 0:  for all a, (NOT e_ia OR NOT p_aj)
// and symmetrically for R with species as the inner index. The structure is
// fully determined by the cell values, so we store the cell lists (row-major)
// rather than an expression tree.
struct DirectFormula {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<std::pair<std::size_t, std::size_t>> s_ones, s_zeros;
  std::vector<std::pair<std::size_t, std::size_t>> r_ones, r_zeros;

  // Evaluates the formula under a candidate E/P assignment, constraint by
  // constraint. Deliberately does not go through bool_product so it can act
  // as a second route in tests.
  bool eval(const Reconstruction& rec) const;

  std::size_t num_cell_constraints() const {
    return s_ones.size() + s_zeros.size() + r_ones.size() + r_zeros.size();
  }
};

DirectFormula encode_direct(const CrrInstance& inst);

}  // namespace crr

#endif
