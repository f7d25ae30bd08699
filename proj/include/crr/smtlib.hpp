#ifndef CRR_SMTLIB_HPP
#define CRR_SMTLIB_HPP

#include <iosfwd>

#include "crr/instance.hpp"

namespace crr {

struct SmtOptions {
  // Quantified form: two uninterpreted sorts with domain-closure axioms and
  // the cell equivalences stated with forall/exists. The quantifier-free
  // fallback expands everything over Bool constants e_i_a / p_a_j, which
  // solvers without quantifier support (and our model decoder) can handle.
  bool quantifier_free = false;
  bool get_model = true;
};

// SMT-LIB v2 script deciding the instance. Degenerate sizes (n = 0 or m = 0)
// are always written quantifier-free since an uninterpreted sort cannot be
// empty.
void write_smtlib(const CrrInstance& inst, std::ostream& out, const SmtOptions& opts = {});

}  // namespace crr

#endif
