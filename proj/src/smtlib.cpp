#include "crr/smtlib.hpp"

#include <ostream>
#include <string>

namespace crr {

namespace {

std::string sp(std::size_t i) { return "sp" + std::to_string(i); }
std::string rx(std::size_t a) { return "rx" + std::to_string(a); }
std::string e_const(std::size_t i, std::size_t a) {
  return "e_" + std::to_string(i) + "_" + std::to_string(a);
}
std::string p_const(std::size_t a, std::size_t j) {
  return "p_" + std::to_string(a) + "_" + std::to_string(j);
}

void write_quantifier_free(const CrrInstance& inst, std::ostream& out, bool get_model) {
  const std::size_t n = inst.n(), m = inst.m();
  out << "(set-logic QF_UF)\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < m; ++a)
      out << "(declare-const " << e_const(i, a) << " Bool)\n";
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t j = 0; j < n; ++j)
      out << "(declare-const " << p_const(a, j) << " Bool)\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (inst.s().get(i, j)) {
        if (m == 0) {
          out << "(assert false)\n";
          continue;
        }
        out << "(assert (or";
        for (std::size_t a = 0; a < m; ++a)
          out << " (and " << e_const(i, a) << ' ' << p_const(a, j) << ')';
        out << "))\n";
      } else {
        for (std::size_t a = 0; a < m; ++a)
          out << "(assert (or (not " << e_const(i, a) << ") (not " << p_const(a, j)
              << ")))\n";
      }
    }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (inst.r().get(a, b)) {
        if (n == 0) {
          out << "(assert false)\n";
          continue;
        }
        out << "(assert (or";
        for (std::size_t i = 0; i < n; ++i)
          out << " (and " << p_const(a, i) << ' ' << e_const(i, b) << ')';
        out << "))\n";
      } else {
        for (std::size_t i = 0; i < n; ++i)
          out << "(assert (or (not " << p_const(a, i) << ") (not " << e_const(i, b)
              << ")))\n";
      }
    }
  out << "(check-sat)\n";
  if (get_model) out << "(get-model)\n";
}

}  // namespace

void write_smtlib(const CrrInstance& inst, std::ostream& out, const SmtOptions& opts) {
  const std::size_t n = inst.n(), m = inst.m();
  if (opts.quantifier_free || n == 0 || m == 0) {
    write_quantifier_free(inst, out, opts.get_model);
    return;
  }

  out << "(set-logic UF)\n";
  out << "(declare-sort Species 0)\n";
  out << "(declare-sort Reaction 0)\n";
  for (std::size_t i = 0; i < n; ++i) out << "(declare-const " << sp(i) << " Species)\n";
  for (std::size_t a = 0; a < m; ++a) out << "(declare-const " << rx(a) << " Reaction)\n";
  if (n >= 2) {
    out << "(assert (distinct";
    for (std::size_t i = 0; i < n; ++i) out << ' ' << sp(i);
    out << "))\n";
  }
  if (m >= 2) {
    out << "(assert (distinct";
    for (std::size_t a = 0; a < m; ++a) out << ' ' << rx(a);
    out << "))\n";
  }
  // Domain closure, so the quantifiers below range over exactly the declared
  // constants.
  out << "(assert (forall ((x Species)) (or";
  for (std::size_t i = 0; i < n; ++i) out << " (= x " << sp(i) << ')';
  out << ")))\n";
  out << "(assert (forall ((y Reaction)) (or";
  for (std::size_t a = 0; a < m; ++a) out << " (= y " << rx(a) << ')';
  out << ")))\n";

  out << "(declare-fun S (Species Species) Bool)\n";
  out << "(declare-fun R (Reaction Reaction) Bool)\n";
  out << "(declare-fun E (Species Reaction) Bool)\n";
  out << "(declare-fun P (Reaction Species) Bool)\n";

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out << (inst.s().get(i, j) ? "(assert (S " : "(assert (not (S ") << sp(i) << ' '
          << sp(j) << (inst.s().get(i, j) ? "))\n" : ")))\n");
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      out << (inst.r().get(a, b) ? "(assert (R " : "(assert (not (R ") << rx(a) << ' '
          << rx(b) << (inst.r().get(a, b) ? "))\n" : ")))\n");

  out << "(assert (forall ((i Species) (j Species)) (= (S i j) "
         "(exists ((a Reaction)) (and (E i a) (P a j))))))\n";
  out << "(assert (forall ((a Reaction) (b Reaction)) (= (R a b) "
         "(exists ((i Species)) (and (P a i) (E i b))))))\n";
  out << "(check-sat)\n";
  if (opts.get_model) out << "(get-model)\n";
}

}  // namespace crr
