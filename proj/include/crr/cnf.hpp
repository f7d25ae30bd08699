#ifndef CRR_CNF_HPP
#define CRR_CNF_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "crr/formula.hpp"
#include "crr/instance.hpp"
#include "crr/outcome.hpp"

namespace crr {

// DIMACS variable numbering. E and P cells occupy 1..2nm contiguously,
// e before p, row-major; Tseitin auxiliaries follow with origin tags.
struct VarMap {
  std::size_t n = 0;
  std::size_t m = 0;

  enum class AuxKind : std::uint8_t { s_cell, r_cell };
  struct Aux {
    AuxKind kind;
    std::uint32_t row, col;  // the 1-cell this auxiliary serves
    std::uint32_t inner;     // reaction index (s_cell) or species index (r_cell)
  };
  std::vector<Aux> aux;

  int e_var(std::size_t i, std::size_t a) const { return static_cast<int>(1 + i * m + a); }
  int p_var(std::size_t a, std::size_t j) const {
    return static_cast<int>(1 + n * m + a * n + j);
  }
  std::size_t base_vars() const { return 2 * n * m; }
  std::size_t num_vars() const { return base_vars() + aux.size(); }
};

struct CnfFormula {
  std::size_t num_vars = 0;
  std::vector<std::vector<int>> clauses;
  VarMap map;
};

struct TseitinOptions {
  // Plaisted-Greenbaum one-sided encoding: auxiliaries are defined with
  // implications only, in the polarity they occur. Disable to emit full
  // biconditional definitions when debugging.
  bool polarity_optimization = true;
};

// Equisatisfiable CNF: 0-cell constraints pass through as binary clauses;
// every (e_ia AND p_aj) conjunct under a 1-cell's disjunction gets one
// auxiliary variable.
CnfFormula tseitin_cnf(const DirectFormula& formula, const TseitinOptions& opts = {});

// "p cnf <vars> <clauses>" then 0-terminated clauses; byte-identical across
// runs for the same formula.
void write_dimacs(const CnfFormula& cnf, std::ostream& out);

// Per-variable truth values, 1-indexed; -1 = unassigned.
using Assignment = std::vector<signed char>;

struct DimacsModel {
  Outcome outcome = Outcome::indetermined;
  Assignment values;
};

// Parses SAT-competition solver output ("s SATISFIABLE" / "s UNSATISFIABLE",
// "v" literal lines). Malformed input raises ParseError with the offending
// line.
DimacsModel read_dimacs_model(const std::string& text);

// Raw DIMACS CNF file: returns (num_vars, clauses). Comment lines allowed.
std::pair<std::size_t, std::vector<std::vector<int>>> read_dimacs(std::istream& in);

// Reads E and P off the base variables; auxiliaries are ignored. A base
// variable missing from the assignment is a DecodeError.
Reconstruction decode_model(const VarMap& map, const Assignment& values);

}  // namespace crr

#endif
