#ifndef CRR_EXTERNAL_HPP
#define CRR_EXTERNAL_HPP

#include <chrono>
#include <string>

#include "crr/instance.hpp"

namespace crr {

struct SolveRecord;

// Bridge to an external solver over files and stdout; no solver libraries
// are linked. The command is an argv template split on whitespace, with
// {input}, {timeout} (integer seconds) and {solution} substituted. Tokens:
//   dimacs: solver prints SAT-competition output ("s ..."/"v ..." lines).
//   smt2:   solver prints sat/unsat/unknown, then (define-fun ...) model
//           lines; the script is written quantifier-free so the model is
//           decodable.
//   lp:     solver writes {solution} (or prints to stdout): a status word
//           (optimal/feasible/infeasible) plus "name value" pairs.
struct ExternalSolverSpec {
  std::string encoder = "dimacs";  // dimacs | smt2 | lp
  std::string command;
  std::chrono::duration<double> timeout{3600.0};
  bool keep_files = false;  // leave temp files behind for debugging
};

// Encodes, launches, enforces the wall-clock timeout (kill on expiry =>
// indetermined), parses, decodes and verifies. A sat claim whose decoded
// model fails verification raises ModelIntegrityError; it is never passed
// through.
SolveRecord solve_external(const CrrInstance& inst, const ExternalSolverSpec& spec);

}  // namespace crr

#endif
