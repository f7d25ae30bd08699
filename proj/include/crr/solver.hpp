#ifndef CRR_SOLVER_HPP
#define CRR_SOLVER_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "crr/cnf.hpp"
#include "crr/dpll.hpp"
#include "crr/instance.hpp"
#include "crr/outcome.hpp"

namespace crr {

struct SolveRecord {
  Outcome outcome = Outcome::indetermined;
  std::optional<Reconstruction> model;  // present and verified whenever outcome == sat
  double wall_ms = 0.0;
  std::string solver_id;
  std::string encoder_id;
  SolveStats stats;
  std::size_t num_vars = 0;
  std::size_t num_constraints = 0;
};

// Exhaustive enumeration of all E/P pairs in canonical order (E index outer,
// P inner, both ascending, bits row-major). Returns sat with the first
// verifying model, else unsat; refuses with BudgetError when 2^(2nm) exceeds
// the budget. The default entry point splits the E space across OpenMP
// threads in blocks and still reports the canonically first model;
// brute_force_serial is the reference kept for testing.
SolveRecord brute_force(const CrrInstance& inst, std::uint64_t budget = 1ULL << 24);
SolveRecord brute_force_serial(const CrrInstance& inst, std::uint64_t budget = 1ULL << 24);

// Internal DPLL on a CRR encoding. A sat assignment is checked against every
// clause and decoded through the variable map.
SolveRecord dpll_solve(const CnfFormula& cnf,
                       std::chrono::duration<double> timeout =
                           std::chrono::duration<double>(3600.0),
                       const DpllOptions& dpll_opts = {});

enum class Strategy { automatic, brute, dpll, external };

struct SolveOptions {
  Strategy strategy = Strategy::automatic;
  std::chrono::duration<double> timeout{3600.0};
  std::uint64_t brute_budget = 1ULL << 24;
  bool full_tseitin = false;  // disable the one-sided encoding
  bool learning = true;       // clause learning in the internal solver
  // external strategy only:
  std::string external_encoder = "dimacs";  // dimacs | smt2 | lp
  std::string external_command;             // argv template with {input} {timeout} {solution}
};

// Front door. strategy automatic routes to brute force iff 2^(2nm) fits the
// brute budget, else to the internal DPLL. Every sat result is re-verified
// against the instance before it is returned.
SolveRecord solve(const CrrInstance& inst, const SolveOptions& opts = {});

}  // namespace crr

#endif
