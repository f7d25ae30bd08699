#ifndef CRR_DPLL_HPP
#define CRR_DPLL_HPP

#include <chrono>
#include <cstdint>
#include <vector>

#include "crr/cnf.hpp"
#include "crr/outcome.hpp"

namespace crr {

struct SolveStats {
  std::uint64_t decisions = 0;
  std::uint64_t propagations = 0;
  std::uint64_t conflicts = 0;
};

struct DpllResult {
  Outcome outcome = Outcome::indetermined;
  Assignment values;  // 1-indexed, complete when outcome == sat
  SolveStats stats;
};

struct DpllOptions {
  // First-UIP clause learning with non-chronological backjumping. Fully
  // deterministic (no restarts, no randomization); disable to fall back to
  // plain chronological DPLL.
  bool learning = true;
};

// Unit propagation over two watched literals. Branching picks the unassigned
// variable with the highest static occurrence count (ties to the lowest
// index); the phase is the last assigned value, false initially. Runs are
// bit-reproducible. The timeout is wall clock, checked at decision
// boundaries; exceeding it yields Outcome::indetermined.
class DpllSolver {
 public:
  DpllSolver(std::size_t num_vars, const std::vector<std::vector<int>>& clauses,
             const DpllOptions& opts = {});

  DpllResult solve(std::chrono::duration<double> timeout =
                       std::chrono::duration<double>(3600.0));

 private:
  int value(int lit) const {
    const signed char v = values_[static_cast<std::size_t>(lit < 0 ? -lit : lit)];
    if (v < 0) return -1;
    return (lit > 0) == (v == 1) ? 1 : 0;
  }
  void assign(int lit, std::int64_t reason);
  void undo_to(std::size_t trail_pos);
  std::int64_t propagate();  // conflicting clause id, or -1
  int pick_branch_lit();
  std::int64_t add_clause_watched(const std::vector<int>& lits);
  void analyze(std::int64_t conflict, std::vector<int>& learned, std::size_t& bj_level);

  static std::size_t var_of(int lit) { return static_cast<std::size_t>(lit < 0 ? -lit : lit); }
  static std::size_t widx(int lit) {
    return 2 * (var_of(lit) - 1) + (lit < 0 ? 1 : 0);
  }

  DpllOptions opts_;
  std::size_t num_vars_;
  std::vector<int> lits_;             // clause literals, flat (originals + learned)
  std::vector<std::size_t> offsets_;  // clause c = [offsets_[c], offsets_[c+1])
  std::vector<std::vector<std::uint32_t>> watches_;
  std::vector<signed char> values_;   // per var: -1 unassigned, 0 false, 1 true
  std::vector<signed char> phase_;    // last assigned value per var
  std::vector<std::uint32_t> level_;  // per var
  std::vector<std::int64_t> reason_;  // per var: clause id or -1
  std::vector<int> trail_;
  std::vector<std::size_t> trail_lim_;  // trail position per decision level
  std::vector<int> dec_lit_;            // per level
  std::size_t qhead_ = 0;
  std::vector<std::uint32_t> branch_order_;  // vars by (occurrence desc, index asc)
  std::size_t branch_cursor_ = 0;
  std::vector<signed char> seen_;
  bool root_conflict_ = false;
  SolveStats stats_;
};

}  // namespace crr

#endif
