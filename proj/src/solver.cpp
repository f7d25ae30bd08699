#include "crr/solver.hpp"

#include <chrono>

#include "crr/external.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace crr {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Row-mask view of an instance for the enumeration kernel. Row i of S as a
// bitmask over j, row a of R as a bitmask over b. Limited to n, m <= 32,
// which the 2^(2nm) budget enforces long before.
struct MaskInstance {
  std::size_t n, m;
  std::vector<std::uint32_t> s_rows, r_rows;

  explicit MaskInstance(const CrrInstance& inst)
      : n(inst.n()), m(inst.m()), s_rows(n, 0), r_rows(m, 0) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (inst.s().get(i, j)) s_rows[i] |= 1u << j;
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        if (inst.r().get(a, b)) r_rows[a] |= 1u << b;
  }

  // E rows from the packed index: bit (i*m + a) is e[i][a].
  void e_rows_of(std::uint64_t e_idx, std::uint32_t* e_rows) const {
    const std::uint32_t row_mask = m >= 32 ? ~0u : ((1u << m) - 1);
    for (std::size_t i = 0; i < n; ++i)
      e_rows[i] = static_cast<std::uint32_t>(e_idx >> (i * m)) & row_mask;
  }
  void p_rows_of(std::uint64_t p_idx, std::uint32_t* p_rows) const {
    const std::uint32_t row_mask = n >= 32 ? ~0u : ((1u << n) - 1);
    for (std::size_t a = 0; a < m; ++a)
      p_rows[a] = static_cast<std::uint32_t>(p_idx >> (a * n)) & row_mask;
  }

  bool check(const std::uint32_t* e_rows, const std::uint32_t* p_rows) const {
    for (std::size_t i = 0; i < n; ++i) {
      std::uint32_t acc = 0;
      std::uint32_t row = e_rows[i];
      while (row) {
        const unsigned a = static_cast<unsigned>(__builtin_ctz(row));
        row &= row - 1;
        acc |= p_rows[a];
      }
      if (acc != s_rows[i]) return false;
    }
    for (std::size_t a = 0; a < m; ++a) {
      std::uint32_t acc = 0;
      std::uint32_t row = p_rows[a];
      while (row) {
        const unsigned i = static_cast<unsigned>(__builtin_ctz(row));
        row &= row - 1;
        acc |= e_rows[i];
      }
      if (acc != r_rows[a]) return false;
    }
    return true;
  }
};

Reconstruction reconstruction_from_indices(const CrrInstance& inst, std::uint64_t e_idx,
                                           std::uint64_t p_idx) {
  const std::size_t n = inst.n(), m = inst.m();
  Reconstruction rec{BitMatrix(n, m), BitMatrix(m, n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < m; ++a)
      rec.e.set(i, a, (e_idx >> (i * m + a)) & 1ULL);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t j = 0; j < n; ++j)
      rec.p.set(a, j, (p_idx >> (a * n + j)) & 1ULL);
  return rec;
}

std::uint64_t brute_space_checked(const CrrInstance& inst, std::uint64_t budget) {
  const std::size_t bits = 2 * inst.n() * inst.m();
  if (bits >= 64 || (bits > 0 && (1ULL << bits) > budget) || budget == 0)
    throw BudgetError("brute_force: 2^(2nm) exceeds budget, use the DPLL strategy");
  return 1ULL << (inst.n() * inst.m());
}

// n = 0 or m = 0: the only candidate is the empty reconstruction, which
// works iff the other matrix is all-zero.
SolveRecord brute_degenerate(const CrrInstance& inst, Clock::time_point t0) {
  SolveRecord rec;
  rec.solver_id = "brute";
  rec.encoder_id = "none";
  const bool sat = inst.s().count_ones() == 0 && inst.r().count_ones() == 0;
  if (sat) {
    rec.outcome = Outcome::sat;
    rec.model = Reconstruction{BitMatrix(inst.n(), inst.m()), BitMatrix(inst.m(), inst.n())};
  } else {
    rec.outcome = Outcome::unsat;
  }
  rec.wall_ms = ms_since(t0);
  return rec;
}

// Scans P space for one fixed E; returns the smallest verifying p index.
std::int64_t first_p_for(const MaskInstance& mi, const std::uint32_t* e_rows,
                         std::uint64_t p_space, std::uint32_t* p_scratch) {
  // If a species consumes nothing, its S row must already be empty.
  for (std::size_t i = 0; i < mi.n; ++i)
    if (e_rows[i] == 0 && mi.s_rows[i] != 0) return -1;
  for (std::uint64_t p_idx = 0; p_idx < p_space; ++p_idx) {
    mi.p_rows_of(p_idx, p_scratch);
    if (mi.check(e_rows, p_scratch)) return static_cast<std::int64_t>(p_idx);
  }
  return -1;
}

SolveRecord finish_brute(const CrrInstance& inst, Clock::time_point t0, bool found,
                         std::uint64_t e_idx, std::uint64_t p_idx, const char* solver_id) {
  SolveRecord rec;
  rec.solver_id = solver_id;
  rec.encoder_id = "none";
  rec.num_vars = 2 * inst.n() * inst.m();
  if (found) {
    rec.outcome = Outcome::sat;
    rec.model = reconstruction_from_indices(inst, e_idx, p_idx);
    if (!verify(inst, *rec.model))
      throw InternalError("brute_force: enumerated model failed verification");
  } else {
    rec.outcome = Outcome::unsat;
  }
  rec.wall_ms = ms_since(t0);
  return rec;
}

}  // namespace

SolveRecord brute_force_serial(const CrrInstance& inst, std::uint64_t budget) {
  const auto t0 = Clock::now();
  const std::uint64_t space = brute_space_checked(inst, budget);
  if (inst.n() == 0 || inst.m() == 0) return brute_degenerate(inst, t0);
  const MaskInstance mi(inst);
  std::vector<std::uint32_t> e_rows(inst.n()), p_rows(inst.m());
  for (std::uint64_t e_idx = 0; e_idx < space; ++e_idx) {
    mi.e_rows_of(e_idx, e_rows.data());
    const std::int64_t p = first_p_for(mi, e_rows.data(), space, p_rows.data());
    if (p >= 0)
      return finish_brute(inst, t0, true, e_idx, static_cast<std::uint64_t>(p), "brute");
  }
  return finish_brute(inst, t0, false, 0, 0, "brute");
}

SolveRecord brute_force(const CrrInstance& inst, std::uint64_t budget) {
#ifndef _OPENMP
  return brute_force_serial(inst, budget);
#else
  const auto t0 = Clock::now();
  const std::uint64_t space = brute_space_checked(inst, budget);
  if (inst.n() == 0 || inst.m() == 0) return brute_degenerate(inst, t0);
  const MaskInstance mi(inst);
  const std::uint64_t block = 1ULL << 14;
  for (std::uint64_t base = 0; base < space; base += block) {
    const std::uint64_t hi = std::min(space, base + block);
    std::int64_t best_e = -1;
    std::int64_t best_p = -1;
#pragma omp parallel
    {
      std::vector<std::uint32_t> e_rows(inst.n()), p_rows(inst.m());
      std::int64_t local_e = -1, local_p = -1;
#pragma omp for schedule(static) nowait
      for (std::int64_t e_idx = static_cast<std::int64_t>(base);
           e_idx < static_cast<std::int64_t>(hi); ++e_idx) {
        if (local_e >= 0) continue;
        mi.e_rows_of(static_cast<std::uint64_t>(e_idx), e_rows.data());
        const std::int64_t p = first_p_for(mi, e_rows.data(), space, p_rows.data());
        if (p >= 0) {
          local_e = e_idx;
          local_p = p;
        }
      }
#pragma omp critical
      {
        if (local_e >= 0 && (best_e < 0 || local_e < best_e)) {
          best_e = local_e;
          best_p = local_p;
        }
      }
    }
    if (best_e >= 0)
      return finish_brute(inst, t0, true, static_cast<std::uint64_t>(best_e),
                          static_cast<std::uint64_t>(best_p), "brute");
  }
  return finish_brute(inst, t0, false, 0, 0, "brute");
#endif
}

SolveRecord dpll_solve(const CnfFormula& cnf, std::chrono::duration<double> timeout,
                       const DpllOptions& dpll_opts) {
  const auto t0 = Clock::now();
  DpllSolver solver(cnf.num_vars, cnf.clauses, dpll_opts);
  DpllResult res = solver.solve(timeout);
  SolveRecord rec;
  rec.solver_id = "dpll";
  rec.encoder_id = "tseitin";
  rec.outcome = res.outcome;
  rec.stats = res.stats;
  rec.num_vars = cnf.num_vars;
  rec.num_constraints = cnf.clauses.size();
  if (res.outcome == Outcome::sat) {
    for (const auto& clause : cnf.clauses) {
      bool sat_clause = false;
      for (int lit : clause) {
        const std::size_t v = static_cast<std::size_t>(lit < 0 ? -lit : lit);
        if ((res.values[v] == 1) == (lit > 0)) {
          sat_clause = true;
          break;
        }
      }
      if (!sat_clause) throw InternalError("dpll: model does not satisfy the CNF");
    }
    rec.model = decode_model(cnf.map, res.values);
  }
  rec.wall_ms = ms_since(t0);
  return rec;
}

SolveRecord solve(const CrrInstance& inst, const SolveOptions& opts) {
  Strategy strategy = opts.strategy;
  if (strategy == Strategy::automatic) {
    const std::size_t bits = 2 * inst.n() * inst.m();
    strategy = (bits < 64 && (1ULL << bits) <= opts.brute_budget) ? Strategy::brute
                                                                  : Strategy::dpll;
  }
  SolveRecord rec;
  switch (strategy) {
    case Strategy::brute:
      rec = brute_force(inst, opts.brute_budget);
      break;
    case Strategy::dpll: {
      const auto t0 = Clock::now();
      TseitinOptions topts;
      topts.polarity_optimization = !opts.full_tseitin;
      CnfFormula cnf = tseitin_cnf(encode_direct(inst), topts);
      DpllOptions dopts;
      dopts.learning = opts.learning;
      rec = dpll_solve(cnf, opts.timeout, dopts);
      rec.wall_ms = ms_since(t0);
      break;
    }
    case Strategy::external: {
      ExternalSolverSpec spec;
      spec.encoder = opts.external_encoder;
      spec.command = opts.external_command;
      spec.timeout = opts.timeout;
      rec = solve_external(inst, spec);
      break;
    }
    case Strategy::automatic:
      break;
  }
  if (rec.outcome == Outcome::sat) {
    if (!rec.model) throw InternalError("solve: sat without model");
    if (!verify(inst, *rec.model))
      throw InternalError("solve: sat model failed instance verification");
  }
  return rec;
}

}  // namespace crr
