#include "crr/dpll.hpp"

#include <algorithm>
#include <numeric>

#include "crr/errors.hpp"

namespace crr {

DpllSolver::DpllSolver(std::size_t num_vars, const std::vector<std::vector<int>>& clauses,
                       const DpllOptions& opts)
    : opts_(opts), num_vars_(num_vars) {
  values_.assign(num_vars_ + 1, -1);
  phase_.assign(num_vars_ + 1, 0);
  level_.assign(num_vars_ + 1, 0);
  reason_.assign(num_vars_ + 1, -1);
  seen_.assign(num_vars_ + 1, 0);
  watches_.assign(2 * num_vars_, {});
  offsets_.push_back(0);
  trail_.reserve(num_vars_);

  std::vector<std::uint64_t> occ(num_vars_ + 1, 0);
  std::vector<signed char> mark(2 * num_vars_, 0);
  std::vector<int> buf;
  for (const auto& clause : clauses) {
    // Stable dedupe; tautologies are dropped.
    buf.clear();
    bool tautology = false;
    for (int lit : clause) {
      if (lit == 0 || var_of(lit) > num_vars_)
        throw ContractError("dpll: literal out of range");
      if (mark[widx(lit)]) continue;
      if (mark[widx(-lit)]) {
        tautology = true;
        break;
      }
      mark[widx(lit)] = 1;
      buf.push_back(lit);
    }
    for (int lit : buf) mark[widx(lit)] = 0;
    if (tautology) {
      for (int lit : clause) mark[widx(lit)] = 0;
      continue;
    }
    if (buf.empty()) {
      root_conflict_ = true;
      continue;
    }
    for (int lit : buf) occ[var_of(lit)]++;
    if (buf.size() == 1) {
      const int unit = buf[0];
      if (value(unit) == 0) root_conflict_ = true;
      else if (value(unit) == -1) assign(unit, -1);
      continue;
    }
    add_clause_watched(buf);
  }

  branch_order_.resize(num_vars_);
  std::iota(branch_order_.begin(), branch_order_.end(), 1u);
  std::stable_sort(branch_order_.begin(), branch_order_.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return occ[a] > occ[b]; });
}

std::int64_t DpllSolver::add_clause_watched(const std::vector<int>& lits) {
  const auto cid = static_cast<std::int64_t>(offsets_.size() - 1);
  const std::size_t begin = lits_.size();
  lits_.insert(lits_.end(), lits.begin(), lits.end());
  offsets_.push_back(lits_.size());
  watches_[widx(lits_[begin])].push_back(static_cast<std::uint32_t>(cid));
  watches_[widx(lits_[begin + 1])].push_back(static_cast<std::uint32_t>(cid));
  return cid;
}

void DpllSolver::assign(int lit, std::int64_t reason) {
  const std::size_t v = var_of(lit);
  values_[v] = lit > 0 ? 1 : 0;
  phase_[v] = values_[v];
  level_[v] = static_cast<std::uint32_t>(trail_lim_.size());
  reason_[v] = reason;
  trail_.push_back(lit);
}

void DpllSolver::undo_to(std::size_t trail_pos) {
  while (trail_.size() > trail_pos) {
    const int lit = trail_.back();
    trail_.pop_back();
    values_[var_of(lit)] = -1;
    reason_[var_of(lit)] = -1;
  }
  qhead_ = trail_pos;
  // Unassignment may have freed variables before the cursor.
  branch_cursor_ = 0;
}

std::int64_t DpllSolver::propagate() {
  while (qhead_ < trail_.size()) {
    const int lit = trail_[qhead_++];
    ++stats_.propagations;
    const int false_lit = -lit;
    auto& wl = watches_[widx(false_lit)];
    std::size_t keep = 0;
    for (std::size_t wi = 0; wi < wl.size(); ++wi) {
      const std::uint32_t cid = wl[wi];
      int* cl = lits_.data() + offsets_[cid];
      const std::size_t len = offsets_[cid + 1] - offsets_[cid];
      if (cl[0] == false_lit) std::swap(cl[0], cl[1]);
      // cl[1] is the falsified watch now.
      if (value(cl[0]) == 1) {
        wl[keep++] = cid;
        continue;
      }
      bool moved = false;
      for (std::size_t k = 2; k < len; ++k) {
        if (value(cl[k]) != 0) {
          std::swap(cl[1], cl[k]);
          watches_[widx(cl[1])].push_back(cid);
          moved = true;
          break;
        }
      }
      if (moved) continue;
      wl[keep++] = cid;
      if (value(cl[0]) == 0) {
        // Conflict: keep the remaining watches intact before bailing out.
        for (++wi; wi < wl.size(); ++wi) wl[keep++] = wl[wi];
        wl.resize(keep);
        return static_cast<std::int64_t>(cid);
      }
      assign(cl[0], static_cast<std::int64_t>(cid));
    }
    wl.resize(keep);
  }
  return -1;
}

int DpllSolver::pick_branch_lit() {
  while (branch_cursor_ < branch_order_.size() &&
         values_[branch_order_[branch_cursor_]] >= 0)
    ++branch_cursor_;
  if (branch_cursor_ >= branch_order_.size()) return 0;
  const std::uint32_t v = branch_order_[branch_cursor_];
  return phase_[v] == 1 ? static_cast<int>(v) : -static_cast<int>(v);
}

// First-UIP conflict analysis. learned[0] is the asserting literal,
// learned[1] (when present) a literal from the backjump level.
void DpllSolver::analyze(std::int64_t conflict, std::vector<int>& learned,
                         std::size_t& bj_level) {
  learned.assign(1, 0);
  const std::size_t current = trail_lim_.size();
  std::size_t counter = 0;
  std::size_t idx = trail_.size();
  int p = 0;
  std::int64_t reason = conflict;
  std::vector<std::size_t> to_clear;
  while (true) {
    const int* cl = lits_.data() + offsets_[reason];
    const std::size_t len = offsets_[reason + 1] - offsets_[reason];
    for (std::size_t k = (p == 0 ? 0 : 1); k < len; ++k) {
      const int q = cl[k];
      const std::size_t v = var_of(q);
      if (seen_[v] || level_[v] == 0) continue;
      seen_[v] = 1;
      to_clear.push_back(v);
      if (level_[v] == current)
        ++counter;
      else
        learned.push_back(q);
    }
    while (!seen_[var_of(trail_[idx - 1])]) --idx;
    p = trail_[idx - 1];
    --idx;
    seen_[var_of(p)] = 0;
    --counter;
    if (counter == 0) break;
    reason = reason_[var_of(p)];
  }
  learned[0] = -p;
  for (std::size_t v : to_clear) seen_[v] = 0;

  bj_level = 0;
  if (learned.size() > 1) {
    std::size_t best = 1;
    for (std::size_t k = 2; k < learned.size(); ++k)
      if (level_[var_of(learned[k])] > level_[var_of(learned[best])]) best = k;
    std::swap(learned[1], learned[best]);
    bj_level = level_[var_of(learned[1])];
  }
}

DpllResult DpllSolver::solve(std::chrono::duration<double> timeout) {
  DpllResult result;
  if (root_conflict_) {
    result.outcome = Outcome::unsat;
    result.stats = stats_;
    return result;
  }
  const auto deadline = std::chrono::steady_clock::now() + timeout;
  std::vector<int> learned;
  while (true) {
    const std::int64_t conflict = propagate();
    if (conflict >= 0) {
      ++stats_.conflicts;
      if (trail_lim_.empty()) {
        result.outcome = Outcome::unsat;
        result.stats = stats_;
        return result;
      }
      if (opts_.learning) {
        std::size_t bj_level = 0;
        analyze(conflict, learned, bj_level);
        undo_to(trail_lim_[bj_level]);
        trail_lim_.resize(bj_level);
        dec_lit_.resize(bj_level);
        if (learned.size() == 1) {
          assign(learned[0], -1);
        } else {
          const std::int64_t cid = add_clause_watched(learned);
          assign(learned[0], cid);
        }
      } else {
        // Chronological: undo the innermost decision and force its negation
        // at the parent level. A conflict with no decisions left is caught
        // above as unsat.
        const int lit = dec_lit_.back();
        undo_to(trail_lim_.back());
        trail_lim_.pop_back();
        dec_lit_.pop_back();
        assign(-lit, -1);
      }
      continue;
    }
    if (trail_.size() == num_vars_) {
      result.outcome = Outcome::sat;
      result.values.assign(num_vars_ + 1, -1);
      for (std::size_t v = 1; v <= num_vars_; ++v) result.values[v] = values_[v];
      result.stats = stats_;
      return result;
    }
    if (std::chrono::steady_clock::now() >= deadline) {
      result.outcome = Outcome::indetermined;
      result.stats = stats_;
      return result;
    }
    const int lit = pick_branch_lit();
    ++stats_.decisions;
    trail_lim_.push_back(trail_.size());
    dec_lit_.push_back(lit);
    assign(lit, -1);
  }
}

}  // namespace crr
