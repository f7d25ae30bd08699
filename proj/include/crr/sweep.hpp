#ifndef CRR_SWEEP_HPP
#define CRR_SWEEP_HPP

#include <atomic>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "crr/outcome.hpp"
#include "crr/solver.hpp"

namespace crr {

enum class PqMode { uniform, grid, band };

// One experiment sweep: `count` instances per size, (p,q) per mode, solved
// with a per-instance timeout. Identical spec (including seed) regenerates
// the identical instance set.
struct SweepSpec {
  std::vector<std::pair<std::size_t, std::size_t>> sizes;
  std::size_t count = 1;
  PqMode pq_mode = PqMode::uniform;
  double grid_step = 0.1;  // grid mode: must divide 1 evenly
  double band_lo = 0.0;    // band mode
  double band_hi = 1.0;
  double timeout_s = 3600.0;
  Strategy strategy = Strategy::automatic;
  std::string external_encoder = "dimacs";
  std::string external_command;
  std::uint64_t seed = 0;
  int jobs = 0;  // concurrent solver workers; 0 = OpenMP default
};

struct ResultRow {
  std::size_t instance_id = 0;
  std::size_t n = 0, m = 0;
  double p = 0.0, q = 0.0;
  std::uint64_t seed = 0;
  std::string encoder, solver;
  Outcome outcome = Outcome::indetermined;
  double wall_ms = 0.0;
  std::size_t num_vars = 0, num_constraints = 0;
};

inline constexpr const char* kResultsHeader =
    "instance_id,n,m,p,q,seed,encoder,solver,outcome,wall_time_ms,num_vars,num_constraints";

struct SweepOutputs {
  std::string csv_path;        // required; appended in instance_id order
  std::string scatter_path;    // optional companion (p,q,outcome) file
  std::string svg_path;        // optional scatter plot
  std::string instances_dir;   // optional: persist each instance as a crr file
  bool resume = false;         // skip instance_ids already present in the CSV
};

// Generates, solves and records. Instances run concurrently up to the worker
// budget; rows are flushed in instance_id order through a sequencing buffer,
// so partial output is always a clean prefix. Returns the rows written by
// this call.
std::vector<ResultRow> run_sweep(const SweepSpec& spec, const SweepOutputs& outputs,
                                 const std::atomic<bool>* cancel = nullptr);

// The deterministic instance for one sweep slot, shared by run and resume.
CrrInstance sweep_instance(const SweepSpec& spec, std::size_t size_index,
                           std::size_t index_in_size, std::uint64_t* seed_out = nullptr);

std::vector<ResultRow> read_results_csv(std::istream& in);
void write_result_row(std::ostream& out, const ResultRow& row);

// Per-size sat/unsat/indet proportions.
std::string report_proportions(const std::vector<ResultRow>& rows);
// Cumulative solved-instances-over-time step points per size and solver.
std::string report_cumulative(const std::vector<ResultRow>& rows);

void write_scatter_csv(const std::vector<ResultRow>& rows, std::ostream& out);
void write_scatter_svg(const std::vector<ResultRow>& rows, std::ostream& out);

}  // namespace crr

#endif
