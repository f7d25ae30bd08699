#include "crr/sweep.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "crr/errors.hpp"
#include "crr/generator.hpp"
#include "crr/io.hpp"
#include "crr/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace crr {

namespace {

void check_spec(const SweepSpec& spec) {
  if (spec.sizes.empty()) throw ContractError("sweep: no sizes");
  if (spec.count < 1) throw ContractError("sweep: count must be >= 1");
  if (spec.pq_mode == PqMode::grid) {
    if (!(spec.grid_step > 0.0 && spec.grid_step <= 1.0))
      throw ContractError("sweep: grid step must lie in (0,1]");
    const double cells = 1.0 / spec.grid_step;
    if (std::fabs(cells - std::round(cells)) > 1e-9)
      throw ContractError("sweep: grid step must divide 1 evenly");
  }
  if (spec.pq_mode == PqMode::band &&
      !(spec.band_lo >= 0.0 && spec.band_lo <= spec.band_hi && spec.band_hi <= 1.0))
    throw ContractError("sweep: band must satisfy 0 <= lo <= hi <= 1");
}

std::string format_pq(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

CrrInstance sweep_instance(const SweepSpec& spec, std::size_t size_index,
                           std::size_t index_in_size, std::uint64_t* seed_out) {
  const auto [n, m] = spec.sizes[size_index];
  const std::uint64_t inst_seed = derive_seed(spec.seed, size_index, index_in_size);
  if (seed_out) *seed_out = inst_seed;
  switch (spec.pq_mode) {
    case PqMode::uniform:
      return gen_pq_uniform(n, m, inst_seed);
    case PqMode::band: {
      Rng rng(inst_seed);
      GenSpec gs;
      gs.n = n;
      gs.m = m;
      gs.p = spec.band_lo + rng.uniform01() * (spec.band_hi - spec.band_lo);
      gs.q = spec.band_lo + rng.uniform01() * (spec.band_hi - spec.band_lo);
      gs.seed = derive_seed(inst_seed, 1);
      CrrInstance inst = gen_instance(gs);
      inst.meta().seed = inst_seed;
      return inst;
    }
    case PqMode::grid: {
      const std::size_t per_axis =
          static_cast<std::size_t>(std::llround(1.0 / spec.grid_step)) + 1;
      const std::size_t point = index_in_size % (per_axis * per_axis);
      GenSpec gs;
      gs.n = n;
      gs.m = m;
      gs.p = std::min(1.0, static_cast<double>(point / per_axis) * spec.grid_step);
      gs.q = std::min(1.0, static_cast<double>(point % per_axis) * spec.grid_step);
      gs.seed = inst_seed;
      return gen_instance(gs);
    }
  }
  throw InternalError("sweep_instance: bad mode");
}

void write_result_row(std::ostream& out, const ResultRow& row) {
  out << row.instance_id << ',' << row.n << ',' << row.m << ',' << format_pq(row.p) << ','
      << format_pq(row.q) << ',' << row.seed << ',' << row.encoder << ',' << row.solver
      << ',' << to_string(row.outcome) << ',' << static_cast<long long>(row.wall_ms + 0.5)
      << ',' << row.num_vars << ',' << row.num_constraints << '\n';
}

std::vector<ResultRow> read_results_csv(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw ParseError("results CSV is empty");
  if (!header.empty() && header.back() == '\r') header.pop_back();
  {
    std::istringstream expect(kResultsHeader), got(header);
    std::string ecol, gcol;
    std::size_t idx = 0;
    while (std::getline(expect, ecol, ',')) {
      ++idx;
      if (!std::getline(got, gcol, ',') || gcol != ecol)
        throw ParseError("results CSV column " + std::to_string(idx) + ": expected '" +
                         ecol + "', got '" + gcol + "'");
    }
    std::string extra;
    if (std::getline(got, extra, ','))
      throw ParseError("results CSV has unexpected extra column '" + extra + "'");
  }
  std::vector<ResultRow> rows;
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string f[12];
    for (int c = 0; c < 12; ++c)
      if (!std::getline(ls, f[c], ','))
        throw ParseError("results CSV row with fewer than 12 fields", line_no);
    ResultRow row;
    row.instance_id = std::stoull(f[0]);
    row.n = std::stoull(f[1]);
    row.m = std::stoull(f[2]);
    row.p = std::stod(f[3]);
    row.q = std::stod(f[4]);
    row.seed = std::stoull(f[5]);
    row.encoder = f[6];
    row.solver = f[7];
    row.outcome = outcome_from_string(f[8]);
    row.wall_ms = std::stod(f[9]);
    row.num_vars = std::stoull(f[10]);
    row.num_constraints = std::stoull(f[11]);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ResultRow> run_sweep(const SweepSpec& spec, const SweepOutputs& outputs,
                                 const std::atomic<bool>* cancel) {
  check_spec(spec);
  if (outputs.csv_path.empty()) throw ContractError("sweep: csv_path required");

  std::size_t already_done = 0;
  const bool csv_exists = std::filesystem::exists(outputs.csv_path);
  if (outputs.resume && csv_exists) {
    std::ifstream in(outputs.csv_path);
    const auto previous = read_results_csv(in);
    already_done = previous.size();
    for (std::size_t i = 0; i < previous.size(); ++i)
      if (previous[i].instance_id != i)
        throw ParseError("results CSV is not a clean prefix; cannot resume");
  }

  const bool append = outputs.resume && csv_exists;
  std::ofstream csv(outputs.csv_path, append ? std::ios::app : std::ios::trunc);
  if (!csv) throw ParseError("cannot open results CSV: " + outputs.csv_path);
  if (!append) csv << kResultsHeader << '\n';
  std::ofstream scatter;
  if (!outputs.scatter_path.empty()) {
    const bool scatter_append = append && std::filesystem::exists(outputs.scatter_path);
    scatter.open(outputs.scatter_path,
                 scatter_append ? std::ios::app : std::ios::trunc);
    if (!scatter_append) scatter << "p,q,outcome\n";
  }
  if (!outputs.instances_dir.empty())
    std::filesystem::create_directories(outputs.instances_dir);

  const std::size_t total = spec.sizes.size() * spec.count;
  struct Slot {
    ResultRow row;
    bool done = false;
  };
  std::vector<Slot> slots(total);
  std::mutex flush_mutex;
  std::size_t flushed = already_done;
  std::vector<ResultRow> written;

  auto deliver = [&](std::size_t id, ResultRow row) {
    std::lock_guard<std::mutex> lock(flush_mutex);
    slots[id].row = std::move(row);
    slots[id].done = true;
    while (flushed < total && slots[flushed].done) {
      write_result_row(csv, slots[flushed].row);
      if (scatter.is_open()) {
        scatter << format_pq(slots[flushed].row.p) << ',' << format_pq(slots[flushed].row.q)
                << ',' << to_string(slots[flushed].row.outcome) << '\n';
      }
      written.push_back(slots[flushed].row);
      ++flushed;
    }
    csv.flush();
    if (scatter.is_open()) scatter.flush();
  };

  auto run_one = [&](std::size_t id) {
    const std::size_t size_index = id / spec.count;
    const std::size_t index_in_size = id % spec.count;
    std::uint64_t inst_seed = 0;
    CrrInstance inst = sweep_instance(spec, size_index, index_in_size, &inst_seed);
    if (!outputs.instances_dir.empty()) {
      std::ostringstream name;
      name << "inst_" << id << ".crr";
      std::ofstream f(std::filesystem::path(outputs.instances_dir) / name.str());
      write_instance(inst, f);
    }
    SolveOptions opts;
    opts.strategy = spec.strategy;
    opts.timeout = std::chrono::duration<double>(spec.timeout_s);
    opts.external_encoder = spec.external_encoder;
    opts.external_command = spec.external_command;
    const SolveRecord rec = solve(inst, opts);
    ResultRow row;
    row.instance_id = id;
    row.n = inst.n();
    row.m = inst.m();
    row.p = inst.meta().p.value_or(0.0);
    row.q = inst.meta().q.value_or(0.0);
    row.seed = inst_seed;
    row.encoder = rec.encoder_id;
    row.solver = rec.solver_id;
    row.outcome = rec.outcome;
    row.wall_ms = rec.wall_ms;
    row.num_vars = rec.num_vars;
    row.num_constraints = rec.num_constraints;
    deliver(id, std::move(row));
  };

#ifdef _OPENMP
  const int jobs = spec.jobs > 0 ? spec.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
  for (std::int64_t id = static_cast<std::int64_t>(already_done);
       id < static_cast<std::int64_t>(total); ++id) {
    if (cancel && cancel->load()) continue;
    run_one(static_cast<std::size_t>(id));
  }
#else
  for (std::size_t id = already_done; id < total; ++id) {
    if (cancel && cancel->load()) break;
    run_one(id);
  }
#endif

  if (!outputs.svg_path.empty()) {
    std::ifstream all_in(outputs.csv_path);
    const auto all_rows = read_results_csv(all_in);
    std::ofstream svg(outputs.svg_path);
    write_scatter_svg(all_rows, svg);
  }
  return written;
}

std::string report_proportions(const std::vector<ResultRow>& rows) {
  std::vector<std::pair<std::size_t, std::size_t>> order;
  std::map<std::pair<std::size_t, std::size_t>, std::array<std::size_t, 3>> counts;
  for (const auto& row : rows) {
    const auto key = std::make_pair(row.n, row.m);
    if (!counts.count(key)) order.push_back(key);
    auto& c = counts[key];
    c[row.outcome == Outcome::sat ? 0 : row.outcome == Outcome::unsat ? 1 : 2]++;
  }
  std::ostringstream out;
  out << "n,m,count,sat,unsat,indet,sat_frac,unsat_frac,indet_frac\n";
  out.setf(std::ios::fixed);
  out.precision(4);
  for (const auto& key : order) {
    const auto& c = counts[key];
    const double total = static_cast<double>(c[0] + c[1] + c[2]);
    out << key.first << ',' << key.second << ',' << (c[0] + c[1] + c[2]) << ',' << c[0]
        << ',' << c[1] << ',' << c[2] << ',' << c[0] / total << ',' << c[1] / total << ','
        << c[2] / total << '\n';
  }
  return out.str();
}

std::string report_cumulative(const std::vector<ResultRow>& rows) {
  std::map<std::tuple<std::size_t, std::size_t, std::string>, std::vector<double>> groups;
  for (const auto& row : rows)
    if (row.outcome != Outcome::indetermined)
      groups[{row.n, row.m, row.solver}].push_back(row.wall_ms);
  std::ostringstream out;
  out << "n,m,solver,wall_time_ms,solved\n";
  for (auto& [key, times] : groups) {
    std::sort(times.begin(), times.end());
    for (std::size_t i = 0; i < times.size(); ++i)
      out << std::get<0>(key) << ',' << std::get<1>(key) << ',' << std::get<2>(key) << ','
          << times[i] << ',' << (i + 1) << '\n';
  }
  return out.str();
}

void write_scatter_csv(const std::vector<ResultRow>& rows, std::ostream& out) {
  out << "p,q,outcome\n";
  for (const auto& row : rows)
    out << format_pq(row.p) << ',' << format_pq(row.q) << ',' << to_string(row.outcome)
        << '\n';
}

void write_scatter_svg(const std::vector<ResultRow>& rows, std::ostream& out) {
  const int size = 480, margin = 40;
  const int plot = size - 2 * margin;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\""
      << size << "\">\n";
  out << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << plot
      << "\" height=\"" << plot << "\" fill=\"white\" stroke=\"black\"/>\n";
  out << "<text x=\"" << size / 2 << "\" y=\"" << size - 8
      << "\" text-anchor=\"middle\" font-size=\"12\">p (zeros in S)</text>\n";
  out << "<text x=\"12\" y=\"" << size / 2 << "\" text-anchor=\"middle\" font-size=\"12\" "
         "transform=\"rotate(-90 12 "
      << size / 2 << ")\">q (zeros in R)</text>\n";
  for (const auto& row : rows) {
    const double x = margin + row.p * plot;
    const double y = size - margin - row.q * plot;
    const char* color = row.outcome == Outcome::sat     ? "#2ca02c"
                        : row.outcome == Outcome::unsat ? "#d62728"
                                                        : "#1f77b4";
    out << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"3\" fill=\"" << color
        << "\" fill-opacity=\"0.7\"/>\n";
  }
  out << "</svg>\n";
}

}  // namespace crr
