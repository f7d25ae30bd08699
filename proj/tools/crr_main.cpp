// crr: model reaction networks as hypergraphs, derive S/R graphs, and decide
// whether a given (S, R) pair is the species/reaction graph of any network.
//
// Exit codes: 0 success, 10 sat, 20 unsat, 30 indetermined, 1 error.

#include <atomic>
#include <chrono>
#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "crr/cnf.hpp"
#include "crr/dpll.hpp"
#include "crr/external.hpp"
#include "crr/generator.hpp"
#include "crr/ingest.hpp"
#include "crr/io.hpp"
#include "crr/lp.hpp"
#include "crr/reduction.hpp"
#include "crr/smtlib.hpp"
#include "crr/solver.hpp"
#include "crr/sweep.hpp"

namespace {

std::atomic<bool> g_interrupted{false};
void on_sigint(int) { g_interrupted.store(true); }

constexpr int kExitOk = 0;
constexpr int kExitSat = 10;
constexpr int kExitUnsat = 20;
constexpr int kExitIndet = 30;
constexpr int kExitError = 1;

int outcome_exit(crr::Outcome o) {
  switch (o) {
    case crr::Outcome::sat: return kExitSat;
    case crr::Outcome::unsat: return kExitUnsat;
    case crr::Outcome::indetermined: return kExitIndet;
  }
  return kExitError;
}

crr::Strategy parse_strategy(const std::string& s) {
  if (s == "auto") return crr::Strategy::automatic;
  if (s == "brute") return crr::Strategy::brute;
  if (s == "dpll") return crr::Strategy::dpll;
  if (s == "external") return crr::Strategy::external;
  throw CLI::ValidationError("--strategy", "must be auto|brute|dpll|external");
}

crr::CrrInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw crr::ParseError("cannot open instance file: " + path);
  return crr::read_instance(in);
}

void write_to(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  crr::spit_file(path, content);
}

struct SizesParser {
  std::vector<std::pair<std::size_t, std::size_t>> sizes;
  void parse(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      const auto x = tok.find('x');
      if (x == std::string::npos)
        throw CLI::ValidationError("--sizes", "expected NxM entries, e.g. 10x10,20x20");
      sizes.emplace_back(std::stoull(tok.substr(0, x)), std::stoull(tok.substr(x + 1)));
    }
    if (sizes.empty()) throw CLI::ValidationError("--sizes", "no sizes given");
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CRR toolkit: species/reaction graph reconstruction"};
  app.require_subcommand(1);

  // ---- gen ----
  auto* gen = app.add_subcommand("gen", "generate a random instance");
  std::size_t gen_n = 10, gen_m = 10;
  double gen_p = -1.0, gen_q = -1.0, gen_density = 0.3;
  std::uint64_t gen_seed = 0;
  bool gen_pq_uni = false, gen_sat = false;
  std::string gen_out = "-", gen_hyper_out;
  gen->add_option("--n", gen_n, "species count");
  gen->add_option("--m", gen_m, "reaction count");
  gen->add_option("--p", gen_p, "zero fraction of S");
  gen->add_option("--q", gen_q, "zero fraction of R");
  gen->add_flag("--pq-uniform", gen_pq_uni, "draw p and q uniformly from [0,1]");
  gen->add_flag("--sat", gen_sat, "satisfiable-by-construction instance from a random hypergraph");
  gen->add_option("--density", gen_density, "tail/head membership probability for --sat");
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--out", gen_out, "output instance file ('-' for stdout)");
  gen->add_option("--hyper-out", gen_hyper_out, "with --sat: write the witness hypergraph");

  // ---- encode ----
  auto* encode = app.add_subcommand("encode", "write a declarative encoding");
  std::string enc_in, enc_format = "dimacs", enc_out = "-";
  bool enc_full_tseitin = false, enc_qf = false, enc_no_model = false;
  encode->add_option("--in", enc_in, "instance file")->required();
  encode->add_option("--format", enc_format, "dimacs | smt2 | lp");
  encode->add_option("--out", enc_out, "output file ('-' for stdout)");
  encode->add_flag("--full-tseitin", enc_full_tseitin, "disable the one-sided encoding");
  encode->add_flag("--qf", enc_qf, "smt2: quantifier-free expansion");
  encode->add_flag("--no-get-model", enc_no_model, "smt2: omit (get-model)");

  // ---- solve ----
  auto* solve_cmd = app.add_subcommand("solve", "decide an instance");
  std::string sol_in, sol_strategy = "auto", sol_encoder = "dimacs", sol_command,
              sol_solution_out;
  double sol_timeout = 3600.0;
  bool sol_stats = false, sol_full_tseitin = false, sol_no_learning = false;
  solve_cmd->add_option("--in", sol_in, "instance file")->required();
  solve_cmd->add_option("--strategy", sol_strategy, "auto | brute | dpll | external");
  solve_cmd->add_option("--timeout", sol_timeout, "seconds (default 3600)");
  solve_cmd->add_option("--encoder", sol_encoder, "external: dimacs | smt2 | lp");
  solve_cmd->add_option("--command", sol_command,
                        "external: argv template with {input} {timeout} {solution} "
                        "(default $CRR_EXTERNAL_SOLVER)");
  solve_cmd->add_option("--solution", sol_solution_out, "write the model when sat");
  solve_cmd->add_flag("--stats", sol_stats, "print decisions/propagations/conflicts");
  solve_cmd->add_flag("--full-tseitin", sol_full_tseitin, "disable the one-sided encoding");
  solve_cmd->add_flag("--no-learning", sol_no_learning,
                      "plain chronological DPLL without clause learning");

  // ---- verify ----
  auto* verify_cmd = app.add_subcommand("verify", "check a solution against an instance");
  std::string ver_inst, ver_sol;
  verify_cmd->add_option("--instance", ver_inst, "instance file")->required();
  verify_cmd->add_option("--solution", ver_sol, "solution file")->required();

  // ---- reduce ----
  auto* reduce_cmd = app.add_subcommand("reduce", "Set Basis -> CRR reduction");
  std::string red_sb, red_out = "-", red_solution, red_extract_out = "-";
  reduce_cmd->add_option("--sb", red_sb, "Set Basis instance file ('sb 1')")->required();
  reduce_cmd->add_option("--out", red_out, "write the reduced CRR instance");
  reduce_cmd->add_option("--solution", red_solution,
                         "extract: solution of the reduced instance");
  reduce_cmd->add_option("--extract-out", red_extract_out,
                         "extract: write recovered Set Basis factors (sol format)");

  // ---- ingest ----
  auto* ingest_cmd = app.add_subcommand("ingest", "read a reaction network file");
  std::string ing_in, ing_out, ing_stats_out;
  bool ing_solve = false;
  double ing_timeout = 3600.0;
  ingest_cmd->add_option("--in", ing_in, "hypergraph file ('hyper 1')")->required();
  ingest_cmd->add_option("--out", ing_out, "write the derived instance");
  ingest_cmd->add_option("--stats-out", ing_stats_out, "write the stats CSV ('-' for stdout)");
  ingest_cmd->add_flag("--solve", ing_solve, "solve the derived instance for the report");
  ingest_cmd->add_option("--timeout", ing_timeout, "seconds for --solve");

  // ---- sweep ----
  auto* sweep_cmd = app.add_subcommand("sweep", "random-instance experiment sweep");
  std::string sw_sizes = "10x10", sw_pq = "uniform", sw_out, sw_scatter, sw_svg,
              sw_instances, sw_strategy = "auto", sw_encoder = "dimacs", sw_command;
  std::size_t sw_count = 1;
  double sw_timeout = 3600.0;
  std::uint64_t sw_seed = 0;
  int sw_jobs = 0;
  bool sw_resume = false;
  sweep_cmd->add_option("--sizes", sw_sizes, "comma list of NxM, e.g. 10x10,20x20");
  sweep_cmd->add_option("--count", sw_count, "instances per size");
  sweep_cmd->add_option("--pq", sw_pq, "uniform | grid:STEP | band:LO:HI");
  sweep_cmd->add_option("--timeout", sw_timeout, "per-instance seconds");
  sweep_cmd->add_option("--strategy", sw_strategy, "auto | brute | dpll | external");
  sweep_cmd->add_option("--encoder", sw_encoder, "external encoder");
  sweep_cmd->add_option("--command", sw_command, "external argv template");
  sweep_cmd->add_option("--seed", sw_seed, "sweep seed");
  sweep_cmd->add_option("--out", sw_out, "results CSV")->required();
  sweep_cmd->add_option("--scatter", sw_scatter, "companion (p,q,outcome) CSV");
  sweep_cmd->add_option("--svg", sw_svg, "scatter plot SVG");
  sweep_cmd->add_option("--save-instances", sw_instances, "directory for instance files");
  sweep_cmd->add_option("--jobs", sw_jobs, "concurrent solver workers");
  sweep_cmd->add_flag("--resume", sw_resume, "continue an interrupted sweep");

  // ---- report ----
  auto* report_cmd = app.add_subcommand("report", "summarize sweep CSVs");
  std::vector<std::string> rep_files;
  std::string rep_proportions = "-", rep_cumulative;
  report_cmd->add_option("files", rep_files, "results CSV files")->required();
  report_cmd->add_option("--proportions", rep_proportions,
                         "per-size outcome proportions output");
  report_cmd->add_option("--cumulative", rep_cumulative,
                         "cumulative solved-over-time output");

  // ---- dimacs ----
  auto* dimacs_cmd = app.add_subcommand("dimacs", "run the internal DPLL on a DIMACS file");
  std::string dim_in;
  double dim_timeout = 3600.0;
  bool dim_no_learning = false;
  dimacs_cmd->add_option("--in", dim_in, "DIMACS CNF file")->required();
  dimacs_cmd->add_option("--timeout", dim_timeout, "seconds");
  dimacs_cmd->add_flag("--no-learning", dim_no_learning,
                       "plain chronological DPLL without clause learning");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*gen) {
      std::ostringstream out;
      if (gen_sat) {
        auto [inst, hyper] = crr::gen_sat_instance(gen_n, gen_m, gen_density, gen_seed);
        crr::write_instance(inst, out);
        if (!gen_hyper_out.empty()) {
          std::ostringstream hout;
          crr::write_hypergraph(hyper, hout);
          write_to(gen_hyper_out, hout.str());
        }
      } else if (gen_pq_uni) {
        crr::write_instance(crr::gen_pq_uniform(gen_n, gen_m, gen_seed), out);
      } else {
        if (gen_p < 0.0 || gen_q < 0.0)
          throw crr::ContractError("gen: give --p and --q, or --pq-uniform, or --sat");
        crr::GenSpec spec{gen_n, gen_m, gen_p, gen_q, gen_seed};
        crr::write_instance(crr::gen_instance(spec), out);
      }
      write_to(gen_out, out.str());
      return kExitOk;
    }

    if (*encode) {
      const crr::CrrInstance inst = load_instance(enc_in);
      std::ostringstream out;
      if (enc_format == "dimacs") {
        crr::TseitinOptions topts;
        topts.polarity_optimization = !enc_full_tseitin;
        crr::write_dimacs(crr::tseitin_cnf(crr::encode_direct(inst), topts), out);
      } else if (enc_format == "smt2") {
        crr::SmtOptions sopts;
        sopts.quantifier_free = enc_qf;
        sopts.get_model = !enc_no_model;
        crr::write_smtlib(inst, out, sopts);
      } else if (enc_format == "lp") {
        crr::write_lp(inst, out);
      } else {
        throw crr::ContractError("encode: unknown format " + enc_format);
      }
      write_to(enc_out, out.str());
      return kExitOk;
    }

    if (*solve_cmd) {
      const crr::CrrInstance inst = load_instance(sol_in);
      crr::SolveOptions opts;
      opts.strategy = parse_strategy(sol_strategy);
      opts.timeout = std::chrono::duration<double>(sol_timeout);
      opts.full_tseitin = sol_full_tseitin;
      opts.learning = !sol_no_learning;
      opts.external_encoder = sol_encoder;
      opts.external_command = sol_command;
      if (opts.strategy == crr::Strategy::external && opts.external_command.empty()) {
        const char* env = std::getenv("CRR_EXTERNAL_SOLVER");
        if (!env || !*env)
          throw crr::ContractError(
              "external strategy needs --command or CRR_EXTERNAL_SOLVER");
        opts.external_command = env;
      }
      const crr::SolveRecord rec = crr::solve(inst, opts);
      std::cout << to_string(rec.outcome) << " n=" << inst.n() << " m=" << inst.m()
                << " solver=" << rec.solver_id << " wall_ms=" << rec.wall_ms << '\n';
      if (sol_stats)
        std::cout << "decisions=" << rec.stats.decisions
                  << " propagations=" << rec.stats.propagations
                  << " conflicts=" << rec.stats.conflicts << '\n';
      if (rec.outcome == crr::Outcome::sat && !sol_solution_out.empty()) {
        std::ostringstream out;
        crr::write_solution(*rec.model, out);
        write_to(sol_solution_out, out.str());
      }
      return outcome_exit(rec.outcome);
    }

    if (*verify_cmd) {
      const crr::CrrInstance inst = load_instance(ver_inst);
      std::ifstream sin(ver_sol);
      if (!sin) throw crr::ParseError("cannot open solution file: " + ver_sol);
      const crr::Reconstruction rec = crr::read_solution(sin);
      if (crr::verify(inst, rec)) {
        std::cout << "OK\n";
        return kExitOk;
      }
      std::cout << "FAIL: solution does not reproduce S and R\n";
      return kExitError;
    }

    if (*reduce_cmd) {
      std::ifstream in(red_sb);
      if (!in) throw crr::ParseError("cannot open sb file: " + red_sb);
      const crr::SbInstance sb = crr::read_sb(in);
      if (!red_solution.empty()) {
        std::ifstream sin(red_solution);
        if (!sin) throw crr::ParseError("cannot open solution file: " + red_solution);
        const crr::Reconstruction rec = crr::read_solution(sin);
        auto [e_sq, p_sq] = crr::extract_sb_solution(rec);
        auto [e, p] = crr::unpad_sb_factors(e_sq, p_sq, sb.s.rows(), sb.s.cols());
        if (!(crr::bool_product(e, p) == sb.s))
          throw crr::ModelIntegrityError("extracted factors do not reproduce the SB matrix");
        std::ostringstream out;
        crr::write_solution(crr::Reconstruction{e, p}, out);
        write_to(red_extract_out, out.str());
        return kExitOk;
      }
      std::ostringstream out;
      crr::write_instance(crr::reduce_sb_to_crr(sb), out);
      write_to(red_out, out.str());
      return kExitOk;
    }

    if (*ingest_cmd) {
      std::ifstream in(ing_in);
      if (!in) throw crr::ParseError("cannot open network file: " + ing_in);
      const crr::Hypergraph h = crr::parse_hypergraph(in);
      auto [inst, stats] = crr::instance_from_network(h, ing_in);
      if (!ing_out.empty()) {
        std::ostringstream out;
        crr::write_instance(inst, out);
        write_to(ing_out, out.str());
      }
      std::vector<crr::NetworkStats> all_stats{stats};
      std::vector<crr::SolveRecord> solved;
      if (ing_solve) {
        crr::SolveOptions opts;
        opts.timeout = std::chrono::duration<double>(ing_timeout);
        solved.push_back(crr::solve(inst, opts));
      }
      const std::string csv = crr::stats_report(all_stats, ing_solve ? &solved : nullptr);
      write_to(ing_stats_out.empty() ? "-" : ing_stats_out, csv);
      return kExitOk;
    }

    if (*sweep_cmd) {
      crr::SweepSpec spec;
      SizesParser sizes;
      sizes.parse(sw_sizes);
      spec.sizes = sizes.sizes;
      spec.count = sw_count;
      if (sw_pq == "uniform") {
        spec.pq_mode = crr::PqMode::uniform;
      } else if (sw_pq.rfind("grid:", 0) == 0) {
        spec.pq_mode = crr::PqMode::grid;
        spec.grid_step = std::stod(sw_pq.substr(5));
      } else if (sw_pq.rfind("band:", 0) == 0) {
        spec.pq_mode = crr::PqMode::band;
        const auto rest = sw_pq.substr(5);
        const auto colon = rest.find(':');
        if (colon == std::string::npos)
          throw crr::ContractError("--pq band needs band:LO:HI");
        spec.band_lo = std::stod(rest.substr(0, colon));
        spec.band_hi = std::stod(rest.substr(colon + 1));
      } else {
        throw crr::ContractError("--pq must be uniform, grid:STEP or band:LO:HI");
      }
      spec.timeout_s = sw_timeout;
      spec.strategy = parse_strategy(sw_strategy);
      spec.external_encoder = sw_encoder;
      spec.external_command = sw_command;
      spec.seed = sw_seed;
      spec.jobs = sw_jobs;
      crr::SweepOutputs outputs;
      outputs.csv_path = sw_out;
      outputs.scatter_path = sw_scatter;
      outputs.svg_path = sw_svg;
      outputs.instances_dir = sw_instances;
      outputs.resume = sw_resume;
      std::signal(SIGINT, on_sigint);
      const auto rows = crr::run_sweep(spec, outputs, &g_interrupted);
      std::cerr << "sweep: wrote " << rows.size() << " rows to " << sw_out << '\n';
      if (g_interrupted.load()) {
        std::cerr << "sweep: interrupted; resume with --resume\n";
        return kExitError;
      }
      return kExitOk;
    }

    if (*report_cmd) {
      std::vector<crr::ResultRow> rows;
      for (const auto& f : rep_files) {
        std::ifstream in(f);
        if (!in) throw crr::ParseError("cannot open results CSV: " + f);
        auto part = crr::read_results_csv(in);
        rows.insert(rows.end(), part.begin(), part.end());
      }
      write_to(rep_proportions, crr::report_proportions(rows));
      if (!rep_cumulative.empty()) write_to(rep_cumulative, crr::report_cumulative(rows));
      return kExitOk;
    }

    if (*dimacs_cmd) {
      std::ifstream in(dim_in);
      if (!in) throw crr::ParseError("cannot open DIMACS file: " + dim_in);
      auto [num_vars, clauses] = crr::read_dimacs(in);
      crr::DpllOptions dopts;
      dopts.learning = !dim_no_learning;
      crr::DpllSolver solver(num_vars, clauses, dopts);
      const crr::DpllResult res =
          solver.solve(std::chrono::duration<double>(dim_timeout));
      if (res.outcome == crr::Outcome::sat) {
        std::cout << "s SATISFIABLE\n";
        std::string line = "v";
        for (std::size_t v = 1; v <= num_vars; ++v) {
          line += ' ';
          line += res.values[v] == 1 ? std::to_string(v) : std::to_string(-(long long)v);
          if (line.size() > 72) {
            std::cout << line << '\n';
            line = "v";
          }
        }
        std::cout << line << " 0\n";
        return kExitSat;
      }
      if (res.outcome == crr::Outcome::unsat) {
        std::cout << "s UNSATISFIABLE\n";
        return kExitUnsat;
      }
      std::cout << "s UNKNOWN\n";
      return kExitIndet;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitOk;
}
