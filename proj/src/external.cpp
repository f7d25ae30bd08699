#include "crr/external.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "crr/cnf.hpp"
#include "crr/errors.hpp"
#include "crr/lp.hpp"
#include "crr/smtlib.hpp"
#include "crr/solver.hpp"

namespace crr {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<std::string> split_command(const std::string& command) {
  std::vector<std::string> tokens;
  std::istringstream in(command);
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  if (tokens.empty()) throw ContractError("external solver command is empty");
  return tokens;
}

void substitute(std::string& tok, const std::string& key, const std::string& value) {
  for (std::size_t pos; (pos = tok.find(key)) != std::string::npos;)
    tok.replace(pos, key.size(), value);
}

struct TempFile {
  std::string path;
  explicit TempFile(const char* suffix) {
    std::string tmpl = std::filesystem::temp_directory_path() / "crr-XXXXXX";
    tmpl += suffix;
    std::vector<char> buf(tmpl.begin(), tmpl.end());
    buf.push_back('\0');
    const int fd = ::mkstemps(buf.data(), static_cast<int>(std::strlen(suffix)));
    if (fd < 0) throw SpawnError("cannot create temp file: " + tmpl);
    ::close(fd);
    path.assign(buf.data());
  }
  void remove() const {
    std::error_code ec;
    std::filesystem::remove(path, ec);
  }
};

struct RunResult {
  std::string output;
  int exit_code = 0;
  bool timed_out = false;
};

RunResult run_process(const std::vector<std::string>& argv,
                      std::chrono::duration<double> timeout) {
  int pipefd[2];
  if (::pipe(pipefd) != 0) throw SpawnError("pipe() failed");

  std::vector<char*> cargv;
  cargv.reserve(argv.size() + 1);
  for (const auto& a : argv) cargv.push_back(const_cast<char*>(a.c_str()));
  cargv.push_back(nullptr);

  const pid_t pid = ::fork();
  if (pid < 0) {
    ::close(pipefd[0]);
    ::close(pipefd[1]);
    throw SpawnError("fork() failed");
  }
  if (pid == 0) {
    ::close(pipefd[0]);
    ::dup2(pipefd[1], STDOUT_FILENO);
    ::dup2(pipefd[1], STDERR_FILENO);
    ::close(pipefd[1]);
    ::execvp(cargv[0], cargv.data());
    // stdio buffers are not flushed by _Exit; write the marker directly.
    std::string msg = std::string("crr-exec-failed: ") + cargv[0] + ": " +
                      std::strerror(errno) + "\n";
    (void)!::write(STDOUT_FILENO, msg.data(), msg.size());
    std::_Exit(127);
  }

  ::close(pipefd[1]);
  RunResult res;
  const auto deadline = Clock::now() + timeout;
  char buf[4096];
  bool open = true;
  while (open) {
    const auto left =
        std::chrono::duration_cast<std::chrono::milliseconds>(deadline - Clock::now());
    if (left.count() <= 0) {
      res.timed_out = true;
      ::kill(pid, SIGKILL);
    }
    struct pollfd pfd{pipefd[0], POLLIN, 0};
    const int pr = ::poll(&pfd, 1, res.timed_out ? 100 : static_cast<int>(
                                       std::min<long long>(left.count(), 200)));
    if (pr > 0) {
      const ssize_t got = ::read(pipefd[0], buf, sizeof buf);
      if (got > 0)
        res.output.append(buf, static_cast<std::size_t>(got));
      else
        open = false;  // EOF (or error after kill)
    }
  }
  ::close(pipefd[0]);
  int status = 0;
  ::waitpid(pid, &status, 0);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : 128 + WTERMSIG(status);
  if (res.output.rfind("crr-exec-failed:", 0) == 0)
    throw SpawnError(res.output.substr(0, res.output.find('\n')));
  return res;
}

bool is_number(const std::string& tok) {
  char* end = nullptr;
  std::strtod(tok.c_str(), &end);
  return end && *end == '\0' && end != tok.c_str();
}

SolveRecord make_indet(std::chrono::duration<double> timeout) {
  SolveRecord rec;
  rec.outcome = Outcome::indetermined;
  rec.wall_ms = std::chrono::duration<double, std::milli>(timeout).count();
  return rec;
}

SolveRecord parse_dimacs_result(const CrrInstance& inst, const CnfFormula& cnf,
                                const RunResult& run,
                                std::chrono::duration<double> timeout) {
  DimacsModel model;
  try {
    model = read_dimacs_model(run.output);
  } catch (const ParseError& e) {
    if (run.timed_out) return make_indet(timeout);
    if (run.exit_code != 0 && run.exit_code != 10 && run.exit_code != 20)
      throw SolverExitError(std::string("external SAT solver failed: ") + e.what(),
                            run.exit_code);
    throw SolverOutputError(std::string("bad SAT solver output: ") + e.what());
  }
  SolveRecord rec;
  rec.outcome = model.outcome;
  if (model.outcome == Outcome::sat) {
    rec.model = decode_model(cnf.map, model.values);
    if (!verify(inst, *rec.model))
      throw ModelIntegrityError("external SAT solver returned a non-verifying model");
  }
  return rec;
}

// Tokenizes an SMT model: parentheses are their own tokens.
std::vector<std::string> smt_tokens(const std::string& text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : text) {
    if (c == '(' || c == ')') {
      if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
      tokens.push_back(std::string(1, c));
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return tokens;
}

SolveRecord parse_smt_result(const CrrInstance& inst, const RunResult& run,
                             std::chrono::duration<double> timeout) {
  // First line that is exactly a verdict; anything before it (banners,
  // warnings on the merged stream) is ignored, everything after is the model.
  std::istringstream in(run.output);
  std::string line, verdict, rest;
  while (std::getline(in, line)) {
    std::string t;
    std::istringstream(line) >> t;
    if (verdict.empty()) {
      if (t == "sat" || t == "unsat" || t == "unknown" || t == "timeout") verdict = t;
      continue;
    }
    rest += line;
    rest += '\n';
  }
  if (verdict.empty()) {
    if (run.timed_out) return make_indet(timeout);
    throw SolverExitError("external SMT solver produced no verdict", run.exit_code);
  }
  SolveRecord rec;
  if (verdict == "unsat") {
    rec.outcome = Outcome::unsat;
    return rec;
  }
  if (verdict == "unknown" || verdict == "timeout") return make_indet(timeout);

  // sat: pull e_/p_ Bool assignments out of the model block.
  const std::size_t n = inst.n(), m = inst.m();
  Reconstruction dec{BitMatrix(n, m), BitMatrix(m, n)};
  std::vector<signed char> have_e(n * m, 0), have_p(n * m, 0);
  const auto tokens = smt_tokens(rest);
  for (std::size_t t = 0; t + 1 < tokens.size(); ++t) {
    if (tokens[t] != "define-fun") continue;
    const std::string& name = tokens[t + 1];
    // Skip to the value token after the () Bool header.
    std::size_t v = t + 2;
    while (v < tokens.size() && tokens[v] != "true" && tokens[v] != "false") ++v;
    if (v >= tokens.size()) throw SolverOutputError("truncated define-fun", name);
    const bool value = tokens[v] == "true";
    std::size_t a_idx = 0, b_idx = 0;
    if (std::sscanf(name.c_str(), "e_%zu_%zu", &a_idx, &b_idx) == 2 && a_idx < n &&
        b_idx < m) {
      dec.e.set(a_idx, b_idx, value);
      have_e[a_idx * m + b_idx] = 1;
    } else if (std::sscanf(name.c_str(), "p_%zu_%zu", &a_idx, &b_idx) == 2 && a_idx < m &&
               b_idx < n) {
      dec.p.set(a_idx, b_idx, value);
      have_p[a_idx * n + b_idx] = 1;
    }
  }
  for (signed char h : have_e)
    if (!h) throw DecodeError("SMT model missing an E variable");
  for (signed char h : have_p)
    if (!h) throw DecodeError("SMT model missing a P variable");
  if (!verify(inst, dec))
    throw ModelIntegrityError("external SMT solver returned a non-verifying model");
  rec.outcome = Outcome::sat;
  rec.model = std::move(dec);
  return rec;
}

SolveRecord parse_lp_result(const CrrInstance& inst, const RunResult& run,
                            const std::string& solution_path,
                            std::chrono::duration<double> timeout) {
  std::string text;
  if (!solution_path.empty()) {
    std::ifstream in(solution_path);
    if (in) {
      std::ostringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    }
  }
  if (text.empty()) text = run.output;

  std::string lower(text);
  for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  const bool infeasible = lower.find("infeasible") != std::string::npos ||
                          lower.find("no primal feasible") != std::string::npos ||
                          lower.find("no integer feasible") != std::string::npos ||
                          lower.find("no feasible") != std::string::npos;
  const bool feasible = !infeasible && (lower.find("optimal") != std::string::npos ||
                                        lower.find("feasible") != std::string::npos);
  if (infeasible) {
    SolveRecord rec;
    rec.outcome = Outcome::unsat;
    return rec;
  }
  if (!feasible) {
    if (run.timed_out) return make_indet(timeout);
    throw SolverOutputError("no solution status found in ILP solver output");
  }

  // "name value" pairs: the first numeric token after a known variable name.
  const std::size_t n = inst.n(), m = inst.m();
  Reconstruction dec{BitMatrix(n, m), BitMatrix(m, n)};
  std::vector<signed char> have_e(n * m, 0), have_p(n * m, 0);
  std::istringstream ts(text);
  std::vector<std::string> tokens;
  for (std::string tok; ts >> tok;) tokens.push_back(tok);
  for (std::size_t t = 0; t < tokens.size(); ++t) {
    std::size_t a_idx = 0, b_idx = 0;
    const bool is_e = std::sscanf(tokens[t].c_str(), "e_%zu_%zu", &a_idx, &b_idx) == 2 &&
                      a_idx < n && b_idx < m;
    const bool is_p = !is_e &&
                      std::sscanf(tokens[t].c_str(), "p_%zu_%zu", &a_idx, &b_idx) == 2 &&
                      a_idx < m && b_idx < n;
    if (!is_e && !is_p) continue;
    if ((is_e && tokens[t] != lp_e_name(a_idx, b_idx)) ||
        (is_p && tokens[t] != lp_p_name(a_idx, b_idx)))
      continue;
    std::size_t v = t + 1;
    while (v < tokens.size() && !is_number(tokens[v])) ++v;
    if (v >= tokens.size())
      throw SolverOutputError("no value after variable in ILP solution", tokens[t]);
    const bool value = std::fabs(std::strtod(tokens[v].c_str(), nullptr)) > 0.5;
    if (is_e) {
      dec.e.set(a_idx, b_idx, value);
      have_e[a_idx * m + b_idx] = 1;
    } else {
      dec.p.set(a_idx, b_idx, value);
      have_p[a_idx * n + b_idx] = 1;
    }
  }
  for (signed char h : have_e)
    if (!h) throw DecodeError("ILP solution missing an E variable");
  for (signed char h : have_p)
    if (!h) throw DecodeError("ILP solution missing a P variable");
  if (!verify(inst, dec))
    throw ModelIntegrityError("external ILP solver returned a non-verifying model");
  SolveRecord rec;
  rec.outcome = Outcome::sat;
  rec.model = std::move(dec);
  return rec;
}

}  // namespace

SolveRecord solve_external(const CrrInstance& inst, const ExternalSolverSpec& spec) {
  const auto t0 = Clock::now();

  const char* suffix = spec.encoder == "dimacs" ? ".cnf"
                       : spec.encoder == "smt2" ? ".smt2"
                       : spec.encoder == "lp"   ? ".lp"
                                                : nullptr;
  if (!suffix) throw ContractError("unknown external encoder: " + spec.encoder);

  TempFile input(suffix);
  CnfFormula cnf;
  std::size_t num_vars = 0, num_constraints = 0;
  {
    std::ofstream out(input.path);
    if (spec.encoder == "dimacs") {
      cnf = tseitin_cnf(encode_direct(inst));
      write_dimacs(cnf, out);
      num_vars = cnf.num_vars;
      num_constraints = cnf.clauses.size();
    } else if (spec.encoder == "smt2") {
      SmtOptions sopts;
      sopts.quantifier_free = true;  // keeps the model decodable
      write_smtlib(inst, out, sopts);
      num_vars = 2 * inst.n() * inst.m();
    } else {
      const IlpModel model = write_lp(inst, out);
      num_vars = model.num_variables();
      num_constraints = model.constraints.size();
    }
  }

  std::vector<std::string> argv = split_command(spec.command);
  const bool wants_solution =
      spec.command.find("{solution}") != std::string::npos;
  std::optional<TempFile> solution;
  if (wants_solution) solution.emplace(".sol");
  const auto timeout_s = static_cast<long long>(std::ceil(
      std::chrono::duration<double>(spec.timeout).count()));
  for (auto& tok : argv) {
    substitute(tok, "{input}", input.path);
    substitute(tok, "{timeout}", std::to_string(timeout_s));
    if (solution) substitute(tok, "{solution}", solution->path);
  }

  SolveRecord rec;
  const auto cleanup = [&] {
    if (spec.keep_files) return;
    input.remove();
    if (solution) solution->remove();
  };
  try {
    const RunResult run = run_process(argv, spec.timeout);
    if (spec.encoder == "dimacs")
      rec = parse_dimacs_result(inst, cnf, run, spec.timeout);
    else if (spec.encoder == "smt2")
      rec = parse_smt_result(inst, run, spec.timeout);
    else
      rec = parse_lp_result(inst, run, solution ? solution->path : "", spec.timeout);
  } catch (...) {
    cleanup();
    throw;
  }
  cleanup();

  rec.solver_id = "external:" + argv[0];
  rec.encoder_id = spec.encoder;
  rec.num_vars = num_vars;
  rec.num_constraints = num_constraints;
  rec.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return rec;
}

}  // namespace crr
