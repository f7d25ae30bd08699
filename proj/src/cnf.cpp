#include "crr/cnf.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include "crr/errors.hpp"

namespace crr {

CnfFormula tseitin_cnf(const DirectFormula& f, const TseitinOptions& opts) {
  CnfFormula cnf;
  cnf.map.n = f.n;
  cnf.map.m = f.m;
  const VarMap& vm = cnf.map;

  int next_var = static_cast<int>(vm.base_vars());
  auto fresh_aux = [&](VarMap::AuxKind kind, std::size_t row, std::size_t col,
                       std::size_t inner) {
    cnf.map.aux.push_back({kind, static_cast<std::uint32_t>(row),
                           static_cast<std::uint32_t>(col),
                           static_cast<std::uint32_t>(inner)});
    return ++next_var;
  };

  // An empty disjunction (a 1-cell with no possible witness, m = 0 or n = 0)
  // makes the formula false; encoded as a contradictory fresh variable so no
  // clause is ever empty.
  auto emit_false = [&](VarMap::AuxKind kind, std::size_t row, std::size_t col) {
    const int x = fresh_aux(kind, row, col, 0);
    cnf.clauses.push_back({x});
    cnf.clauses.push_back({-x});
  };

  for (auto [i, j] : f.s_zeros)
    for (std::size_t a = 0; a < f.m; ++a)
      cnf.clauses.push_back({-vm.e_var(i, a), -vm.p_var(a, j)});
  for (auto [a, b] : f.r_zeros)
    for (std::size_t i = 0; i < f.n; ++i)
      cnf.clauses.push_back({-vm.p_var(a, i), -vm.e_var(i, b)});

  for (auto [i, j] : f.s_ones) {
    if (f.m == 0) {
      emit_false(VarMap::AuxKind::s_cell, i, j);
      continue;
    }
    std::vector<int> big;
    big.reserve(f.m);
    for (std::size_t a = 0; a < f.m; ++a) {
      const int x = fresh_aux(VarMap::AuxKind::s_cell, i, j, a);
      const int e = vm.e_var(i, a);
      const int p = vm.p_var(a, j);
      cnf.clauses.push_back({-x, e});
      cnf.clauses.push_back({-x, p});
      if (!opts.polarity_optimization) cnf.clauses.push_back({x, -e, -p});
      big.push_back(x);
    }
    cnf.clauses.push_back(std::move(big));
  }
  for (auto [a, b] : f.r_ones) {
    if (f.n == 0) {
      emit_false(VarMap::AuxKind::r_cell, a, b);
      continue;
    }
    std::vector<int> big;
    big.reserve(f.n);
    for (std::size_t i = 0; i < f.n; ++i) {
      const int x = fresh_aux(VarMap::AuxKind::r_cell, a, b, i);
      const int p = vm.p_var(a, i);
      const int e = vm.e_var(i, b);
      cnf.clauses.push_back({-x, p});
      cnf.clauses.push_back({-x, e});
      if (!opts.polarity_optimization) cnf.clauses.push_back({x, -p, -e});
      big.push_back(x);
    }
    cnf.clauses.push_back(std::move(big));
  }

  cnf.num_vars = static_cast<std::size_t>(next_var);
  return cnf;
}

void write_dimacs(const CnfFormula& cnf, std::ostream& out) {
  out << "p cnf " << cnf.num_vars << ' ' << cnf.clauses.size() << '\n';
  for (const auto& clause : cnf.clauses) {
    for (int lit : clause) out << lit << ' ';
    out << "0\n";
  }
}

DimacsModel read_dimacs_model(const std::string& text) {
  DimacsModel model;
  bool have_status = false;
  bool v_terminated = false;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == 'c') continue;
    if (line.rfind("s ", 0) == 0) {
      if (have_status) throw ParseError("duplicate status line: " + line);
      have_status = true;
      const std::string status = line.substr(2);
      if (status == "SATISFIABLE")
        model.outcome = Outcome::sat;
      else if (status == "UNSATISFIABLE")
        model.outcome = Outcome::unsat;
      else if (status == "UNKNOWN" || status == "INDETERMINATE")
        model.outcome = Outcome::indetermined;
      else
        throw ParseError("unrecognized status line: " + line);
      continue;
    }
    if (line.rfind("v", 0) == 0 && (line.size() == 1 || line[1] == ' ')) {
      std::istringstream vs(line.substr(1));
      long long lit;
      while (vs >> lit) {
        if (lit == 0) {
          v_terminated = true;
          continue;
        }
        const std::size_t var = static_cast<std::size_t>(lit < 0 ? -lit : lit);
        if (model.values.size() <= var) model.values.resize(var + 1, -1);
        model.values[var] = lit > 0 ? 1 : 0;
      }
      if (!vs.eof()) throw ParseError("bad literal in values line: " + line);
      continue;
    }
    // Anything else outside comments is not SAT-competition output.
    throw ParseError("unrecognized solver output line: " + line);
  }
  if (!have_status) throw ParseError("no status ('s') line in solver output");
  if (model.outcome == Outcome::sat && !model.values.empty() && !v_terminated)
    throw ParseError("values ('v') lines not terminated by 0");
  return model;
}

std::pair<std::size_t, std::vector<std::vector<int>>> read_dimacs(std::istream& in) {
  std::string line;
  std::size_t num_vars = 0;
  long long num_clauses = -1;
  std::size_t line_no = 0;
  std::vector<std::vector<int>> clauses;
  std::vector<int> current;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == 'c') continue;
    if (line[0] == 'p') {
      std::istringstream ls(line);
      std::string p, cnf;
      long long v = -1;
      if (!(ls >> p >> cnf >> v >> num_clauses) || cnf != "cnf" || v < 0 ||
          num_clauses < 0)
        throw ParseError("bad DIMACS header: " + line, line_no);
      num_vars = static_cast<std::size_t>(v);
      continue;
    }
    if (num_clauses < 0) throw ParseError("clause before DIMACS header", line_no);
    std::istringstream ls(line);
    long long lit;
    while (ls >> lit) {
      if (lit == 0) {
        clauses.push_back(current);
        current.clear();
      } else {
        if (static_cast<std::size_t>(lit < 0 ? -lit : lit) > num_vars)
          throw ParseError("literal out of range: " + std::to_string(lit), line_no);
        current.push_back(static_cast<int>(lit));
      }
    }
    if (!ls.eof()) throw ParseError("bad token in clause line: " + line, line_no);
  }
  if (num_clauses < 0) throw ParseError("missing DIMACS header");
  if (!current.empty()) throw ParseError("last clause not terminated by 0");
  if (static_cast<long long>(clauses.size()) != num_clauses)
    throw ParseError("clause count mismatch: header says " + std::to_string(num_clauses) +
                     ", found " + std::to_string(clauses.size()));
  return {num_vars, std::move(clauses)};
}

Reconstruction decode_model(const VarMap& map, const Assignment& values) {
  auto value_of = [&](int var) -> bool {
    const std::size_t v = static_cast<std::size_t>(var);
    if (v >= values.size() || values[v] < 0)
      throw DecodeError("assignment missing variable " + std::to_string(var));
    return values[v] == 1;
  };
  Reconstruction rec{BitMatrix(map.n, map.m), BitMatrix(map.m, map.n)};
  for (std::size_t i = 0; i < map.n; ++i)
    for (std::size_t a = 0; a < map.m; ++a)
      rec.e.set(i, a, value_of(map.e_var(i, a)));
  for (std::size_t a = 0; a < map.m; ++a)
    for (std::size_t j = 0; j < map.n; ++j)
      rec.p.set(a, j, value_of(map.p_var(a, j)));
  return rec;
}

}  // namespace crr
