#include "crr/lp.hpp"

#include <ostream>

namespace crr {

std::string lp_e_name(std::size_t i, std::size_t a) {
  return "e_" + std::to_string(i) + "_" + std::to_string(a);
}
std::string lp_p_name(std::size_t a, std::size_t j) {
  return "p_" + std::to_string(a) + "_" + std::to_string(j);
}

IlpModel build_ilp(const CrrInstance& inst) {
  const std::size_t n = inst.n(), m = inst.m();
  IlpModel model;
  model.n = n;
  model.m = m;

  // e variables first, then p, row-major; witnesses follow per 1-cell.
  std::vector<std::vector<std::uint32_t>> e_idx(n, std::vector<std::uint32_t>(m));
  std::vector<std::vector<std::uint32_t>> p_idx(m, std::vector<std::uint32_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < m; ++a) {
      e_idx[i][a] = static_cast<std::uint32_t>(model.variables.size());
      model.variables.push_back(lp_e_name(i, a));
    }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t j = 0; j < n; ++j) {
      p_idx[a][j] = static_cast<std::uint32_t>(model.variables.size());
      model.variables.push_back(lp_p_name(a, j));
    }

  auto cell_tag = [](std::size_t x, std::size_t y) {
    return std::to_string(x) + "_" + std::to_string(y);
  };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!inst.s().get(i, j)) {
        for (std::size_t a = 0; a < m; ++a)
          model.constraints.push_back({"zS_" + cell_tag(i, j) + "_" + std::to_string(a),
                                       {{1, e_idx[i][a]}, {1, p_idx[a][j]}},
                                       '<',
                                       1});
        continue;
      }
      IlpConstraint sum{"wSsum_" + cell_tag(i, j), {}, '>', 1};
      for (std::size_t a = 0; a < m; ++a) {
        const auto w = static_cast<std::uint32_t>(model.variables.size());
        model.variables.push_back("wS_" + cell_tag(i, j) + "_" + std::to_string(a));
        sum.terms.push_back({1, w});
        const std::string tag = cell_tag(i, j) + "_" + std::to_string(a);
        model.constraints.push_back({"wSe_" + tag, {{1, w}, {-1, e_idx[i][a]}}, '<', 0});
        model.constraints.push_back({"wSp_" + tag, {{1, w}, {-1, p_idx[a][j]}}, '<', 0});
        model.constraints.push_back(
            {"wSlb_" + tag, {{1, w}, {-1, e_idx[i][a]}, {-1, p_idx[a][j]}}, '>', -1});
      }
      model.constraints.push_back(std::move(sum));
    }

  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (!inst.r().get(a, b)) {
        for (std::size_t i = 0; i < n; ++i)
          model.constraints.push_back({"zR_" + cell_tag(a, b) + "_" + std::to_string(i),
                                       {{1, p_idx[a][i]}, {1, e_idx[i][b]}},
                                       '<',
                                       1});
        continue;
      }
      IlpConstraint sum{"wRsum_" + cell_tag(a, b), {}, '>', 1};
      for (std::size_t i = 0; i < n; ++i) {
        const auto w = static_cast<std::uint32_t>(model.variables.size());
        model.variables.push_back("wR_" + cell_tag(a, b) + "_" + std::to_string(i));
        sum.terms.push_back({1, w});
        const std::string tag = cell_tag(a, b) + "_" + std::to_string(i);
        model.constraints.push_back({"wRp_" + tag, {{1, w}, {-1, p_idx[a][i]}}, '<', 0});
        model.constraints.push_back({"wRe_" + tag, {{1, w}, {-1, e_idx[i][b]}}, '<', 0});
        model.constraints.push_back(
            {"wRlb_" + tag, {{1, w}, {-1, p_idx[a][i]}, {-1, e_idx[i][b]}}, '>', -1});
      }
      model.constraints.push_back(std::move(sum));
    }

  return model;
}

void write_lp_file(const IlpModel& model, std::ostream& out) {
  out << "\\ CRR feasibility model, " << model.n << " species / " << model.m
      << " reactions\n";
  out << "Minimize\n obj:\nSubject To\n";
  for (const auto& c : model.constraints) {
    // A sum constraint with no terms can only come from a 1-cell with no
    // candidate witnesses; "0 >= 1" is written as an explicitly infeasible row.
    out << ' ' << c.name << ':';
    if (c.terms.empty()) {
      out << " 0 " << (c.sense == '<' ? "<=" : ">=") << ' ' << c.rhs << '\n';
      continue;
    }
    bool first = true;
    for (const auto& [coef, var] : c.terms) {
      if (coef >= 0)
        out << (first ? " " : " + ");
      else
        out << " - ";
      const int mag = coef < 0 ? -coef : coef;
      if (mag != 1) out << mag << ' ';
      out << model.variables[var];
      first = false;
    }
    out << ' ' << (c.sense == '<' ? "<=" : ">=") << ' ' << c.rhs << '\n';
  }
  out << "Binary\n";
  for (const auto& v : model.variables) out << ' ' << v << '\n';
  out << "End\n";
}

IlpModel write_lp(const CrrInstance& inst, std::ostream& out) {
  IlpModel model = build_ilp(inst);
  write_lp_file(model, out);
  return model;
}

}  // namespace crr
