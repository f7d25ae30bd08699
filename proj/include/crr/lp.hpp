#ifndef CRR_LP_HPP
#define CRR_LP_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "crr/instance.hpp"

namespace crr {

// One linear constraint over binary variables: sum(coef * var) sense rhs.
struct IlpConstraint {
  std::string name;
  std::vector<std::pair<int, std::uint32_t>> terms;  // (coefficient, variable index)
  char sense = '<';                                  // '<' means <=, '>' means >=
  int rhs = 0;
};

// The linearized 0/1 program: e/p variables plus witness variables for the
// 1-cells of S and R. The objective is the constant 0 (feasibility only).
struct IlpModel {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<std::string> variables;  // all binary
  std::vector<IlpConstraint> constraints;

  std::size_t num_variables() const { return variables.size(); }
};

IlpModel build_ilp(const CrrInstance& inst);

// CPLEX-style LP file: comment header, Minimize, Subject To, Binary, End.
void write_lp_file(const IlpModel& model, std::ostream& out);

// Convenience: build and write, returning the model.
IlpModel write_lp(const CrrInstance& inst, std::ostream& out);

// Variable names used in LP files; the external-solver bridge decodes models
// by these names.
std::string lp_e_name(std::size_t i, std::size_t a);
std::string lp_p_name(std::size_t a, std::size_t j);

}  // namespace crr

#endif
