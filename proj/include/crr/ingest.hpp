#ifndef CRR_INGEST_HPP
#define CRR_INGEST_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "crr/hypergraph.hpp"
#include "crr/instance.hpp"
#include "crr/solver.hpp"

namespace crr {

// Hypergraph text format ("hyper 1"):
//   species <id>...            (one or more lines, identifiers unique)
//   reaction <id> : <id>... -> <id>...
// Identifiers are whitespace-free tokens. Stoichiometric multiplicities are
// out of scope; numeric tokens and repeated species within a side are
// rejected.
Hypergraph parse_hypergraph(std::istream& in);
Hypergraph parse_hypergraph(const std::string& text);
void write_hypergraph(const Hypergraph& h, std::ostream& out);

// Size and sparsity parameters of a network's derived instance.
struct NetworkStats {
  std::string name;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t ones_s = 0;
  std::size_t ones_r = 0;
  double p = 0.0;  // zero fraction of S
  double q = 0.0;  // zero fraction of R
};

// Derives (S, R) from the network; the instance is satisfiable by
// construction (its own incidence is a witness).
std::pair<CrrInstance, NetworkStats> instance_from_network(const Hypergraph& h,
                                                           const std::string& source_tag = "");

// CSV table: name,n,m,p,q plus outcome,wall_time_ms columns when solve
// records are supplied (parallel to the stats vector).
std::string stats_report(const std::vector<NetworkStats>& stats,
                         const std::vector<SolveRecord>* solved = nullptr);

}  // namespace crr

#endif
