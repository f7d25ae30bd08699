#ifndef CRR_HYPERGRAPH_HPP
#define CRR_HYPERGRAPH_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "crr/bitmatrix.hpp"

namespace crr {

// One reaction: tail = reactant indices, head = product indices. Both are
// sets, kept sorted and duplicate-free. tail and head may overlap (catalysts).
struct Hyperarc {
  std::vector<std::size_t> tail;
  std::vector<std::size_t> head;
};

// Directed hypergraph over named species. Species identity is positional;
// names are metadata. Immutable after construction.
class Hypergraph {
 public:
  Hypergraph(std::vector<std::string> species, std::vector<Hyperarc> arcs,
             std::vector<std::string> arc_names = {});

  std::size_t n_species() const { return species_.size(); }
  std::size_t n_arcs() const { return arcs_.size(); }
  const std::vector<std::string>& species() const { return species_; }
  const std::vector<Hyperarc>& arcs() const { return arcs_; }
  const std::vector<std::string>& arc_names() const { return arc_names_; }

 private:
  std::vector<std::string> species_;
  std::vector<Hyperarc> arcs_;
  std::vector<std::string> arc_names_;
};

// Incidence matrices: E[i][a]=1 iff species i in tail(a); P[a][j]=1 iff
// species j in head(a). E is n x m, P is m x n.
std::pair<BitMatrix, BitMatrix> incidence(const Hypergraph& h);

// Species graph: s[i][j]=1 iff some arc consumes i and produces j. Computed
// straight from the arc sets, not via the incidence product.
BitMatrix derive_s(const Hypergraph& h);

// Reaction graph: r[a][b]=1 iff some species is a product of a and a
// reactant of b.
BitMatrix derive_r(const Hypergraph& h);

// Block matrix [S E; P R] of size (n+m) x (n+m).
struct TotalGraph {
  BitMatrix t;
  std::size_t n = 0;
  std::size_t m = 0;
};

TotalGraph total_graph(const Hypergraph& h);

}  // namespace crr

#endif
