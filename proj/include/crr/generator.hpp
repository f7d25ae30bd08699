#ifndef CRR_GENERATOR_HPP
#define CRR_GENERATOR_HPP

#include <cstdint>
#include <utility>

#include "crr/hypergraph.hpp"
#include "crr/instance.hpp"

namespace crr {

// Parameters for one random (S, R) instance: p and q are the zero fractions
// of S and R.
struct GenSpec {
  std::size_t n = 1;
  std::size_t m = 1;
  double p = 0.0;
  double q = 0.0;
  std::uint64_t seed = 0;
};

// S is n x n with round(p*n^2) zeros at positions chosen uniformly without
// replacement (partial Fisher-Yates over the pinned generator); R analogous.
// Identical spec gives a byte-identical instance on every platform.
CrrInstance gen_instance(const GenSpec& spec);

// Draws p and q uniformly from [0,1], then generates as gen_instance from the
// same stream. meta records the drawn values.
CrrInstance gen_pq_uniform(std::size_t n, std::size_t m, std::uint64_t seed);

// Random hypergraph with m arcs; each species joins a tail/head with
// probability arc_density, empty sides are re-drawn. Returns the derived
// (S, R) plus the witness hypergraph, so the instance is satisfiable by
// construction.
std::pair<CrrInstance, Hypergraph> gen_sat_instance(std::size_t n, std::size_t m,
                                                    double arc_density, std::uint64_t seed);

// round-half-up of p * cells; the pinned zero-count rule.
std::size_t zero_count_for(double p, std::size_t cells);

}  // namespace crr

#endif
