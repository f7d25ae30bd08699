#include "crr/generator.hpp"

#include <cmath>
#include <numeric>
#include <vector>

#include "crr/errors.hpp"
#include "crr/rng.hpp"

namespace crr {

std::size_t zero_count_for(double p, std::size_t cells) {
  const double z = std::floor(p * static_cast<double>(cells) + 0.5);
  if (z <= 0.0) return 0;
  if (z >= static_cast<double>(cells)) return cells;
  return static_cast<std::size_t>(z);
}

namespace {

// All-ones matrix with `zeros` cells cleared, positions chosen uniformly
// without replacement via a partial Fisher-Yates shuffle.
BitMatrix random_density_matrix(std::size_t dim, double p, Rng& rng) {
  const std::size_t cells = dim * dim;
  const std::size_t zeros = zero_count_for(p, cells);
  BitMatrix m = BitMatrix::ones(dim, dim);
  std::vector<std::size_t> idx(cells);
  std::iota(idx.begin(), idx.end(), 0);
  for (std::size_t i = 0; i < zeros; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(cells - i));
    std::swap(idx[i], idx[j]);
    m.set(idx[i] / dim, idx[i] % dim, false);
  }
  return m;
}

void check_spec(const GenSpec& spec) {
  if (spec.n < 1 || spec.m < 1) throw ContractError("gen: n and m must be >= 1");
  if (!(spec.p >= 0.0 && spec.p <= 1.0) || !(spec.q >= 0.0 && spec.q <= 1.0))
    throw ContractError("gen: p and q must lie in [0,1]");
}

CrrInstance gen_from_stream(const GenSpec& spec, Rng& rng) {
  BitMatrix s = random_density_matrix(spec.n, spec.p, rng);
  BitMatrix r = random_density_matrix(spec.m, spec.q, rng);
  InstanceMeta meta;
  meta.seed = spec.seed;
  meta.p = spec.p;
  meta.q = spec.q;
  return CrrInstance(std::move(s), std::move(r), std::move(meta));
}

}  // namespace

CrrInstance gen_instance(const GenSpec& spec) {
  check_spec(spec);
  Rng rng(spec.seed);
  return gen_from_stream(spec, rng);
}

CrrInstance gen_pq_uniform(std::size_t n, std::size_t m, std::uint64_t seed) {
  Rng rng(seed);
  GenSpec spec;
  spec.n = n;
  spec.m = m;
  spec.p = rng.uniform01();
  spec.q = rng.uniform01();
  spec.seed = seed;
  check_spec(spec);
  return gen_from_stream(spec, rng);
}

std::pair<CrrInstance, Hypergraph> gen_sat_instance(std::size_t n, std::size_t m,
                                                    double arc_density, std::uint64_t seed) {
  if (!(arc_density > 0.0 && arc_density <= 1.0))
    throw ContractError("gen_sat_instance: arc_density must lie in (0,1]");
  if (n < 1 || m < 1) throw ContractError("gen_sat_instance: n and m must be >= 1");
  Rng rng(seed);
  auto draw_side = [&]() {
    std::vector<std::size_t> side;
    do {
      side.clear();
      for (std::size_t i = 0; i < n; ++i)
        if (rng.coin(arc_density)) side.push_back(i);
    } while (side.empty());
    return side;
  };
  std::vector<Hyperarc> arcs(m);
  for (std::size_t a = 0; a < m; ++a) {
    arcs[a].tail = draw_side();
    arcs[a].head = draw_side();
  }
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = "v" + std::to_string(i + 1);
  Hypergraph h(std::move(names), std::move(arcs));
  InstanceMeta meta;
  meta.seed = seed;
  meta.source = "gen_sat";
  CrrInstance inst(derive_s(h), derive_r(h), std::move(meta));
  inst.meta().p = inst.s().zero_fraction();
  inst.meta().q = inst.r().zero_fraction();
  return {std::move(inst), std::move(h)};
}

}  // namespace crr
