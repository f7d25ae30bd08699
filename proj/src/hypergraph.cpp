#include "crr/hypergraph.hpp"

#include <algorithm>
#include <unordered_set>

#include "crr/errors.hpp"

namespace crr {

namespace {

void normalize_side(std::vector<std::size_t>& side, std::size_t n_species,
                    const char* what, std::size_t arc_idx) {
  std::sort(side.begin(), side.end());
  if (std::adjacent_find(side.begin(), side.end()) != side.end())
    throw ContractError(std::string("duplicate species index in ") + what + " of arc " +
                        std::to_string(arc_idx));
  if (!side.empty() && side.back() >= n_species)
    throw ContractError(std::string("species index out of range in ") + what + " of arc " +
                        std::to_string(arc_idx));
}

}  // namespace

Hypergraph::Hypergraph(std::vector<std::string> species, std::vector<Hyperarc> arcs,
                       std::vector<std::string> arc_names)
    : species_(std::move(species)), arcs_(std::move(arcs)), arc_names_(std::move(arc_names)) {
  std::unordered_set<std::string> seen;
  for (const auto& name : species_)
    if (!seen.insert(name).second)
      throw ContractError("duplicate species identifier: " + name);
  for (std::size_t a = 0; a < arcs_.size(); ++a) {
    normalize_side(arcs_[a].tail, species_.size(), "tail", a);
    normalize_side(arcs_[a].head, species_.size(), "head", a);
  }
  if (arc_names_.empty()) {
    arc_names_.reserve(arcs_.size());
    for (std::size_t a = 0; a < arcs_.size(); ++a)
      arc_names_.push_back("R" + std::to_string(a + 1));
  } else if (arc_names_.size() != arcs_.size()) {
    throw ContractError("arc name count does not match arc count");
  }
}

std::pair<BitMatrix, BitMatrix> incidence(const Hypergraph& h) {
  const std::size_t n = h.n_species();
  const std::size_t m = h.n_arcs();
  BitMatrix e(n, m);
  BitMatrix p(m, n);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t i : h.arcs()[a].tail) e.set(i, a, true);
    for (std::size_t j : h.arcs()[a].head) p.set(a, j, true);
  }
  return {std::move(e), std::move(p)};
}

BitMatrix derive_s(const Hypergraph& h) {
  BitMatrix s(h.n_species(), h.n_species());
  for (const Hyperarc& arc : h.arcs())
    for (std::size_t i : arc.tail)
      for (std::size_t j : arc.head) s.set(i, j, true);
  return s;
}

BitMatrix derive_r(const Hypergraph& h) {
  const std::size_t m = h.n_arcs();
  BitMatrix r(m, m);
  // Membership bitvectors per arc, then r[a][b]=1 iff head(a) meets tail(b).
  const std::size_t words = BitMatrix::words_for(h.n_species());
  std::vector<std::uint64_t> heads(m * words, 0), tails(m * words, 0);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t j : h.arcs()[a].head) heads[a * words + (j >> 6)] |= 1ULL << (j & 63);
    for (std::size_t i : h.arcs()[a].tail) tails[a * words + (i >> 6)] |= 1ULL << (i & 63);
  }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t w = 0; w < words; ++w)
        if (heads[a * words + w] & tails[b * words + w]) {
          r.set(a, b, true);
          break;
        }
  return r;
}

TotalGraph total_graph(const Hypergraph& h) {
  const std::size_t n = h.n_species();
  const std::size_t m = h.n_arcs();
  const BitMatrix s = derive_s(h);
  const BitMatrix r = derive_r(h);
  auto [e, p] = incidence(h);
  TotalGraph tg;
  tg.n = n;
  tg.m = m;
  tg.t = BitMatrix(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (s.get(i, j)) tg.t.set(i, j, true);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < m; ++a)
      if (e.get(i, a)) tg.t.set(i, n + a, true);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t j = 0; j < n; ++j)
      if (p.get(a, j)) tg.t.set(n + a, j, true);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (r.get(a, b)) tg.t.set(n + a, n + b, true);
  return tg;
}

}  // namespace crr
