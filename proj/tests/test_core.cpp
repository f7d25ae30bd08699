#include <sstream>

#include "doctest.h"

#include "crr/generator.hpp"
#include "crr/hypergraph.hpp"
#include "crr/ingest.hpp"
#include "crr/instance.hpp"
#include "crr/io.hpp"
#include "test_util.hpp"

using crr::BitMatrix;
using crr::CrrInstance;
using crr::Hypergraph;
using crr::Reconstruction;
using crr_test::mat;

namespace {

Hypergraph load_hyper(const std::string& name) {
  return crr::parse_hypergraph(crr_test::read_fixture(name));
}

}  // namespace

TEST_CASE("two-reaction network: species and reaction graphs") {
  const Hypergraph h = load_hyper("two_reactions.hyper");
  REQUIRE(h.n_species() == 6);
  REQUIRE(h.n_arcs() == 2);

  const BitMatrix s = crr::derive_s(h);
  CHECK(s == mat({"001100", "001100", "000011", "000000", "000000", "000000"}));

  const BitMatrix r = crr::derive_r(h);
  CHECK(r == mat({"01", "00"}));

  auto [e, p] = crr::incidence(h);
  CHECK(e == mat({"10", "10", "01", "00", "00", "00"}));
  CHECK(p == mat({"001100", "000011"}));

  // S = E.P and R = P.E.
  CHECK(crr::bool_product(e, p) == s);
  CHECK(crr::bool_product(p, e) == r);
}

TEST_CASE("two-reaction network: 8x8 total graph blocks") {
  const Hypergraph h = load_hyper("two_reactions.hyper");
  const crr::TotalGraph tg = crr::total_graph(h);
  REQUIRE(tg.n == 6);
  REQUIRE(tg.m == 2);
  CHECK(tg.t == mat({
            "00110010",
            "00110010",
            "00001101",
            "00000000",
            "00000000",
            "00000000",
            "00110001",
            "00001100",
        }));
}

TEST_CASE("derivation shortcuts equal the incidence products on random hypergraphs") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto [inst, h] = crr::gen_sat_instance(2 + seed % 6, 1 + seed % 4, 0.4, seed);
    auto [e, p] = crr::incidence(h);
    CHECK(crr::bool_product(e, p) == inst.s());
    CHECK(crr::bool_product(p, e) == inst.r());
    CHECK(crr::verify(inst, Reconstruction{e, p}));
  }
}

TEST_CASE("arcless and catalytic corner cases") {
  const Hypergraph arcless({"A", "B", "C"}, {});
  CHECK(crr::derive_s(arcless) == BitMatrix(3, 3));
  CHECK(crr::derive_r(arcless).rows() == 0);
  auto [e, p] = crr::incidence(arcless);
  CHECK(e.rows() == 3);
  CHECK(e.cols() == 0);
  CHECK(p.rows() == 0);
  CHECK(p.cols() == 3);
  CHECK(crr::total_graph(arcless).t == BitMatrix(3, 3));

  const Hypergraph self_loop({"A"}, {{{0}, {0}}});
  CHECK(crr::derive_s(self_loop) == mat({"1"}));
  auto [e1, p1] = crr::incidence(self_loop);
  CHECK(e1 == mat({"1"}));
  CHECK(p1 == mat({"1"}));
}

TEST_CASE("species permutation permutes the total graph blocks") {
  const Hypergraph h = load_hyper("two_reactions.hyper");
  // Reverse the species order and rebuild.
  std::vector<std::string> species(h.species().rbegin(), h.species().rend());
  const std::size_t n = h.n_species();
  std::vector<crr::Hyperarc> arcs;
  for (const auto& arc : h.arcs()) {
    crr::Hyperarc turned;
    for (auto i : arc.tail) turned.tail.push_back(n - 1 - i);
    for (auto j : arc.head) turned.head.push_back(n - 1 - j);
    arcs.push_back(turned);
  }
  const Hypergraph g(species, arcs);
  const BitMatrix s_h = crr::derive_s(h), s_g = crr::derive_s(g);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      CHECK(s_g.get(i, j) == s_h.get(n - 1 - i, n - 1 - j));
  CHECK(crr::derive_r(g) == crr::derive_r(h));
}

TEST_CASE("permutation equivariance: relabeled instances accept relabeled models") {
  crr::Rng rng(4242);
  for (int round = 0; round < 25; ++round) {
    const std::size_t n = 2 + rng.below(4), m = 1 + rng.below(3);
    auto [inst, h] = crr::gen_sat_instance(n, m, 0.45, 5000 + round);
    auto [e, p] = crr::incidence(h);

    // Random species and reaction permutations as index maps.
    std::vector<std::size_t> qperm(n), wperm(m);
    for (std::size_t i = 0; i < n; ++i) qperm[i] = i;
    for (std::size_t a = 0; a < m; ++a) wperm[a] = a;
    for (std::size_t i = n; i > 1; --i)
      std::swap(qperm[i - 1], qperm[rng.below(i)]);
    for (std::size_t a = m; a > 1; --a)
      std::swap(wperm[a - 1], wperm[rng.below(a)]);

    BitMatrix s2(n, n), r2(m, m), e2(n, m), p2(m, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (inst.s().get(i, j)) s2.set(qperm[i], qperm[j], true);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        if (inst.r().get(a, b)) r2.set(wperm[a], wperm[b], true);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t a = 0; a < m; ++a)
        if (e.get(i, a)) e2.set(qperm[i], wperm[a], true);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t j = 0; j < n; ++j)
        if (p.get(a, j)) p2.set(wperm[a], qperm[j], true);

    const CrrInstance relabeled(std::move(s2), std::move(r2));
    CHECK(crr::verify(relabeled, Reconstruction{e2, p2}));
  }
}

TEST_CASE("verify distinguishes false from shape errors") {
  std::istringstream in(crr_test::read_fixture("two_reactions.crr"));
  const CrrInstance inst = crr::read_instance(in);
  std::istringstream sol_in(crr_test::read_fixture("two_reactions.sol"));
  Reconstruction rec = crr::read_solution(sol_in);
  CHECK(crr::verify(inst, rec));

  // Breaking the only witness of s[C][E] flips the verdict.
  Reconstruction broken = rec;
  broken.e.set(2, 1, false);
  CHECK_FALSE(crr::verify(inst, broken));

  Reconstruction misshapen{BitMatrix(6, 3), BitMatrix(3, 6)};
  CHECK_THROWS_AS(crr::verify(inst, misshapen), crr::ShapeError);
}

TEST_CASE("self-instance (S,S) with E=I and P=S always verifies") {
  crr::Rng rng(17);
  for (int round = 0; round < 20; ++round) {
    const std::size_t n = 1 + rng.below(6);
    const BitMatrix s = crr_test::random_matrix(n, n, rng, 0.5);
    const CrrInstance inst(s, s);
    CHECK(crr::verify(inst, Reconstruction{BitMatrix::identity(n), s}));
  }
}

TEST_CASE("ambiguity: both hypergraphs derive the same S and R") {
  const Hypergraph a = load_hyper("ambiguous_a.hyper");
  const Hypergraph b = load_hyper("ambiguous_b.hyper");
  const BitMatrix s_a = crr::derive_s(a), s_b = crr::derive_s(b);
  const BitMatrix r_a = crr::derive_r(a), r_b = crr::derive_r(b);
  CHECK(s_a == s_b);
  CHECK(r_a == r_b);
  CHECK(s_a == mat({"0011", "0011", "0000", "0000"}));
  // Neither network feeds a product back into a reactant: R is empty.
  CHECK(r_a == BitMatrix(2, 2));
  // Yet the hypergraphs differ.
  auto [e_a, p_a] = crr::incidence(a);
  auto [e_b, p_b] = crr::incidence(b);
  CHECK_FALSE(e_a == e_b);
}

TEST_CASE("witnesses of a 1-cell") {
  std::istringstream in(crr_test::read_fixture("two_reactions.crr"));
  const CrrInstance inst = crr::read_instance(in);
  std::istringstream sol_in(crr_test::read_fixture("two_reactions.sol"));
  const Reconstruction rec = crr::read_solution(sol_in);

  // s[B][C] is witnessed by the first reaction only.
  CHECK(crr::witnesses_s(inst, rec, 1, 2) == std::vector<std::size_t>{0});
  // A 0-cell of a verified pair has no witnesses.
  CHECK(crr::witnesses_s(inst, rec, 3, 0).empty());

  // All-ones factors witness every cell with every reaction.
  const CrrInstance ones(BitMatrix::ones(3, 3), BitMatrix::ones(2, 2));
  const Reconstruction all{BitMatrix::ones(3, 2), BitMatrix::ones(2, 3)};
  CHECK(crr::witnesses_s(ones, all, 0, 0) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("hypergraph construction rejects bad input") {
  CHECK_THROWS_AS(Hypergraph({"A", "A"}, {}), crr::ContractError);
  CHECK_THROWS_AS(Hypergraph({"A"}, {{{0, 0}, {0}}}), crr::ContractError);
  CHECK_THROWS_AS(Hypergraph({"A"}, {{{1}, {0}}}), crr::ContractError);
  CHECK_THROWS_AS(CrrInstance(BitMatrix(2, 3), BitMatrix(1, 1)), crr::ShapeError);
}
