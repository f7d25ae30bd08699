#include "doctest.h"

#include "crr/generator.hpp"
#include "crr/reduction.hpp"
#include "crr/solver.hpp"
#include "test_util.hpp"

using crr::BitMatrix;
using crr::CrrInstance;
using crr::Outcome;
using crr::Reconstruction;
using crr::SbInstance;
using crr_test::mat;

TEST_CASE("bordered template for the 1x1 matrix") {
  auto [sbar, kbar] = crr::sb_to_sbmod({mat({"1"}), 1});
  CHECK(kbar == 3);
  CHECK(sbar == mat({"111", "100", "101"}));
}

TEST_CASE("border pattern is independent of the embedded content") {
  crr::Rng rng(5);
  for (int round = 0; round < 10; ++round) {
    const BitMatrix s = crr_test::random_matrix(3, 3, rng, 0.5);
    auto [sbar, kbar] = crr::sb_to_sbmod({s, 2});
    CHECK(kbar == 4);
    for (std::size_t j = 0; j < 5; ++j) CHECK(sbar.get(0, j));
    for (std::size_t i = 0; i < 5; ++i) CHECK(sbar.get(i, 0));
    for (std::size_t j = 1; j < 5; ++j) CHECK_FALSE(sbar.get(1, j));
    for (std::size_t i = 1; i < 5; ++i) CHECK_FALSE(sbar.get(i, 1));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        CHECK(sbar.get(i + 2, j + 2) == s.get(i, j));
  }
}

TEST_CASE("square padding") {
  CHECK(crr::square_pad(mat({"110", "011"})) == mat({"110", "011", "000"}));
  const BitMatrix sq = mat({"10", "01"});
  CHECK(crr::square_pad(sq) == sq);
  CHECK(crr::square_pad(mat({"1", "0", "1"})) == mat({"100", "000", "100"}));
}

TEST_CASE("padding preserves Set Basis solvability") {
  crr::Rng rng(21);
  for (int round = 0; round < 100; ++round) {
    const std::size_t n = 1 + rng.below(3), m = 1 + rng.below(4);
    const SbInstance sb{crr_test::random_matrix(n, m, rng, 0.5),
                        1 + rng.below(std::min<std::size_t>(n, 3))};
    const SbInstance padded{crr::square_pad(sb.s), sb.k};
    CHECK(crr::sb_brute_force(sb) == crr::sb_brute_force(padded));
  }
}

TEST_CASE("reduced instance: R is all-ones and sizes are exact") {
  const SbInstance sb{mat({"110", "011"}), 2};
  const CrrInstance inst = crr::reduce_sb_to_crr(sb);
  CHECK(inst.n() == 5);  // max(2,3) + 2
  CHECK(inst.m() == 4);  // k + 2
  CHECK(inst.r() == BitMatrix::ones(4, 4));
  CHECK_THROWS_AS(crr::sbmod_to_crr(mat({"10", "01", "00"}), 3), crr::ShapeError);
}

TEST_CASE("end-to-end: trivial solvable and unsolvable reductions") {
  // SB [[1]] with k=1 is solvable, and so is its reduction.
  CHECK(crr::sb_brute_force({mat({"1"}), 1}));
  CHECK(crr::solve(crr::reduce_sb_to_crr({mat({"1"}), 1})).outcome == Outcome::sat);

  // Three pairwise-incomparable rows cannot be built from one basis set.
  const SbInstance hard{mat({"110", "011", "101"}), 1};
  CHECK_FALSE(crr::sb_brute_force(hard));
  CHECK(crr::solve(crr::reduce_sb_to_crr(hard)).outcome == Outcome::unsat);
}

TEST_CASE("reduction soundness and completeness on random 3x3 instances") {
  std::size_t solvable = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    crr::Rng rng(seed);
    const std::size_t n = 1 + rng.below(3), m = 1 + rng.below(3);
    const SbInstance sb{crr_test::random_matrix(n, m, rng, 0.45),
                        1 + rng.below(std::min<std::size_t>(n, 3))};
    const bool sb_solvable = crr::sb_brute_force(sb);
    const CrrInstance reduced = crr::reduce_sb_to_crr(sb);
    const Outcome crr_outcome = crr::solve(reduced).outcome;
    REQUIRE(crr_outcome == (sb_solvable ? Outcome::sat : Outcome::unsat));
    if (sb_solvable) ++solvable;
  }
  CHECK(solvable > 50);
  CHECK(solvable < 200);
}

TEST_CASE("embedding verifies against the reduced instance") {
  // Identity factorization of [[1]].
  const Reconstruction triv = crr::embed_sb_solution(mat({"1"}), mat({"1"}));
  CHECK(crr::verify(crr::reduce_sb_to_crr({mat({"1"}), 1}), triv));

  // Random verified factorizations embed into verifying models.
  crr::Rng rng(99);
  for (int round = 0; round < 60; ++round) {
    const std::size_t n = 1 + rng.below(3), k = 1 + rng.below(n);
    const BitMatrix e = crr_test::random_matrix(n, k, rng, 0.5);
    const BitMatrix p = crr_test::random_matrix(k, n, rng, 0.5);
    const BitMatrix s = crr::bool_product(e, p);
    const Reconstruction emb = crr::embed_sb_solution(e, p);
    CHECK(crr::verify(crr::reduce_sb_to_crr({s, k}), emb));
  }
}

TEST_CASE("a zero column in P still embeds correctly") {
  // The second basis row is unused and empty; the bordered product must
  // nevertheless reproduce the all-ones first row.
  const BitMatrix e = mat({"10", "10"});
  const BitMatrix p = mat({"11", "00"});
  const BitMatrix s = crr::bool_product(e, p);
  const Reconstruction emb = crr::embed_sb_solution(e, p);
  CHECK(crr::verify(crr::reduce_sb_to_crr({s, 2}), emb));
}

TEST_CASE("extract recovers the embedded factors exactly") {
  crr::Rng rng(1234);
  for (int round = 0; round < 60; ++round) {
    const std::size_t n = 1 + rng.below(3), k = 1 + rng.below(n);
    const BitMatrix e = crr_test::random_matrix(n, k, rng, 0.5);
    const BitMatrix p = crr_test::random_matrix(k, n, rng, 0.5);
    const Reconstruction emb = crr::embed_sb_solution(e, p);
    auto [e_out, p_out] = crr::extract_sb_solution(emb);
    CHECK(e_out == e);
    CHECK(p_out == p);
  }
}

TEST_CASE("extraction ignores the unspecified border cells") {
  const BitMatrix e = mat({"10", "11"});
  const BitMatrix p = mat({"01", "10"});
  Reconstruction emb = crr::embed_sb_solution(e, p);
  // Flip the cells the bordered shape leaves open: first-column entries of
  // E below row 1, and row-1/column-1 interior entries of P.
  emb.e.set(2, 0, false);
  emb.p.set(1, 2, false);
  emb.p.set(3, 1, true);
  auto [e_out, p_out] = crr::extract_sb_solution(emb);
  CHECK(e_out == e);
  CHECK(p_out == p);
}

TEST_CASE("extraction from arbitrary solver models of reduced instances") {
  std::size_t extracted = 0;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    crr::Rng rng(5000 + seed);
    const std::size_t n = 1 + rng.below(2), m = 1 + rng.below(2);
    const SbInstance sb{crr_test::random_matrix(n, m, rng, 0.5),
                        1 + rng.below(std::min<std::size_t>(n, 2))};
    const CrrInstance reduced = crr::reduce_sb_to_crr(sb);
    const crr::SolveRecord rec = crr::solve(reduced);
    if (rec.outcome != Outcome::sat) continue;
    auto [e_sq, p_sq] = crr::extract_sb_solution(*rec.model);
    CHECK(crr::bool_product(e_sq, p_sq) == crr::square_pad(sb.s));
    auto [e, p] = crr::unpad_sb_factors(e_sq, p_sq, sb.s.rows(), sb.s.cols());
    CHECK(crr::bool_product(e, p) == sb.s);
    ++extracted;
  }
  CHECK(extracted > 40);
}

TEST_CASE("closure-based oracle matches full enumeration above the cutoff") {
  crr::Rng rng(777);
  for (int round = 0; round < 40; ++round) {
    // m*k in (16, 24]: the dispatcher uses the closure path, the reference
    // enumerates.
    const std::size_t n = 3 + rng.below(2);
    const std::size_t m = 6;
    const std::size_t k = 3;
    const SbInstance sb{crr_test::random_matrix(n, m, rng, 0.4), k};
    const bool closure = crr::sb_brute_force(sb);
    const bool full = crr::sb_enumerate_solution(sb).has_value();
    CHECK(closure == full);
  }
}

TEST_CASE("sb contract checks") {
  CHECK_THROWS_AS(crr::sb_brute_force({mat({"1"}), 0}), crr::ContractError);
  CHECK_THROWS_AS(crr::sb_brute_force({mat({"1"}), 2}), crr::ContractError);
  CHECK_THROWS_AS(crr::embed_sb_solution(mat({"10"}), mat({"10"})), crr::ContractError);
}
