#include <sstream>

#include "doctest.h"

#include "crr/ingest.hpp"
#include "crr/io.hpp"
#include "crr/solver.hpp"
#include "test_util.hpp"

using crr::Hypergraph;
using crr::NetworkStats;
using crr_test::mat;

TEST_CASE("parsing the two-reaction network") {
  const Hypergraph h = crr::parse_hypergraph(crr_test::read_fixture("two_reactions.hyper"));
  CHECK(h.n_species() == 6);
  CHECK(h.n_arcs() == 2);
  CHECK(h.species()[0] == "A");
  CHECK(h.arc_names()[1] == "R2");
  CHECK(h.arcs()[0].tail == std::vector<std::size_t>{0, 1});
  CHECK(h.arcs()[0].head == std::vector<std::size_t>{2, 3});
}

TEST_CASE("catalytic reactions are accepted") {
  const Hypergraph h = crr::parse_hypergraph(
      "hyper 1\nspecies A\nreaction R : A -> A\n");
  CHECK(h.n_arcs() == 1);
  CHECK(crr::derive_s(h) == mat({"1"}));
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(
      crr::parse_hypergraph("hyper 1\nspecies A B\nreaction R : A -> X\n"),
      doctest::Contains("line 3"), crr::ParseError);
  CHECK_THROWS_WITH_AS(crr::parse_hypergraph("hyper 1\nspecies A A\n"),
                       doctest::Contains("duplicate species"), crr::ParseError);
  CHECK_THROWS_AS(crr::parse_hypergraph("species A\n"), crr::ParseError);
  CHECK_THROWS_WITH_AS(
      crr::parse_hypergraph("hyper 1\nspecies A B\nreaction R : -> B\n"),
      doctest::Contains("empty tail"), crr::ParseError);
}

TEST_CASE("multiplicities are rejected with a pointer to the scope rule") {
  CHECK_THROWS_WITH_AS(
      crr::parse_hypergraph("hyper 1\nspecies A B\nreaction R : 2 A -> B\n"),
      doctest::Contains("multiplicit"), crr::ParseError);
  CHECK_THROWS_WITH_AS(
      crr::parse_hypergraph("hyper 1\nspecies A B\nreaction R : A A -> B\n"),
      doctest::Contains("multiplicit"), crr::ParseError);
}

TEST_CASE("hypergraph writer round trips") {
  const Hypergraph h = crr::parse_hypergraph(crr_test::read_fixture("two_reactions.hyper"));
  std::ostringstream out;
  crr::write_hypergraph(h, out);
  const Hypergraph back = crr::parse_hypergraph(out.str());
  CHECK(back.species() == h.species());
  CHECK(back.arcs()[0].tail == h.arcs()[0].tail);
  CHECK(back.arcs()[1].head == h.arcs()[1].head);
}

TEST_CASE("derived instance and sparsity stats of the demo network") {
  const Hypergraph h = crr::parse_hypergraph(crr_test::read_fixture("two_reactions.hyper"));
  auto [inst, stats] = crr::instance_from_network(h, "demo");
  CHECK(stats.n == 6);
  CHECK(stats.m == 2);
  CHECK(stats.ones_s == 6);
  CHECK(stats.ones_r == 1);
  CHECK(stats.p == doctest::Approx(1.0 - 6.0 / 36.0));
  CHECK(stats.q == doctest::Approx(0.75));
  CHECK(inst.meta().source == "demo");

  // Stats identity against the instance.
  CHECK(std::abs(stats.p - inst.s().zero_fraction()) < 1e-9);
  CHECK(std::abs(stats.q - inst.r().zero_fraction()) < 1e-9);
}

TEST_CASE("every ingested network derives a satisfiable instance") {
  for (const char* name : {"two_reactions.hyper", "ambiguous_a.hyper", "ambiguous_b.hyper", "counterexample.hyper"}) {
    const Hypergraph h = crr::parse_hypergraph(crr_test::read_fixture(name));
    auto [inst, stats] = crr::instance_from_network(h, name);
    auto [e, p] = crr::incidence(h);
    CHECK(crr::verify(inst, crr::Reconstruction{e, p}));
    crr::SolveOptions opts;
    opts.timeout = std::chrono::duration<double>(60.0);
    CHECK(crr::solve(inst, opts).outcome == crr::Outcome::sat);
  }
}

TEST_CASE("the counterexample network derives the bundled counterexample instance") {
  const Hypergraph h = crr::parse_hypergraph(crr_test::read_fixture("counterexample.hyper"));
  auto [inst, stats] = crr::instance_from_network(h, "counterexample");
  std::istringstream fix(crr_test::read_fixture("counterexample_sat.crr"));
  const crr::CrrInstance expect = crr::read_instance(fix);
  CHECK(inst.s() == expect.s());
  CHECK(inst.r() == expect.r());
}

TEST_CASE("stats report layout") {
  CHECK(crr::stats_report({}) == "name,n,m,p,q\n");

  const Hypergraph h = crr::parse_hypergraph(crr_test::read_fixture("two_reactions.hyper"));
  auto [inst, stats] = crr::instance_from_network(h, "demo");
  const std::string csv = crr::stats_report({stats});
  CHECK(csv.find("demo,6,2,0.833333,0.750000\n") != std::string::npos);

  NetworkStats second = stats;
  second.name = "other";
  const std::string two = crr::stats_report({stats, second});
  CHECK(two.find("demo") < two.find("other"));

  std::vector<crr::SolveRecord> solved(1);
  solved[0].outcome = crr::Outcome::sat;
  solved[0].wall_ms = 12.4;
  const std::string with_solve = crr::stats_report({stats}, &solved);
  CHECK(with_solve.find("outcome,wall_time_ms") != std::string::npos);
  CHECK(with_solve.find(",sat,12\n") != std::string::npos);
}
