#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "doctest.h"

#include "crr/io.hpp"
#include "test_util.hpp"

// Exit-code and file contract of the command-line front end:
// 0 success, 10 sat, 20 unsat, 30 indetermined, 1 error.

namespace {

namespace fs = std::filesystem;

int run(const std::string& args) {
  const std::string cmd = std::string(CRR_BIN_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string run_capture(const std::string& args) {
  const fs::path out = fs::temp_directory_path() / "crr_cli_capture.txt";
  const std::string cmd =
      std::string(CRR_BIN_PATH) + " " + args + " >" + out.string() + " 2>&1";
  (void)!std::system(cmd.c_str());
  return crr::slurp_file(out.string());
}

fs::path work_dir() {
  const fs::path dir = fs::temp_directory_path() / "crr_cli_test";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("solve exit codes: sat, unsat, indetermined") {
  CHECK(run("solve --in " + crr_test::fixture_path("two_reactions.crr") +
            " --strategy auto") == 10);
  CHECK(run("solve --in " + crr_test::fixture_path("counterexample_unsat.crr")) == 20);

  const fs::path big = work_dir() / "big.crr";
  REQUIRE(run("gen --n 40 --m 40 --p 0.5 --q 0.5 --seed 3 --out " + big.string()) == 0);
  CHECK(run("solve --in " + big.string() + " --timeout 0.001") == 30);
}

TEST_CASE("verify prints OK and distinguishes failure") {
  const std::string out =
      run_capture("verify --instance " + crr_test::fixture_path("two_reactions.crr") +
                  " --solution " + crr_test::fixture_path("two_reactions.sol"));
  CHECK(out == "OK\n");
  CHECK(run("verify --instance " + crr_test::fixture_path("two_reactions.crr") +
            " --solution " + crr_test::fixture_path("two_reactions.sol")) == 0);

  // A wrong (but well-formed) solution is a FAIL, exit 1.
  const fs::path bad = work_dir() / "bad.sol";
  crr::spit_file(bad.string(),
                 "sol 1\nE\n00\n00\n00\n00\n00\n00\nP\n000000\n000000\n");
  CHECK(run("verify --instance " + crr_test::fixture_path("two_reactions.crr") +
            " --solution " + bad.string()) == 1);
}

TEST_CASE("errors exit with 1 and a diagnostic") {
  CHECK(run("solve --in /nonexistent/file.crr") == 1);
  const std::string msg = run_capture("solve --in /nonexistent/file.crr");
  CHECK(msg.find("error:") != std::string::npos);
  CHECK(run("gen --n 3 --m 3 --seed 1") == 1);  // neither --p/--q nor a mode
  CHECK(run("encode --in " + crr_test::fixture_path("two_reactions.crr") +
            " --format nonsense") == 1);
}

TEST_CASE("gen, solve with solution output, verify round trip") {
  const fs::path dir = work_dir();
  const fs::path inst = dir / "sat.crr";
  const fs::path sol = dir / "sat.sol";
  REQUIRE(run("gen --n 6 --m 3 --sat --density 0.4 --seed 17 --out " + inst.string() +
              " --hyper-out " + (dir / "sat.hyper").string()) == 0);
  REQUIRE(run("solve --in " + inst.string() + " --solution " + sol.string()) == 10);
  CHECK(run("verify --instance " + inst.string() + " --solution " + sol.string()) == 0);
  // The emitted hypergraph re-ingests to the same instance.
  const std::string stats =
      run_capture("ingest --in " + (dir / "sat.hyper").string() + " --out " +
                  (dir / "reingested.crr").string());
  CHECK(stats.find("name,n,m,p,q") != std::string::npos);
  const std::string a = crr::slurp_file(inst.string());
  const std::string b = crr::slurp_file((dir / "reingested.crr").string());
  CHECK(a == b);
}

TEST_CASE("reduce forward and extract") {
  const fs::path dir = work_dir();
  const fs::path sb = dir / "basis.sb";
  crr::spit_file(sb.string(), "sb 1\nn 2\nm 3\nk 2\nS\n110\n011\n");
  const fs::path reduced = dir / "reduced.crr";
  REQUIRE(run("reduce --sb " + sb.string() + " --out " + reduced.string()) == 0);
  const fs::path sol = dir / "reduced.sol";
  REQUIRE(run("solve --in " + reduced.string() + " --solution " + sol.string()) == 10);
  const fs::path factors = dir / "factors.sol";
  CHECK(run("reduce --sb " + sb.string() + " --solution " + sol.string() +
            " --extract-out " + factors.string()) == 0);
  std::ifstream fin(factors.string());
  const crr::Reconstruction rec = crr::read_solution(fin);
  CHECK(rec.e.rows() == 2);
  CHECK(rec.p.cols() == 3);
  CHECK(crr::bool_product(rec.e, rec.p) == crr_test::mat({"110", "011"}));
}

TEST_CASE("encode writes the three formats") {
  const fs::path dir = work_dir();
  for (const std::string fmt : {"dimacs", "smt2", "lp"}) {
    const fs::path out = dir / ("enc." + fmt);
    CHECK(run("encode --in " + crr_test::fixture_path("two_reactions.crr") +
              " --format " + fmt + " --out " + out.string()) == 0);
    CHECK(fs::file_size(out) > 0);
  }
  const std::string dimacs =
      run_capture("encode --in " + crr_test::fixture_path("two_reactions.crr") +
                  " --format dimacs --out -");
  CHECK(dimacs.rfind("p cnf ", 0) == 0);
}

TEST_CASE("external strategy falls back to CRR_EXTERNAL_SOLVER") {
  const fs::path dir = work_dir();
  const fs::path mock = dir / "env_mock.sh";
  crr::spit_file(mock.string(), "#!/bin/sh\necho 's SATISFIABLE'\necho 'v -1 -2 0'\n");
  const fs::path inst = dir / "zero.crr";
  crr::spit_file(inst.string(), "crr 1\nn 1\nm 1\nS\n0\nR\n0\n");
  const std::string cmd = "CRR_EXTERNAL_SOLVER='sh " + mock.string() + "' " +
                          std::string(CRR_BIN_PATH) + " solve --strategy external --in " +
                          inst.string() + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 10);
}

TEST_CASE("report consumes sweep output") {
  const fs::path dir = work_dir();
  const fs::path csv = dir / "mini.csv";
  REQUIRE(run("sweep --sizes 3x3 --count 6 --pq uniform --timeout 30 --seed 5 --out " +
              csv.string()) == 0);
  const std::string report = run_capture("report " + csv.string());
  CHECK(report.find("n,m,count,sat,unsat,indet") != std::string::npos);
  CHECK(report.find("3,3,6,") != std::string::npos);
}
