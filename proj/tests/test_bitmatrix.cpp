#include "doctest.h"

#include "crr/bitmatrix.hpp"
#include "crr/rng.hpp"
#include "test_util.hpp"

using crr::BitMatrix;
using crr_test::mat;

TEST_CASE("identity product leaves any 2x2 matrix unchanged") {
  const BitMatrix id = BitMatrix::identity(2);
  for (unsigned bits = 0; bits < 16; ++bits) {
    BitMatrix m(2, 2);
    for (std::size_t c = 0; c < 4; ++c)
      if ((bits >> c) & 1) m.set(c / 2, c % 2, true);
    CHECK(crr::bool_product(id, m) == m);
    CHECK(crr::bool_product(m, id) == m);
  }
}

TEST_CASE("all-ones product saturates") {
  const BitMatrix ones = BitMatrix::ones(3, 3);
  CHECK(crr::bool_product(ones, ones) == ones);
  // Saturation is stable under repeated multiplication.
  BitMatrix acc = ones;
  for (int i = 0; i < 4; ++i) acc = crr::bool_product(acc, ones);
  CHECK(acc == ones);
}

TEST_CASE("random products match the naive triple loop") {
  crr::Rng rng(101);
  for (int round = 0; round < 40; ++round) {
    const std::size_t n = 1 + rng.below(9);
    const std::size_t k = 1 + rng.below(9);
    const std::size_t m = 1 + rng.below(9);
    const BitMatrix a = crr_test::random_matrix(n, k, rng, 0.4);
    const BitMatrix b = crr_test::random_matrix(k, m, rng, 0.4);
    const BitMatrix expect = crr_test::naive_product(a, b);
    CHECK(crr::bool_product(a, b) == expect);
    CHECK(crr::bool_product_serial(a, b) == expect);
  }
}

TEST_CASE("saturation on random 5x5: once all-ones, stays all-ones") {
  crr::Rng rng(7);
  const BitMatrix ones = BitMatrix::ones(5, 5);
  for (int round = 0; round < 10; ++round) {
    const BitMatrix a = crr_test::random_matrix(5, 5, rng, 0.6);
    const BitMatrix sat = crr::bool_product(a, ones);
    const BitMatrix sat2 = crr::bool_product(sat, ones);
    CHECK(sat2 == sat);
  }
}

TEST_CASE("parallel kernel agrees with the serial reference on wide matrices") {
  crr::Rng rng(55);
  const BitMatrix a = crr_test::random_matrix(300, 500, rng, 0.1);
  const BitMatrix b = crr_test::random_matrix(500, 400, rng, 0.1);
  CHECK(crr::bool_product(a, b) == crr::bool_product_serial(a, b));
}

TEST_CASE("zero-dimension products are defined") {
  const BitMatrix a(3, 0), b(0, 4);
  const BitMatrix prod = crr::bool_product(a, b);
  CHECK(prod.rows() == 3);
  CHECK(prod.cols() == 4);
  CHECK(prod.count_ones() == 0);
  const BitMatrix empty = crr::bool_product(b, BitMatrix(4, 0));
  CHECK(empty.rows() == 0);
  CHECK(empty.cols() == 0);
}

TEST_CASE("shape mismatch raises ShapeError") {
  CHECK_THROWS_AS(crr::bool_product(BitMatrix(2, 3), BitMatrix(2, 3)), crr::ShapeError);
}

TEST_CASE("counting and cell access across word boundaries") {
  BitMatrix m(2, 130);
  m.set(0, 0, true);
  m.set(0, 64, true);
  m.set(0, 129, true);
  m.set(1, 65, true);
  CHECK(m.count_ones() == 4);
  CHECK(m.count_zeros() == 2 * 130 - 4);
  CHECK(m.get(0, 129));
  m.set(0, 129, false);
  CHECK(m.count_ones() == 3);
  CHECK(mat({"10", "01"}) == BitMatrix::identity(2));
  CHECK(BitMatrix::ones(3, 3).zero_fraction() == doctest::Approx(0.0));
  CHECK(BitMatrix(3, 3).zero_fraction() == doctest::Approx(1.0));
}
