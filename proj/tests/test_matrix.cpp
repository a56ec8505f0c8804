#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <random>

#include "mubh/matrix.hpp"
#include "mubh/rational.hpp"

using namespace mubh;

namespace {

// Independent reference: plain triple loop on int entries.
IntMatrix naive_mul(const IntMatrix& a, const IntMatrix& b) {
  REQUIRE(a.cols() == b.rows());
  IntMatrix r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      std::int64_t s = 0;
      for (int k = 0; k < a.cols(); ++k) s += a.get(i, k) * b.get(k, j);
      r.at(i, j) = s;
    }
  return r;
}

SignMatrix random_sign(std::mt19937& rng, int rows, int cols) {
  std::uniform_int_distribution<int> dist(-1, 1);
  SignMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.set(i, j, dist(rng));
  return m;
}

BinMatrix random_bin(std::mt19937& rng, int rows, int cols) {
  std::uniform_int_distribution<int> dist(0, 1);
  BinMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.set(i, j, dist(rng));
  return m;
}

IntMatrix random_int(std::mt19937& rng, int rows, int cols, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = dist(rng);
  return m;
}

}  // namespace

TEST_CASE("rational arithmetic is exact") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(Rational(-4, -8) == Rational(1, 2));
  CHECK(Rational(4, -8) == Rational(-1, 2));
  CHECK(Rational(7, 1).str() == "7");
  CHECK(Rational(-1, 3).str() == "-1/3");

  // two association orders agree
  Rational c(5, 7);
  CHECK((a + b) + c == a + (b + c));
  CHECK((a * b) * c == a * (b * c));
}

TEST_CASE("rational overflow is an error, not a wrap") {
  Rational big(INT64_MAX / 2, 1);
  CHECK_THROWS_AS(big * Rational(8), std::overflow_error);
  CHECK_THROWS_AS(big + big + big, std::overflow_error);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
}

TEST_CASE("packed multiply equals the naive loop on random inputs") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> dim(1, 64);
    int r = dim(rng), inner = dim(rng), c = dim(rng);
    SignMatrix a = random_sign(rng, r, inner);
    SignMatrix b = random_sign(rng, inner, c);
    REQUIRE(mul(a, b) == naive_mul(to_int(a), to_int(b)));
  }
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<int> dim(1, 64);
    int r = dim(rng), inner = dim(rng), c = dim(rng);
    BinMatrix a = random_bin(rng, r, inner);
    BinMatrix b = random_bin(rng, inner, c);
    REQUIRE(mul(a, b) == naive_mul(to_int(a), to_int(b)));
    SignMatrix s = random_sign(rng, inner, c);
    REQUIRE(mul(a, s) == naive_mul(to_int(a), to_int(s)));
  }
}

TEST_CASE("identity and Sylvester order-2 products") {
  SignMatrix i2 = SignMatrix::identity(2);
  CHECK(mul(i2, i2) == IntMatrix::identity(2));

  SignMatrix h2 = SignMatrix::from_rows({{1, 1}, {1, -1}});
  IntMatrix want = IntMatrix::from_rows({{2, 0}, {0, 2}});
  CHECK(mul(h2, transpose(h2)) == want);
}

TEST_CASE("integer matrix multiply checks for overflow") {
  IntMatrix a(1, 1), b(1, 1);
  a.at(0, 0) = INT64_MAX / 2;
  b.at(0, 0) = 4;
  CHECK_THROWS_AS(mul(a, b), std::overflow_error);
  CHECK_THROWS_AS(mul(IntMatrix::identity(2), IntMatrix::identity(3)), std::invalid_argument);
}

TEST_CASE("kronecker layout and mixed-product rule") {
  BinMatrix i2 = BinMatrix::identity(2);
  BinMatrix j2 = BinMatrix::ones(2, 2);
  BinMatrix k = kronecker(i2, j2);
  // block-diagonal of two all-ones blocks
  BinMatrix want(4, 4);
  for (int b = 0; b < 2; ++b)
    for (int p = 0; p < 2; ++p)
      for (int q = 0; q < 2; ++q) want.set(2 * b + p, 2 * b + q, 1);
  CHECK(k == want);

  BinMatrix j_minus_i = BinMatrix::from_rows({{0, 1}, {1, 0}});
  BinMatrix k2 = kronecker(j_minus_i, i2);
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q) {
      CHECK(k2.get(p, q) == 0);
      CHECK(k2.get(p, 2 + q) == (p == q ? 1 : 0));
      CHECK(k2.get(2 + p, q) == (p == q ? 1 : 0));
      CHECK(k2.get(2 + p, 2 + q) == 0);
    }

  // A_2 for n=1, m=1: I_2 (x) (J_2 - I_2) (x) J_2 has row sums 2n(2n-1) = 2
  BinMatrix a2 = kronecker(kronecker(i2, j_minus_i), j2);
  for (int r = 0; r < a2.rows(); ++r) CHECK(a2.row_sum(r) == 2);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    IntMatrix a = random_int(rng, 3, 2, -3, 3), b = random_int(rng, 2, 4, -3, 3);
    IntMatrix c = random_int(rng, 2, 3, -3, 3), d = random_int(rng, 4, 2, -3, 3);
    CHECK(mul(kronecker(a, b), kronecker(c, d)) == kronecker(mul(a, c), mul(b, d)));
  }
}

TEST_CASE("entrywise product of rational matrices") {
  RatMatrix j(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) j.at(i, k) = Rational(1);
  CHECK(entrywise_mul(j, j) == j);

  // E0 o E0 = (1/v^2) J for E0 = J/v
  RatMatrix e0 = scalar_mul(Rational(1, 3), j);
  RatMatrix want = scalar_mul(Rational(1, 9), j);
  CHECK(entrywise_mul(e0, e0) == want);
  CHECK(trace(e0) == Rational(1));

  RatMatrix wrong(2, 3);
  CHECK_THROWS_AS(entrywise_mul(j, wrong), std::invalid_argument);
}

TEST_CASE("block extraction and transpose round-trip") {
  IntMatrix i4 = IntMatrix::identity(4);
  IntMatrix z = block(i4, 2, 2, 0, 1);
  CHECK(z == IntMatrix(2, 2));

  std::mt19937 rng(11);
  SignMatrix s = random_sign(rng, 6, 4);
  CHECK(transpose(transpose(s)) == s);
  IntMatrix m = random_int(rng, 6, 6, -5, 5);
  CHECK(transpose(transpose(m)) == m);
  CHECK_THROWS_AS(block(m, 4, 4, 0, 0), std::invalid_argument);
}
