#include <catch2/catch_amalgamated.hpp>

#include "mubh/hadamard.hpp"

using namespace mubh;

TEST_CASE("sylvester construction") {
  CHECK(sylvester(0).order() == 1);
  CHECK(sylvester(0).body().get(0, 0) == 1);

  HadamardMatrix h2 = sylvester(1);
  CHECK(h2.body() == SignMatrix::from_rows({{1, 1}, {1, -1}}));

  HadamardMatrix h4 = sylvester(2);
  std::vector<std::int64_t> sums;
  for (int r = 0; r < 4; ++r) sums.push_back(h4.body().row_sum(r));
  CHECK(sums == std::vector<std::int64_t>{4, 0, 0, 0});
}

TEST_CASE("hadamard constructor rejects non-orthogonal rows") {
  CHECK_THROWS_AS(HadamardMatrix(SignMatrix::from_rows({{1, 1}, {1, 1}})), std::invalid_argument);
  SignMatrix with_zero(2, 2);
  with_zero.set(0, 0, 1);
  with_zero.set(0, 1, 1);
  with_zero.set(1, 0, 1);
  CHECK_THROWS_AS(HadamardMatrix(std::move(with_zero)), std::invalid_argument);
}

TEST_CASE("regularity predicate") {
  CHECK_FALSE(is_regular(sylvester(1)));  // row sums 2 and 0
  auto fam = build_mubh(2, 1);
  CHECK(is_regular(fam[0]));
  CHECK(fam[0].body().row_sum(0) == 4);
}

TEST_CASE("bush type predicate") {
  HadamardMatrix bush = HadamardMatrix(SignMatrix::from_rows({{1, 1, 1, -1},
                                                              {1, 1, -1, 1},
                                                              {1, -1, 1, 1},
                                                              {-1, 1, 1, 1}}));
  CHECK(is_bush_type(bush));
  CHECK_FALSE(is_bush_type(sylvester(2)));  // diagonal blocks not all ones
  CHECK_THROWS_AS(is_bush_type(sylvester(3)), std::invalid_argument);  // order 8 not 4n^2
}

TEST_CASE("unbiased witness") {
  auto fam = build_mubh(2, 3);
  REQUIRE(fam.size() == 3);
  CHECK_FALSE(unbiased_witness(fam[0], fam[0]).has_value());  // H K^t = N I fails
  for (std::size_t a = 0; a < fam.size(); ++a)
    for (std::size_t b = a + 1; b < fam.size(); ++b) {
      auto l = unbiased_witness(fam[a], fam[b]);
      REQUIRE(l.has_value());
      CHECK(bush_product_check(fam[a], fam[b]));
    }
  // all entries of H_1 H_2^t are +-4
  IntMatrix p = mul(fam[0].body(), transpose(fam[1].body()));
  for (int i = 0; i < p.rows(); ++i)
    for (int j = 0; j < p.cols(); ++j) CHECK(std::abs(p.get(i, j)) == 4);

  CHECK_THROWS_AS(bush_product_check(fam[0], fam[0]), std::invalid_argument);
}

TEST_CASE("families of every admissible size") {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {2, 3}, {4, 7}}) {
    auto fam = build_mubh(n, m);
    REQUIRE(static_cast<int>(fam.size()) == m);
    for (const auto& h : fam) {
      CHECK(h.order() == 4 * n * n);
      CHECK(is_bush_type(h));
      CHECK(is_regular(h));
    }
    for (std::size_t a = 0; a < fam.size(); ++a)
      for (std::size_t b = a + 1; b < fam.size(); ++b) CHECK(bush_product_check(fam[a], fam[b]));
  }
  CHECK_THROWS_AS(build_mubh(2, 4), std::invalid_argument);  // above the 2n-1 bound
  CHECK_THROWS_AS(build_mubh(3, 2), std::invalid_argument);  // 2n = 6 not a power of two
}

TEST_CASE("order 4 exhaustive search finds no unbiased pair") {
  auto all = all_bush_order4();
  CHECK(all.size() == 4);
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a + 1; b < all.size(); ++b)
      CHECK_FALSE(unbiased_witness(all[a], all[b]).has_value());
}
