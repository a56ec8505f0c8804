#include <catch2/catch_amalgamated.hpp>

#include "mubh/gf2k.hpp"
#include "mubh/latin.hpp"

using namespace mubh;

TEST_CASE("field construction validates the modulus table") {
  for (int k = 1; k <= 16; ++k) {
    GF2k f(k);
    CHECK(f.order() == (1u << k));
    CHECK(GF2k::irreducible(f.modulus(), k));
  }
  CHECK_THROWS_AS(GF2k(0), std::invalid_argument);
  CHECK_THROWS_AS(GF2k(17), std::invalid_argument);
  CHECK_FALSE(GF2k::irreducible(0x5, 2));  // x^2 + 1 = (x+1)^2
}

TEST_CASE("GF(2) and GF(4) arithmetic") {
  GF2k f1(1);
  CHECK(GF2k::add(1, 1) == 0);
  CHECK(f1.mul(1, 1) == 1);

  // GF(4) with modulus x^2 + x + 1, w = x = 0b10:
  // w * w = x^2 = x + 1 = 0b11, and w * w^2 = 1
  GF2k f2(2);
  CHECK(f2.modulus() == 0x7);
  GF2k::Elem w = 2;
  CHECK(f2.mul(w, w) == 3);
  CHECK(f2.mul(w, f2.mul(w, w)) == 1);

  // field axioms, spot-checked exhaustively at order 8
  GF2k f3(3);
  for (GF2k::Elem a = 0; a < 8; ++a)
    for (GF2k::Elem b = 0; b < 8; ++b) {
      CHECK(f3.mul(a, b) == f3.mul(b, a));
      for (GF2k::Elem c = 0; c < 8; ++c) {
        CHECK(f3.mul(a, GF2k::add(b, c)) == GF2k::add(f3.mul(a, b), f3.mul(a, c)));
        CHECK(f3.mul(f3.mul(a, b), c) == f3.mul(a, f3.mul(b, c)));
      }
      if (b != 0) CHECK(f3.mul(f3.mul(a, b), f3.inv(b)) == a);
    }
}

TEST_CASE("latin predicates") {
  LatinSquare good(2);
  good.set(0, 0, 1);
  good.set(0, 1, 2);
  good.set(1, 0, 2);
  good.set(1, 1, 1);
  CHECK(is_latin(good));

  LatinSquare bad(2);
  bad.set(0, 0, 1);
  bad.set(0, 1, 2);
  bad.set(1, 0, 1);
  bad.set(1, 1, 2);
  CHECK_FALSE(is_latin(bad));
}

TEST_CASE("orthogonal squares over GF(q)") {
  auto single = gen_mols(2);
  REQUIRE(single.size() == 1);
  CHECK(single[0].get(0, 0) == 1);
  CHECK(single[0].get(0, 1) == 2);
  CHECK(single[0].get(1, 0) == 2);
  CHECK(single[0].get(1, 1) == 1);

  for (std::uint32_t q : {2u, 4u, 8u}) {
    auto mols = gen_mols(q);
    REQUIRE(mols.size() == q - 1);
    for (const auto& sq : mols) {
      CHECK(is_latin(sq));
      for (std::uint32_t j = 0; j < q; ++j) CHECK(sq.get(0, j) == static_cast<int>(j) + 1);
    }
    for (std::size_t a = 0; a < mols.size(); ++a)
      for (std::size_t b = a + 1; b < mols.size(); ++b) {
        CHECK(is_orthogonal(mols[a], mols[b]));
        // independent superposition count
        std::vector<int> hits(q * q, 0);
        for (std::uint32_t r = 0; r < q; ++r)
          for (std::uint32_t c = 0; c < q; ++c)
            ++hits[(mols[a].get(r, c) - 1) * q + (mols[b].get(r, c) - 1)];
        for (int h : hits) CHECK(h == 1);
      }
  }
  CHECK_THROWS_AS(gen_mols(6), std::invalid_argument);
}

TEST_CASE("suitable squares with constant diagonal") {
  auto one = gen_msls(2);
  REQUIRE(one.size() == 1);
  CHECK(one[0].get(0, 0) == 1);
  CHECK(one[0].get(0, 1) == 2);
  CHECK(one[0].get(1, 0) == 2);
  CHECK(one[0].get(1, 1) == 1);

  for (int s : {2, 4, 8, 16}) {
    auto msls = gen_msls(s);
    REQUIRE(static_cast<int>(msls.size()) == s - 1);
    for (const auto& sq : msls) {
      CHECK(is_latin(sq));
      for (int i = 0; i < s; ++i) CHECK(sq.get(i, i) == 1);
      // a square is never suitable with itself
      CHECK_FALSE(is_suitable(sq, sq));
    }
    for (std::size_t a = 0; a < msls.size(); ++a)
      for (std::size_t b = 0; b < msls.size(); ++b)
        if (a != b) CHECK(is_suitable(msls[a], msls[b]));
  }
  CHECK_THROWS_AS(gen_msls(6), std::invalid_argument);
}
