#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mubh/latin.hpp"
#include "mubh/matrix.hpp"

namespace mubh {

/// Exact integer square root; empty when v is not a perfect square.
inline std::optional<std::int64_t> exact_isqrt(std::int64_t v) {
  if (v < 0) return std::nullopt;
  std::int64_t r = 0;
  while (r * r < v) ++r;
  if (r * r != v) return std::nullopt;
  return r;
}

/// A +-1 matrix H of order N with H H^t = N I, checked at construction.
class HadamardMatrix {
 public:
  explicit HadamardMatrix(SignMatrix body) : body_(std::move(body)) {
    if (body_.rows() != body_.cols()) throw std::invalid_argument("Hadamard matrix must be square");
    if (body_.has_zero_entry()) throw std::invalid_argument("Hadamard matrix has a zero entry");
    int n = body_.rows();
    IntMatrix g = mul(body_, transpose(body_));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::int64_t want = i == j ? n : 0;
        if (g.get(i, j) != want)
          throw std::invalid_argument("rows are not orthogonal: gram(" + std::to_string(i) +
                                      "," + std::to_string(j) + ") = " + std::to_string(g.get(i, j)));
      }
  }

  int order() const { return body_.rows(); }
  const SignMatrix& body() const { return body_; }

  friend bool operator==(const HadamardMatrix& a, const HadamardMatrix& b) {
    return a.body_ == b.body_;
  }

 private:
  SignMatrix body_;
};

/// Doubling construction of order 2^k, first row and column all ones.
inline HadamardMatrix sylvester(int k) {
  if (k < 0) throw std::invalid_argument("negative order exponent");
  int n = 1 << k;
  SignMatrix h(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      h.set(i, j, std::popcount(static_cast<unsigned>(i & j)) % 2 == 0 ? 1 : -1);
  return HadamardMatrix(std::move(h));
}

/// All row sums and column sums equal one constant (then necessarily +-sqrt(N)).
inline bool is_regular(const HadamardMatrix& h) {
  const SignMatrix& b = h.body();
  SignMatrix bt = transpose(b);
  std::int64_t s = b.row_sum(0);
  for (int i = 0; i < b.rows(); ++i)
    if (b.row_sum(i) != s || bt.row_sum(i) != s) return false;
  std::int64_t root = *exact_isqrt(h.order());
  if (s != root && s != -root) throw std::logic_error("regular Hadamard with impossible sum");
  return true;
}

/// Block test for order 4n^2: every diagonal 2n-block all ones, every
/// off-diagonal block with zero row and column sums.
inline bool is_bush_type(const HadamardMatrix& h) {
  auto root = exact_isqrt(h.order());
  if (!root || *root % 2 != 0) throw std::invalid_argument("order is not of the form 4n^2");
  int blk = static_cast<int>(*root);
  int nb = blk;
  const SignMatrix& b = h.body();
  for (int bi = 0; bi < nb; ++bi)
    for (int bj = 0; bj < nb; ++bj) {
      if (bi == bj) {
        for (int p = 0; p < blk; ++p)
          for (int q = 0; q < blk; ++q)
            if (b.get(bi * blk + p, bj * blk + q) != 1) return false;
      } else {
        for (int p = 0; p < blk; ++p) {
          std::int64_t rs = 0, cs = 0;
          for (int q = 0; q < blk; ++q) {
            rs += b.get(bi * blk + p, bj * blk + q);
            cs += b.get(bi * blk + q, bj * blk + p);
          }
          if (rs != 0 || cs != 0) return false;
        }
      }
    }
  return true;
}

/// H K^t = sqrt(N) L for a +-1 matrix L: returns L when it exists.
inline std::optional<HadamardMatrix> unbiased_witness(const HadamardMatrix& h,
                                                      const HadamardMatrix& k) {
  if (h.order() != k.order()) throw std::invalid_argument("order mismatch");
  auto root = exact_isqrt(h.order());
  if (!root) throw std::invalid_argument("order is not a perfect square");
  IntMatrix p = mul(h.body(), transpose(k.body()));
  SignMatrix l(h.order(), h.order());
  for (int i = 0; i < h.order(); ++i)
    for (int j = 0; j < h.order(); ++j) {
      std::int64_t v = p.get(i, j);
      if (v != *root && v != -*root) return std::nullopt;
      l.set(i, j, v > 0 ? 1 : -1);
    }
  return HadamardMatrix(std::move(l));
}

/// For unbiased Bush-type H, K the witness L is again Bush-type.
inline bool bush_product_check(const HadamardMatrix& h, const HadamardMatrix& k) {
  auto l = unbiased_witness(h, k);
  if (!l) throw std::invalid_argument("matrices are not unbiased");
  return is_bush_type(*l);
}

/// m mutually unbiased Bush-type Hadamard matrices of order 4n^2, 2n = 2^k.
/// Block (i,j) of H_t is the outer product of Hadamard row M_t(i,j) with
/// itself, where M_1..M_m are suitable Latin squares with constant diagonal 1
/// and the rows come from the normalized Sylvester matrix of order 2n (row 1
/// all ones, so diagonal blocks are all ones). Bush-type, regularity and
/// pairwise unbiasedness are re-verified before returning.
inline std::vector<HadamardMatrix> build_mubh(int n, int m) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  int two_n = 2 * n, k = 0;
  while ((1 << k) < two_n && k < 20) ++k;
  if ((1 << k) != two_n) throw std::invalid_argument("2n must be a power of two");
  if (m < 1 || m > two_n - 1)
    throw std::invalid_argument("family size must be between 1 and 2n-1 = " +
                                std::to_string(two_n - 1));

  HadamardMatrix base = sylvester(k);
  std::vector<LatinSquare> squares = gen_msls(two_n);

  // Outer products of base rows with themselves, one per symbol.
  std::vector<SignMatrix> outer;
  outer.reserve(two_n);
  for (int s = 0; s < two_n; ++s) {
    SignMatrix o(two_n, two_n);
    for (int p = 0; p < two_n; ++p)
      for (int q = 0; q < two_n; ++q)
        o.set(p, q, base.body().get(s, p) * base.body().get(s, q));
    outer.push_back(std::move(o));
  }

  std::vector<HadamardMatrix> family;
  family.reserve(m);
  for (int t = 0; t < m; ++t) {
    SignMatrix h(4 * n * n, 4 * n * n);
    for (int i = 0; i < two_n; ++i)
      for (int j = 0; j < two_n; ++j)
        set_block(h, two_n, two_n, i, j, outer[squares[t].get(i, j) - 1]);
    family.emplace_back(std::move(h));
  }

  for (const HadamardMatrix& h : family)
    if (!is_bush_type(h) || !is_regular(h))
      throw std::logic_error("constructed matrix failed the Bush-type check");
  for (std::size_t a = 0; a < family.size(); ++a)
    for (std::size_t b = a + 1; b < family.size(); ++b)
      if (!unbiased_witness(family[a], family[b]))
        throw std::logic_error("constructed matrices are not unbiased");
  return family;
}

/// Exhaustive list of all Bush-type Hadamard matrices of order 4.
inline std::vector<HadamardMatrix> all_bush_order4() {
  std::vector<HadamardMatrix> out;
  for (unsigned mask = 0; mask < (1u << 16); ++mask) {
    SignMatrix s(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) s.set(i, j, (mask >> (4 * i + j)) & 1 ? 1 : -1);
    try {
      HadamardMatrix h(std::move(s));
      if (is_bush_type(h)) out.push_back(std::move(h));
    } catch (const std::invalid_argument&) {
    }
  }
  return out;
}

}  // namespace mubh
