#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mubh/gf2k.hpp"

namespace mubh {

/// s x s array over symbols 1..s with each row and column a permutation.
class LatinSquare {
 public:
  explicit LatinSquare(int side)
      : side_(side), cells_(static_cast<std::size_t>(side) * side, 0) {
    if (side <= 0) throw std::invalid_argument("empty latin square");
  }

  int side() const { return side_; }
  int get(int r, int c) const { return cells_[static_cast<std::size_t>(r) * side_ + c]; }
  void set(int r, int c, int v) {
    if (v < 1 || v > side_) throw std::invalid_argument("symbol out of range");
    cells_[static_cast<std::size_t>(r) * side_ + c] = static_cast<std::uint16_t>(v);
  }

  friend bool operator==(const LatinSquare& a, const LatinSquare& b) {
    return a.side_ == b.side_ && a.cells_ == b.cells_;
  }

 private:
  int side_;
  std::vector<std::uint16_t> cells_;
};

inline bool is_latin(const LatinSquare& sq) {
  int s = sq.side();
  std::vector<char> seen(static_cast<std::size_t>(s) + 1);
  for (int r = 0; r < s; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int c = 0; c < s; ++c) {
      int v = sq.get(r, c);
      if (v < 1 || v > s || seen[v]) return false;
      seen[v] = 1;
    }
  }
  for (int c = 0; c < s; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int r = 0; r < s; ++r) {
      int v = sq.get(r, c);
      if (seen[v]) return false;
      seen[v] = 1;
    }
  }
  return true;
}

/// Superposition of two squares covers all s^2 ordered symbol pairs.
inline bool is_orthogonal(const LatinSquare& a, const LatinSquare& b) {
  if (a.side() != b.side()) throw std::invalid_argument("latin square side mismatch");
  int s = a.side();
  std::vector<char> seen(static_cast<std::size_t>(s) * s, 0);
  for (int r = 0; r < s; ++r)
    for (int c = 0; c < s; ++c) {
      std::size_t key = static_cast<std::size_t>(a.get(r, c) - 1) * s + (b.get(r, c) - 1);
      if (seen[key]) return false;
      seen[key] = 1;
    }
  return true;
}

/// Every row of a against every row of b agrees in exactly one column.
inline bool is_suitable(const LatinSquare& a, const LatinSquare& b) {
  if (a.side() != b.side()) throw std::invalid_argument("latin square side mismatch");
  int s = a.side();
  for (int ra = 0; ra < s; ++ra)
    for (int rb = 0; rb < s; ++rb) {
      int agreements = 0;
      for (int c = 0; c < s; ++c)
        if (a.get(ra, c) == b.get(rb, c)) ++agreements;
      if (agreements != 1) return false;
    }
  return true;
}

/// The q-1 squares L_a(i,j) = a*i + j over GF(q), q = 2^k, rows switched so
/// row 0 comes first and symbols renamed so every first row reads 1..q.
/// Pairwise orthogonal.
inline std::vector<LatinSquare> gen_mols(std::uint32_t q) {
  int k = 0;
  while ((1u << k) < q && k < 17) ++k;
  if (q < 2 || (1u << k) != q) throw std::invalid_argument("order must be a power of two");
  GF2k f(k);
  std::vector<LatinSquare> out;
  out.reserve(q - 1);
  for (std::uint32_t alpha = 1; alpha < q; ++alpha) {
    LatinSquare sq(static_cast<int>(q));
    for (std::uint32_t i = 0; i < q; ++i)
      for (std::uint32_t j = 0; j < q; ++j)
        sq.set(static_cast<int>(i), static_cast<int>(j),
               static_cast<int>(GF2k::add(f.mul(alpha, i), j)) + 1);
    out.push_back(sq);
  }
  return out;
}

/// s-1 pairwise suitable squares of side s = 2^k with constant diagonal 1,
/// via M_a(i,j) = a*(j - i) over GF(s) and the symbol map e -> e + 1.
/// Distinct a, b give exactly one row agreement because (a-b)c = ai - bj has a
/// unique solution c; the diagonal is a*0 = 0 -> symbol 1.
inline std::vector<LatinSquare> gen_msls(int s) {
  int k = 0;
  while ((1 << k) < s && k < 17) ++k;
  if (s < 2 || (1 << k) != s) throw std::invalid_argument("side must be a power of two");
  GF2k f(k);
  std::uint32_t q = static_cast<std::uint32_t>(s);
  std::vector<LatinSquare> out;
  out.reserve(s - 1);
  for (std::uint32_t alpha = 1; alpha < q; ++alpha) {
    LatinSquare sq(s);
    for (std::uint32_t i = 0; i < q; ++i)
      for (std::uint32_t j = 0; j < q; ++j)
        sq.set(static_cast<int>(i), static_cast<int>(j),
               static_cast<int>(f.mul(alpha, GF2k::add(j, i))) + 1);
    out.push_back(sq);
  }
  return out;
}

}  // namespace mubh
