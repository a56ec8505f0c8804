#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

namespace mubh {

/// GF(2^k) in polynomial basis, 1 <= k <= 16. Elements are bit vectors of
/// coefficients; the modulus per k is the lexicographically smallest
/// irreducible polynomial of that degree (table below, re-checked for
/// irreducibility at construction).
class GF2k {
 public:
  using Elem = std::uint32_t;

  explicit GF2k(int k) : k_(k) {
    if (k < 1 || k > 16) throw std::invalid_argument("field degree must be in 1..16");
    modulus_ = kModuli[k];
    if (!irreducible(modulus_, k)) throw std::logic_error("field modulus is reducible");
  }

  int degree() const { return k_; }
  std::uint32_t order() const { return 1u << k_; }
  std::uint32_t modulus() const { return modulus_; }

  static Elem add(Elem a, Elem b) { return a ^ b; }

  Elem mul(Elem a, Elem b) const {
    check(a);
    check(b);
    std::uint64_t acc = 0, aa = a;
    while (b) {
      if (b & 1) acc ^= aa;
      aa <<= 1;
      b >>= 1;
    }
    return reduce(acc);
  }

  Elem pow(Elem a, std::uint64_t e) const {
    Elem r = 1, base = a;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  Elem inv(Elem a) const {
    if (a == 0) throw std::invalid_argument("inverse of zero field element");
    return pow(a, order() - 2);
  }

  /// Irreducibility over GF(2) by Rabin's criterion.
  static bool irreducible(std::uint32_t f, int k);

 private:
  void check(Elem a) const {
    if (a >> k_) throw std::invalid_argument("element outside field");
  }

  Elem reduce(std::uint64_t v) const {
    for (int bit = 63; bit >= k_; --bit)
      if ((v >> bit) & 1) v ^= std::uint64_t(modulus_) << (bit - k_);
    return static_cast<Elem>(v);
  }

  // Smallest irreducible polynomial of each degree, low bit = constant term.
  static constexpr std::array<std::uint32_t, 17> kModuli = {
      0,      0x3,    0x7,    0xb,    0x13,   0x25,   0x43,   0x83,  0x11b,
      0x203,  0x409,  0x805,  0x1009, 0x201b, 0x4021, 0x8003, 0x1002b};

  int k_;
  std::uint32_t modulus_;
};

namespace detail {

inline std::uint64_t poly_mod(std::uint64_t a, std::uint64_t f) {
  int df = 63;
  while (df >= 0 && !((f >> df) & 1)) --df;
  for (int bit = 63; bit >= df; --bit)
    if ((a >> bit) & 1) a ^= f << (bit - df);
  return a;
}

inline std::uint64_t poly_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t f) {
  std::uint64_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    a = poly_mod(a, f);
  }
  return poly_mod(r, f);
}

inline std::uint64_t poly_powmod(std::uint64_t a, std::uint64_t e, std::uint64_t f) {
  std::uint64_t r = 1;
  a = poly_mod(a, f);
  while (e) {
    if (e & 1) r = poly_mulmod(r, a, f);
    a = poly_mulmod(a, a, f);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    std::uint64_t t = poly_mod(a, b);
    a = b;
    b = t;
  }
  return a;
}

}  // namespace detail

inline bool GF2k::irreducible(std::uint32_t f, int k) {
  if (k < 1 || (f >> k) != 1u) return false;
  // x^(2^k) == x (mod f)
  if (detail::poly_powmod(2, std::uint64_t(1) << k, f) != detail::poly_mod(2, f)) return false;
  // gcd(x^(2^(k/p)) - x, f) == 1 for every prime p | k
  for (int p = 2; p <= k; ++p) {
    if (k % p != 0) continue;
    bool prime = true;
    for (int q = 2; q * q <= p; ++q)
      if (p % q == 0) prime = false;
    if (!prime) continue;
    std::uint64_t h = detail::poly_powmod(2, std::uint64_t(1) << (k / p), f) ^ detail::poly_mod(2, f);
    if (detail::poly_gcd(f, h) != 1) return false;
  }
  return true;
}

}  // namespace mubh
