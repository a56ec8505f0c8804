#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace mubh {

namespace detail {

using i128 = __int128;

inline i128 abs128(i128 a) { return a < 0 ? -a : a; }

inline i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Narrow a 128-bit value back to 64 bits; anything wider is an error, not a wrap.
inline std::int64_t narrow128(i128 v) {
  if (v > i128(INT64_MAX) || v < i128(INT64_MIN)) {
    throw std::overflow_error("rational arithmetic overflow");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace detail

/// Exact rational number on a 64-bit numerator/denominator, kept reduced with
/// den > 0. Intermediates run in 128 bits; a result that does not fit 64 bits
/// throws std::overflow_error instead of wrapping.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit by design
  Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    detail::i128 nn = n, dd = d;
    if (dd < 0) {
      nn = -nn;
      dd = -dd;
    }
    detail::i128 g = detail::gcd128(nn, dd);
    if (g > 1) {
      nn /= g;
      dd /= g;
    }
    num_ = detail::narrow128(nn);
    den_ = detail::narrow128(dd);
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(detail::i128(a.num_) * b.den_ + detail::i128(b.num_) * a.den_,
                detail::i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make(detail::i128(a.num_) * b.den_ - detail::i128(b.num_) * a.den_,
                detail::i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(detail::i128(a.num_) * b.num_, detail::i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::invalid_argument("rational division by zero");
    return make(detail::i128(a.num_) * b.den_, detail::i128(a.den_) * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = detail::narrow128(-detail::i128(num_));
    r.den_ = den_;
    return r;
  }

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return detail::i128(a.num_) * b.den_ < detail::i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  /// "n" for integers, "n/d" otherwise; always exact.
  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  static Rational make(detail::i128 n, detail::i128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    detail::i128 g = detail::gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    Rational r;
    r.num_ = detail::narrow128(n);
    r.den_ = detail::narrow128(d);
    return r;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace mubh
