#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "mubh/rational.hpp"

namespace mubh {

namespace detail {

/// One bit per entry, rows packed into 64-bit words. Tail bits of each row
/// word are kept zero so whole-vector comparison and popcount stay valid.
class BitPlane {
 public:
  BitPlane() = default;
  BitPlane(int rows, int cols)
      : rows_(rows), cols_(cols), wpr_((cols + 63) / 64),
        w_(static_cast<std::size_t>(rows) * wpr_, 0) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("empty bit plane");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int words_per_row() const { return wpr_; }

  bool get(int r, int c) const {
    return (w_[idx(r) + c / 64] >> (c % 64)) & 1u;
  }
  void set(int r, int c, bool v) {
    std::uint64_t& word = w_[idx(r) + c / 64];
    std::uint64_t bit = std::uint64_t(1) << (c % 64);
    if (v)
      word |= bit;
    else
      word &= ~bit;
  }

  const std::uint64_t* row(int r) const { return w_.data() + idx(r); }

  std::int64_t row_popcount(int r) const {
    std::int64_t s = 0;
    const std::uint64_t* p = row(r);
    for (int k = 0; k < wpr_; ++k) s += std::popcount(p[k]);
    return s;
  }

  std::int64_t popcount() const {
    std::int64_t s = 0;
    for (std::uint64_t word : w_) s += std::popcount(word);
    return s;
  }

  friend bool operator==(const BitPlane& a, const BitPlane& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.w_ == b.w_;
  }

  /// popcount of (row(a,ra) AND row(b,rb)); planes must share the column count.
  static std::int64_t and_popcount(const BitPlane& a, int ra, const BitPlane& b, int rb) {
    const std::uint64_t* pa = a.row(ra);
    const std::uint64_t* pb = b.row(rb);
    std::int64_t s = 0;
    for (int k = 0; k < a.wpr_; ++k) s += std::popcount(pa[k] & pb[k]);
    return s;
  }

 private:
  std::size_t idx(int r) const { return static_cast<std::size_t>(r) * wpr_; }

  int rows_ = 0, cols_ = 0, wpr_ = 0;
  std::vector<std::uint64_t> w_;
};

inline void check_same_shape(int ar, int ac, int br, int bc) {
  if (ar != br || ac != bc) throw std::invalid_argument("matrix shape mismatch");
}

inline void check_inner(int ac, int br) {
  if (ac != br) throw std::invalid_argument("matrix inner dimension mismatch");
}

}  // namespace detail

class IntMatrix;

/// Dense {0,1} matrix, bit-packed.
class BinMatrix {
 public:
  BinMatrix(int rows, int cols) : bits_(rows, cols) {}

  static BinMatrix identity(int n) {
    BinMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.bits_.set(i, i, true);
    return m;
  }
  static BinMatrix ones(int rows, int cols) {
    BinMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) m.bits_.set(r, c, true);
    return m;
  }
  static BinMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows);

  int rows() const { return bits_.rows(); }
  int cols() const { return bits_.cols(); }

  int get(int r, int c) const { return bits_.get(r, c) ? 1 : 0; }
  void set(int r, int c, int v) {
    if (v != 0 && v != 1) throw std::invalid_argument("binary entry must be 0 or 1");
    bits_.set(r, c, v != 0);
  }

  std::int64_t row_sum(int r) const { return bits_.row_popcount(r); }
  std::int64_t total() const { return bits_.popcount(); }

  const detail::BitPlane& plane() const { return bits_; }

  friend bool operator==(const BinMatrix& a, const BinMatrix& b) {
    return a.bits_ == b.bits_;
  }

 private:
  detail::BitPlane bits_;
};

/// Dense {-1,0,+1} matrix as two planes: nonzero mask and negative mask.
class SignMatrix {
 public:
  SignMatrix(int rows, int cols) : nz_(rows, cols), neg_(rows, cols) {}

  static SignMatrix identity(int n) {
    SignMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
  }
  static SignMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows);

  int rows() const { return nz_.rows(); }
  int cols() const { return nz_.cols(); }

  int get(int r, int c) const {
    if (!nz_.get(r, c)) return 0;
    return neg_.get(r, c) ? -1 : 1;
  }
  void set(int r, int c, int v) {
    switch (v) {
      case 0:
        nz_.set(r, c, false);
        neg_.set(r, c, false);
        break;
      case 1:
        nz_.set(r, c, true);
        neg_.set(r, c, false);
        break;
      case -1:
        nz_.set(r, c, true);
        neg_.set(r, c, true);
        break;
      default:
        throw std::invalid_argument("sign entry must be -1, 0 or +1");
    }
  }

  std::int64_t row_sum(int r) const {
    std::int64_t nz = nz_.row_popcount(r);
    std::int64_t neg = neg_.row_popcount(r);
    return nz - 2 * neg;
  }
  bool has_zero_entry() const {
    return nz_.popcount() != std::int64_t(rows()) * cols();
  }

  const detail::BitPlane& nonzero_plane() const { return nz_; }
  const detail::BitPlane& negative_plane() const { return neg_; }

  friend bool operator==(const SignMatrix& a, const SignMatrix& b) {
    return a.nz_ == b.nz_ && a.neg_ == b.neg_;
  }

 private:
  detail::BitPlane nz_, neg_;
};

/// Dense 64-bit integer matrix; products of sign/binary matrices land here.
/// Arithmetic that would leave the 64-bit range throws instead of wrapping.
class IntMatrix {
 public:
  IntMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("empty matrix");
  }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::int64_t& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::int64_t get(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  std::int64_t row_sum(int r) const {
    std::int64_t s = 0;
    for (int c = 0; c < cols_; ++c) s = checked_add(s, get(r, c));
    return s;
  }
  std::int64_t max_abs() const {
    std::int64_t m = 0;
    for (std::int64_t v : a_) {
      std::int64_t av = v < 0 ? -v : v;
      if (av > m) m = av;
    }
    return m;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer matrix overflow");
    return r;
  }
  static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer matrix overflow");
    return r;
  }

 private:
  int rows_, cols_;
  std::vector<std::int64_t> a_;
};

/// Dense matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("empty matrix");
  }

  static RatMatrix identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
  }
  static RatMatrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& get(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

inline BinMatrix BinMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  int r = static_cast<int>(rows.size());
  int c = static_cast<int>(rows.begin()->size());
  BinMatrix m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c) throw std::invalid_argument("ragged rows");
    int j = 0;
    for (int v : row) m.set(i, j++, v);
    ++i;
  }
  return m;
}

inline SignMatrix SignMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  int r = static_cast<int>(rows.size());
  int c = static_cast<int>(rows.begin()->size());
  SignMatrix m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c) throw std::invalid_argument("ragged rows");
    int j = 0;
    for (int v : row) m.set(i, j++, v);
    ++i;
  }
  return m;
}

inline IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  int r = static_cast<int>(rows.size());
  int c = static_cast<int>(rows.begin()->size());
  IntMatrix m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c) throw std::invalid_argument("ragged rows");
    int j = 0;
    for (std::int64_t v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

inline RatMatrix RatMatrix::from_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
  int r = static_cast<int>(rows.size());
  int c = static_cast<int>(rows.begin()->size());
  RatMatrix m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c) throw std::invalid_argument("ragged rows");
    int j = 0;
    for (const Rational& v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

// ---- conversions ----

inline IntMatrix to_int(const BinMatrix& a) {
  IntMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.get(i, j);
  return r;
}

inline IntMatrix to_int(const SignMatrix& a) {
  IntMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.get(i, j);
  return r;
}

inline SignMatrix to_sign(const BinMatrix& a) {
  SignMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.set(i, j, a.get(i, j));
  return r;
}

inline SignMatrix sign_from_int(const IntMatrix& a) {
  SignMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      std::int64_t v = a.get(i, j);
      if (v < -1 || v > 1) throw std::invalid_argument("entry outside {-1,0,1}");
      r.set(i, j, static_cast<int>(v));
    }
  return r;
}

inline BinMatrix bin_from_int(const IntMatrix& a) {
  BinMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      std::int64_t v = a.get(i, j);
      if (v != 0 && v != 1) throw std::invalid_argument("entry outside {0,1}");
      r.set(i, j, static_cast<int>(v));
    }
  return r;
}

inline RatMatrix to_rat(const IntMatrix& a) {
  RatMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = Rational(a.get(i, j));
  return r;
}

inline RatMatrix to_rat(const SignMatrix& a) { return to_rat(to_int(a)); }
inline RatMatrix to_rat(const BinMatrix& a) { return to_rat(to_int(a)); }

// ---- transpose ----

inline BinMatrix transpose(const BinMatrix& a) {
  BinMatrix r(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a.get(i, j)) r.set(j, i, 1);
  return r;
}

inline SignMatrix transpose(const SignMatrix& a) {
  SignMatrix r(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      int v = a.get(i, j);
      if (v) r.set(j, i, v);
    }
  return r;
}

inline IntMatrix transpose(const IntMatrix& a) {
  IntMatrix r(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(j, i) = a.get(i, j);
  return r;
}

inline RatMatrix transpose(const RatMatrix& a) {
  RatMatrix r(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(j, i) = a.get(i, j);
  return r;
}

// ---- multiplication ----
// Sign/bin products run on the packed planes: split each inner product into
// the agreeing and disagreeing nonzero positions and take popcount diffs.
// Results are exact 64-bit integers.

inline IntMatrix mul(const SignMatrix& a, const SignMatrix& b) {
  detail::check_inner(a.cols(), b.rows());
  SignMatrix bt = transpose(b);
  IntMatrix r(a.rows(), b.cols());
  const detail::BitPlane& anz = a.nonzero_plane();
  const detail::BitPlane& ang = a.negative_plane();
  const detail::BitPlane& bnz = bt.nonzero_plane();
  const detail::BitPlane& bng = bt.negative_plane();
  int w = anz.words_per_row();
  for (int i = 0; i < a.rows(); ++i) {
    const std::uint64_t* ra_nz = anz.row(i);
    const std::uint64_t* ra_ng = ang.row(i);
    for (int j = 0; j < bt.rows(); ++j) {
      const std::uint64_t* rb_nz = bnz.row(j);
      const std::uint64_t* rb_ng = bng.row(j);
      std::int64_t pos = 0, neg = 0;
      for (int k = 0; k < w; ++k) {
        std::uint64_t both = ra_nz[k] & rb_nz[k];
        std::uint64_t diff = ra_ng[k] ^ rb_ng[k];
        pos += std::popcount(both & ~diff);
        neg += std::popcount(both & diff);
      }
      r.at(i, j) = pos - neg;
    }
  }
  return r;
}

inline IntMatrix mul(const BinMatrix& a, const BinMatrix& b) {
  detail::check_inner(a.cols(), b.rows());
  BinMatrix bt = transpose(b);
  IntMatrix r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < bt.rows(); ++j)
      r.at(i, j) = detail::BitPlane::and_popcount(a.plane(), i, bt.plane(), j);
  return r;
}

inline IntMatrix mul(const SignMatrix& a, const BinMatrix& b) { return mul(a, to_sign(b)); }
inline IntMatrix mul(const BinMatrix& a, const SignMatrix& b) { return mul(to_sign(a), b); }

inline IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
  detail::check_inner(a.cols(), b.rows());
  IntMatrix r(a.rows(), b.cols());
  // Values small enough that no accumulated term can leave 64 bits get the
  // vectorizable loop; anything larger goes through checked arithmetic.
  std::int64_t ma = a.max_abs(), mb = b.max_abs();
  bool fast = ma == 0 || mb == 0 ||
              (ma <= (INT64_MAX / 4) / mb / std::max(1, a.cols()));
  if (fast) {
    for (int i = 0; i < a.rows(); ++i) {
      for (int k = 0; k < a.cols(); ++k) {
        std::int64_t v = a.get(i, k);
        if (v == 0) continue;
        for (int j = 0; j < b.cols(); ++j) {
          r.at(i, j) += v * b.get(k, j);
        }
      }
    }
  } else {
    for (int i = 0; i < a.rows(); ++i)
      for (int k = 0; k < a.cols(); ++k) {
        std::int64_t v = a.get(i, k);
        if (v == 0) continue;
        for (int j = 0; j < b.cols(); ++j)
          r.at(i, j) = IntMatrix::checked_add(r.at(i, j), IntMatrix::checked_mul(v, b.get(k, j)));
      }
  }
  return r;
}

inline RatMatrix mul(const RatMatrix& a, const RatMatrix& b) {
  detail::check_inner(a.cols(), b.rows());
  RatMatrix r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Rational& v = a.get(i, k);
      if (v.is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) {
        const Rational& w = b.get(k, j);
        if (!w.is_zero()) r.at(i, j) += v * w;
      }
    }
  return r;
}

// ---- kronecker products (row-major block layout: block (i,j) is a(i,j)*b) ----

template <typename M>
M kronecker_entrywise(const M& a, const M& b) {
  M r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      auto v = a.get(i, j);
      if (v == decltype(v){}) continue;
      for (int p = 0; p < b.rows(); ++p)
        for (int q = 0; q < b.cols(); ++q) {
          auto w = b.get(p, q);
          if (w == decltype(w){}) continue;
          r.set(i * b.rows() + p, j * b.cols() + q, v * w);
        }
    }
  return r;
}

inline BinMatrix kronecker(const BinMatrix& a, const BinMatrix& b) {
  return kronecker_entrywise(a, b);
}
inline SignMatrix kronecker(const SignMatrix& a, const SignMatrix& b) {
  return kronecker_entrywise(a, b);
}
inline IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      std::int64_t v = a.get(i, j);
      if (v == 0) continue;
      for (int p = 0; p < b.rows(); ++p)
        for (int q = 0; q < b.cols(); ++q)
          r.at(i * b.rows() + p, j * b.cols() + q) = IntMatrix::checked_mul(v, b.get(p, q));
    }
  return r;
}

// ---- entrywise (Schur) products ----

inline RatMatrix entrywise_mul(const RatMatrix& a, const RatMatrix& b) {
  detail::check_same_shape(a.rows(), a.cols(), b.rows(), b.cols());
  RatMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.get(i, j) * b.get(i, j);
  return r;
}

inline IntMatrix entrywise_mul(const IntMatrix& a, const IntMatrix& b) {
  detail::check_same_shape(a.rows(), a.cols(), b.rows(), b.cols());
  IntMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      r.at(i, j) = IntMatrix::checked_mul(a.get(i, j), b.get(i, j));
  return r;
}

// ---- add / sub / scalar ----

inline IntMatrix add(const IntMatrix& a, const IntMatrix& b) {
  detail::check_same_shape(a.rows(), a.cols(), b.rows(), b.cols());
  IntMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      r.at(i, j) = IntMatrix::checked_add(a.get(i, j), b.get(i, j));
  return r;
}

inline IntMatrix sub(const IntMatrix& a, const IntMatrix& b) {
  detail::check_same_shape(a.rows(), a.cols(), b.rows(), b.cols());
  IntMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      r.at(i, j) = IntMatrix::checked_add(a.get(i, j), -b.get(i, j));
  return r;
}

inline IntMatrix scalar_mul(std::int64_t s, const IntMatrix& a) {
  IntMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = IntMatrix::checked_mul(s, a.get(i, j));
  return r;
}

inline RatMatrix add(const RatMatrix& a, const RatMatrix& b) {
  detail::check_same_shape(a.rows(), a.cols(), b.rows(), b.cols());
  RatMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.get(i, j) + b.get(i, j);
  return r;
}

inline RatMatrix sub(const RatMatrix& a, const RatMatrix& b) {
  detail::check_same_shape(a.rows(), a.cols(), b.rows(), b.cols());
  RatMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.get(i, j) - b.get(i, j);
  return r;
}

inline RatMatrix scalar_mul(const Rational& s, const RatMatrix& a) {
  RatMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = s * a.get(i, j);
  return r;
}

// ---- block extraction / pasting ----

namespace detail {
inline void check_block(int rows, int cols, int br, int bc, int i, int j) {
  if (br <= 0 || bc <= 0 || rows % br != 0 || cols % bc != 0)
    throw std::invalid_argument("block size does not divide matrix shape");
  if (i < 0 || j < 0 || i >= rows / br || j >= cols / bc)
    throw std::invalid_argument("block index out of range");
}
}  // namespace detail

template <typename M>
M block(const M& a, int block_rows, int block_cols, int i, int j) {
  detail::check_block(a.rows(), a.cols(), block_rows, block_cols, i, j);
  M r(block_rows, block_cols);
  for (int p = 0; p < block_rows; ++p)
    for (int q = 0; q < block_cols; ++q) {
      if constexpr (std::is_same_v<M, IntMatrix> || std::is_same_v<M, RatMatrix>)
        r.at(p, q) = a.get(i * block_rows + p, j * block_cols + q);
      else
        r.set(p, q, a.get(i * block_rows + p, j * block_cols + q));
    }
  return r;
}

template <typename M>
void set_block(M& dst, int block_rows, int block_cols, int i, int j, const M& src) {
  detail::check_block(dst.rows(), dst.cols(), block_rows, block_cols, i, j);
  if (src.rows() != block_rows || src.cols() != block_cols)
    throw std::invalid_argument("block shape mismatch");
  for (int p = 0; p < block_rows; ++p)
    for (int q = 0; q < block_cols; ++q) {
      if constexpr (std::is_same_v<M, IntMatrix> || std::is_same_v<M, RatMatrix>)
        dst.at(i * block_rows + p, j * block_cols + q) = src.get(p, q);
      else
        dst.set(i * block_rows + p, j * block_cols + q, src.get(p, q));
    }
}

// ---- traces ----

inline std::int64_t trace(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("trace of non-square matrix");
  std::int64_t s = 0;
  for (int i = 0; i < a.rows(); ++i) s = IntMatrix::checked_add(s, a.get(i, i));
  return s;
}

inline Rational trace(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("trace of non-square matrix");
  Rational s;
  for (int i = 0; i < a.rows(); ++i) s += a.get(i, i);
  return s;
}

inline std::int64_t trace(const SignMatrix& a) { return trace(to_int(a)); }
inline std::int64_t trace(const BinMatrix& a) { return trace(to_int(a)); }

}  // namespace mubh
