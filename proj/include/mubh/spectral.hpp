#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mubh/matrix.hpp"
#include "mubh/rational.hpp"
#include "mubh/scheme.hpp"

namespace mubh {

/// A structural claim failed to certify against the data.
class certification_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SchemeFamily { class3, class5, class8, fusion4 };

inline const char* family_name(SchemeFamily f) {
  switch (f) {
    case SchemeFamily::class3: return "class3";
    case SchemeFamily::class5: return "class5";
    case SchemeFamily::class8: return "class8";
    case SchemeFamily::fusion4: return "fusion4";
  }
  return "?";
}

struct ClosedFormPQ {
  std::optional<RatMatrix> P;  // absent for class8 and fusion4
  RatMatrix Q;
};

/// Reference eigenmatrices for the scheme families built by this kit,
/// parameterized by n and m. Rows are indexed by relation classes, columns by
/// idempotents; row 0 of Q lists the multiplicities, row 0 of P the valencies.
inline ClosedFormPQ closed_form_PQ(int n, int m, SchemeFamily family) {
  if (n < 1 || m < 1 || m > 2 * n - 1)
    throw std::invalid_argument("parameters out of range (need 1 <= m <= 2n-1)");
  const std::int64_t N = n, M = m;
  auto R = [](std::int64_t v) { return Rational(v); };
  switch (family) {
    case SchemeFamily::class3: {
      RatMatrix P = RatMatrix::from_rows({
          {R(1), R(N * (2 * N + 1) * M), R(N * (2 * N - 1) * M), R(4 * N * N - 1)},
          {R(1), R(N * M), R(-N * M), R(-1)},
          {R(1), R(-N), R(N), R(-1)},
          {R(1), R(-N * (2 * N + 1)), R(-N * (2 * N - 1)), R(4 * N * N - 1)},
      });
      RatMatrix Q = RatMatrix::from_rows({
          {R(1), R(4 * N * N - 1), R((4 * N * N - 1) * M), R(M)},
          {R(1), R(2 * N - 1), R(-2 * N + 1), R(1)},
          {R(1), R(-2 * N - 1), R(2 * N + 1), R(1)},
          {R(1), R(-1), R(-M), R(M)},
      });
      return {P, Q};
    }
    case SchemeFamily::class5: {
      RatMatrix P = RatMatrix::from_rows({
          {R(1), R(2 * N - 1), R(2 * N * (2 * N - 1)), R(2 * N * M), R(N * (2 * N - 1) * M),
           R(N * (2 * N - 1) * M)},
          {R(1), R(-1), R(0), R(0), R(N * M), R(-N * M)},
          {R(1), R(2 * N - 1), R(-2 * N), R(2 * N * M), R(-N * M), R(-N * M)},
          {R(1), R(2 * N - 1), R(-2 * N), R(-2 * N), R(N), R(N)},
          {R(1), R(-1), R(0), R(0), R(-N), R(N)},
          {R(1), R(2 * N - 1), R(2 * N * (2 * N - 1)), R(-2 * N), R(-N * (2 * N - 1)),
           R(-N * (2 * N - 1))},
      });
      RatMatrix Q = RatMatrix::from_rows({
          {R(1), R(2 * N * (2 * N - 1)), R(2 * N - 1), R((2 * N - 1) * M),
           R(2 * N * (2 * N - 1) * M), R(M)},
          {R(1), R(-2 * N), R(2 * N - 1), R((2 * N - 1) * M), R(-2 * N * M), R(M)},
          {R(1), R(0), R(-1), R(-M), R(0), R(M)},
          {R(1), R(0), R(2 * N - 1), R(-2 * N + 1), R(0), R(-1)},
          {R(1), R(2 * N), R(-1), R(1), R(-2 * N), R(-1)},
          {R(1), R(-2 * N), R(-1), R(1), R(2 * N), R(-1)},
      });
      return {P, Q};
    }
    case SchemeFamily::class8: {
      RatMatrix Q = RatMatrix::from_rows({
          {R(1), R(2 * N * (2 * N - 1)), R(2 * N), R(2 * N - 1), R(2 * N * (2 * N - 1) * (M + 1)),
           R((2 * N - 1) * M), R(2 * N * M), R(2 * N * (2 * N - 1) * M), R(M)},
          {R(1), R(-2 * N), R(2 * N), R(2 * N - 1), R(-2 * N * (M + 1)), R((2 * N - 1) * M),
           R(2 * N * M), R(-2 * N * M), R(M)},
          {R(1), R(2 * N), R(-2 * N), R(2 * N - 1), R(-2 * N * (M + 1)), R((2 * N - 1) * M),
           R(-2 * N * M), R(2 * N * M), R(M)},
          {R(1), R(0), R(0), R(-1), R(0), R(-M), R(0), R(0), R(M)},
          {R(1), R(0), R(2 * N), R(2 * N - 1), R(0), R(-2 * N + 1), R(-2 * N), R(0), R(-1)},
          {R(1), R(0), R(-2 * N), R(2 * N - 1), R(0), R(-2 * N + 1), R(2 * N), R(0), R(-1)},
          {R(1), R(2 * N), R(0), R(-1), R(0), R(1), R(0), R(-2 * N), R(-1)},
          {R(1), R(-2 * N), R(0), R(-1), R(0), R(1), R(0), R(2 * N), R(-1)},
          {R(1), R(-2 * N * (2 * N - 1)), R(-2 * N), R(2 * N - 1), R(2 * N * (2 * N - 1) * (M + 1)),
           R((2 * N - 1) * M), R(-2 * N * M), R(-2 * N * (2 * N - 1) * M), R(M)},
      });
      return {std::nullopt, Q};
    }
    case SchemeFamily::fusion4: {
      RatMatrix Q = RatMatrix::from_rows({
          {R(1), R(4 * N * N), R((4 * N * N - 1) * (M + 1)), R(4 * N * N * M), R(M)},
          {R(1), R(0), R(-M - 1), R(0), R(M)},
          {R(1), R(2 * N), R(0), R(-2 * N), R(-1)},
          {R(1), R(-2 * N), R(0), R(2 * N), R(-1)},
          {R(1), R(-4 * N * N), R((4 * N * N - 1) * (M + 1)), R(-4 * N * N * M), R(M)},
      });
      return {std::nullopt, Q};
    }
  }
  throw std::invalid_argument("unknown scheme family");
}

/// Reference Krein matrix per family: B_1^* for class3, B_5^* for class5 and
/// the 9x9 table for class8 (whose index the caller matches against data).
inline RatMatrix krein_reference(SchemeFamily family, int n, int m) {
  const std::int64_t N = n, M = m;
  auto R = [](std::int64_t v) { return Rational(v); };
  switch (family) {
    case SchemeFamily::class3:
      return RatMatrix::from_rows({
          {R(0), R(1), R(0), R(0)},
          {R(4 * N * N - 1), Rational(2 * (2 * N * N - M - 1), M + 1), Rational(4 * N * N, M + 1),
           R(0)},
          {R(0), Rational(4 * N * N * M, M + 1), Rational((4 * N * N - 2) * M - 2, M + 1),
           R(4 * N * N - 1)},
          {R(0), R(0), R(1), R(0)},
      });
    case SchemeFamily::class5:
      return RatMatrix::from_rows({
          {R(0), R(0), R(0), R(0), R(0), R(1)},
          {R(0), R(0), R(0), R(0), R(1), R(0)},
          {R(0), R(0), R(0), R(1), R(0), R(0)},
          {R(0), R(0), R(M), R(M - 1), R(0), R(0)},
          {R(0), R(M), R(0), R(0), R(M - 1), R(0)},
          {R(M), R(0), R(0), R(0), R(0), R(M - 1)},
      });
    case SchemeFamily::class8:
      return RatMatrix::from_rows({
          {R(0), R(0), R(0), R(0), R(0), R(0), R(0), R(0), R(1)},
          {R(0), R(0), R(0), R(0), R(0), R(0), R(0), R(1), R(0)},
          {R(0), R(0), R(0), R(0), R(0), R(0), R(1), R(0), R(0)},
          {R(0), R(0), R(0), R(0), R(0), R(1), R(0), R(0), R(0)},
          {R(0), R(0), R(0), R(0), R(M), R(0), R(0), R(0), R(0)},
          {R(0), R(0), R(0), R(M), R(0), R(M - 1), R(0), R(0), R(0)},
          {R(0), R(0), R(M), R(0), R(0), R(0), R(M - 1), R(0), R(0)},
          {R(0), R(M), R(0), R(0), R(0), R(0), R(0), R(M - 1), R(0)},
          {R(M), R(0), R(0), R(0), R(0), R(0), R(0), R(0), R(M - 1)},
      });
    case SchemeFamily::fusion4:
      throw std::invalid_argument("no reference Krein matrix for the fusion family");
  }
  throw std::invalid_argument("unknown scheme family");
}

/// Exact idempotents E_j = (1/|X|) sum_i Q_ij A_i together with both
/// eigenmatrices and multiplicities, fully certified: E_0 = J/|X|,
/// sum E_j = I, E_j E_k = delta_jk E_j, and P Q = Q P = |X| I.
struct EigenData {
  int size = 0;  // |X|
  RatMatrix Q{1, 1}, P{1, 1};
  std::vector<Rational> multiplicities;
  std::vector<std::int64_t> valencies;
  // scaled form: E_j = numerators[j] / den with den = |X| * lcm(Q denominators)
  std::vector<IntMatrix> numerators;
  std::int64_t den = 1;

  int classes() const { return Q.rows() - 1; }
  RatMatrix idempotent(int j) const {
    const IntMatrix& n = numerators.at(j);
    RatMatrix e(n.rows(), n.cols());
    for (int x = 0; x < n.rows(); ++x)
      for (int y = 0; y < n.cols(); ++y) e.at(x, y) = Rational(n.get(x, y), den);
    return e;
  }
};

/// Builds and certifies the idempotents of a candidate second eigenmatrix Q.
/// Throws certification_error naming the first failing identity; success
/// certifies that Q is the scheme's second eigenmatrix. When the verified
/// intersection tensor is supplied the quadratic identities are checked on it
/// instead of on materialized matrix products; the two routes agree exactly.
inline EigenData idempotents_from_Q(const RelationPartition& rels, const RatMatrix& Q,
                                    const IntersectionTensor* tensor = nullptr) {
  int d = rels.classes(), nverts = rels.size();
  if (Q.rows() != d + 1 || Q.cols() != d + 1)
    throw std::invalid_argument("Q has the wrong shape for this scheme");

  // common denominator
  std::int64_t lcm = 1;
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d; ++j) {
      std::int64_t dj = Q.get(i, j).den();
      lcm = IntMatrix::checked_mul(lcm / std::gcd(lcm, dj), dj);
    }
  std::int64_t den = IntMatrix::checked_mul(lcm, nverts);

  // scaled numerator value of E_j on a class-i pair
  auto nval = [&](int cls, int j) {
    const Rational& q = Q.get(cls, j);
    return q.num() * (lcm / q.den());
  };

  // E_0 = J/|X|  <=>  column 0 of Q is all ones
  for (int i = 0; i <= d; ++i)
    if (Q.get(i, 0) != Rational(1))
      throw certification_error("E_0 != J/|X|: Q(" + std::to_string(i) + ",0) = " +
                                Q.get(i, 0).str());
  // sum_j E_j = I  <=>  row sums of Q are (|X|, 0, ..., 0)
  for (int i = 0; i <= d; ++i) {
    Rational s;
    for (int j = 0; j <= d; ++j) s += Q.get(i, j);
    Rational want = i == 0 ? Rational(nverts) : Rational(0);
    if (s != want)
      throw certification_error("sum of idempotents is not I: row " + std::to_string(i) +
                                " of Q sums to " + s.str());
  }

  EigenData eig;
  eig.size = nverts;
  eig.Q = Q;
  eig.den = den;
  eig.valencies.resize(d + 1);
  for (int i = 0; i <= d; ++i) eig.valencies[i] = rels.valency(i);

  // multiplicities: trace(E_j) = Q(0,j), and they must be positive
  for (int j = 0; j <= d; ++j) {
    eig.multiplicities.push_back(Q.get(0, j));
    if (!(Q.get(0, j) > Rational(0)))
      throw certification_error("multiplicity " + std::to_string(j) + " = " + Q.get(0, j).str() +
                                " is not positive");
  }

  // idempotency and mutual orthogonality: N_j N_k = delta_jk den N_j
  if (tensor != nullptr) {
    for (int j = 0; j <= d; ++j)
      for (int k = j; k <= d; ++k)
        for (int t = 0; t <= d; ++t) {
          Rational lhs;
          for (int l = 0; l <= d; ++l)
            for (int l2 = 0; l2 <= d; ++l2) {
              if (tensor->get(l, l2, t) == 0) continue;
              lhs += Q.get(l, j) * Q.get(l2, k) * Rational(tensor->get(l, l2, t));
            }
          Rational rhs = j == k ? Rational(nverts) * Q.get(t, j) : Rational(0);
          if (lhs != rhs)
            throw certification_error("E_" + std::to_string(j) + " E_" + std::to_string(k) +
                                      " is not " + (j == k ? "idempotent" : "orthogonal") +
                                      " on class " + std::to_string(t));
        }
    for (int j = 0; j <= d; ++j) {
      IntMatrix nj(nverts, nverts);
      for (int x = 0; x < nverts; ++x)
        for (int y = 0; y < nverts; ++y) nj.at(x, y) = nval(rels.rel(x, y), j);
      eig.numerators.push_back(std::move(nj));
    }
  } else {
    for (int j = 0; j <= d; ++j) {
      IntMatrix nj(nverts, nverts);
      for (int x = 0; x < nverts; ++x)
        for (int y = 0; y < nverts; ++y) nj.at(x, y) = nval(rels.rel(x, y), j);
      eig.numerators.push_back(std::move(nj));
    }
    for (int j = 0; j <= d; ++j)
      for (int k = j; k <= d; ++k) {
        IntMatrix prod = mul(eig.numerators[j], eig.numerators[k]);
        for (int x = 0; x < nverts; ++x)
          for (int y = 0; y < nverts; ++y) {
            std::int64_t want = j == k ? IntMatrix::checked_mul(den, eig.numerators[j].get(x, y)) : 0;
            if (prod.get(x, y) != want)
              throw certification_error("E_" + std::to_string(j) + " E_" + std::to_string(k) +
                                        " fails at (" + std::to_string(x) + "," +
                                        std::to_string(y) + ")");
          }
      }
  }

  // first eigenmatrix from the duality P_ij = k_j Q_ji / m_i, then certify
  // P Q = Q P = |X| I, which pins A_j = sum_i P_ij E_i exactly.
  eig.P = RatMatrix(d + 1, d + 1);
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d; ++j)
      eig.P.at(i, j) = Rational(eig.valencies[j]) * Q.get(j, i) / eig.multiplicities[i];
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d; ++j) {
      Rational pq, qp;
      for (int l = 0; l <= d; ++l) {
        pq += eig.P.get(i, l) * Q.get(l, j);
        qp += Q.get(i, l) * eig.P.get(l, j);
      }
      Rational want = i == j ? Rational(nverts) : Rational(0);
      if (pq != want || qp != want)
        throw certification_error("PQ = |X| I fails at (" + std::to_string(i) + "," +
                                  std::to_string(j) + ")");
    }
  return eig;
}

/// Krein parameters q_ij^k and the Krein matrices B_i^* = (q_ij^k)_{j,k}.
struct KreinResult {
  int d = 0;
  std::vector<Rational> q;
  bool nonnegative = true;

  const Rational& at(int i, int j, int k) const {
    return q[(static_cast<std::size_t>(i) * (d + 1) + j) * (d + 1) + k];
  }
  RatMatrix krein_matrix(int i) const {
    RatMatrix b(d + 1, d + 1);
    for (int j = 0; j <= d; ++j)
      for (int k = 0; k <= d; ++k) b.at(j, k) = at(i, j, k);
    return b;
  }
};

/// q_ij^k = (|X|/m_k) trace((E_i o E_j) E_k); everything is constant on
/// classes, so the trace collapses to a sum over classes weighted by the
/// valencies. Exact rationals throughout.
inline KreinResult krein_params(const EigenData& eig) {
  int d = eig.classes();
  KreinResult res;
  res.d = d;
  res.q.assign(static_cast<std::size_t>(d + 1) * (d + 1) * (d + 1), Rational(0));
  for (int i = 0; i <= d; ++i)
    for (int j = i; j <= d; ++j)
      for (int k = 0; k <= d; ++k) {
        Rational s;
        for (int t = 0; t <= d; ++t)
          s += Rational(eig.valencies[t]) * eig.Q.get(t, i) * eig.Q.get(t, j) * eig.Q.get(t, k);
        Rational val = s / (eig.multiplicities[k] * Rational(eig.size));
        res.q[(static_cast<std::size_t>(i) * (d + 1) + j) * (d + 1) + k] = val;
        res.q[(static_cast<std::size_t>(j) * (d + 1) + i) * (d + 1) + k] = val;
        if (val < Rational(0)) res.nonnegative = false;
      }
  return res;
}

struct KreinBound {
  Rational value;  // (2n - m - 1)/(m + 1)
  bool ok;         // m <= 2n - 1
};

/// The feasibility bound on family size: q_{1,2}^1 = (2n-m-1)/(m+1) must be
/// nonnegative, i.e. m <= 2n-1.
inline KreinBound krein_bound_check(int n, int m) {
  Rational v(2 * static_cast<std::int64_t>(n) - m - 1, m + 1);
  return KreinBound{v, m <= 2 * n - 1};
}

struct QStructureFlags {
  bool q_polynomial = false;
  bool q_bipartite = false;
  bool q_antipodal = false;
};

/// Structure of B_1^* under the given ordering of idempotents (ordering[0]
/// must be 0): Q-polynomial iff tridiagonal with nonzero off-diagonals,
/// Q-bipartite iff additionally the diagonal vanishes, Q-antipodal iff
/// b*_j = c*_{d-j} for every j except floor(d/2).
inline QStructureFlags q_structure(const KreinResult& krein, const std::vector<int>& ordering) {
  int d = krein.d;
  if (static_cast<int>(ordering.size()) != d + 1 || ordering[0] != 0)
    throw std::invalid_argument("ordering must list all idempotents and start at 0");
  auto qq = [&](int i, int j, int k) {
    return krein.at(ordering[i], ordering[j], ordering[k]);
  };
  QStructureFlags f;
  f.q_polynomial = true;
  for (int j = 0; j <= d && f.q_polynomial; ++j)
    for (int k = 0; k <= d; ++k)
      if (std::abs(j - k) > 1 && !qq(1, j, k).is_zero()) {
        f.q_polynomial = false;
        break;
      }
  for (int j = 0; j < d && f.q_polynomial; ++j)
    if (qq(1, j, j + 1).is_zero()) f.q_polynomial = false;
  for (int j = 1; j <= d && f.q_polynomial; ++j)
    if (qq(1, j, j - 1).is_zero()) f.q_polynomial = false;
  if (!f.q_polynomial) return f;

  f.q_bipartite = true;
  for (int j = 0; j <= d; ++j)
    if (!qq(1, j, j).is_zero()) f.q_bipartite = false;

  f.q_antipodal = true;
  for (int j = 0; j < d; ++j) {
    if (j == d / 2) continue;
    if (qq(1, j, j + 1) != qq(1, d - j, d - j - 1)) f.q_antipodal = false;
  }
  return f;
}

struct KreinDisplayMatch {
  int index = -1;                // idempotent index whose B_i^* matches
  std::vector<int> ordering;    // idempotent ordering realizing the match
};

/// Searches which Krein matrix equals the reference table, over idempotent
/// orderings fixing E_0. Row 0 of any B_i^* is the indicator of column i, so
/// mismatched candidates die immediately and the search is cheap.
inline std::optional<KreinDisplayMatch> match_krein_reference(const KreinResult& krein,
                                                              const RatMatrix& ref) {
  int d = krein.d;
  if (ref.rows() != d + 1 || ref.cols() != d + 1) return std::nullopt;
  std::vector<int> perm(d + 1);
  std::iota(perm.begin(), perm.end(), 0);
  // display index: row 0 must be the indicator of some column l
  int display_index = -1;
  for (int k = 0; k <= d; ++k)
    if (ref.get(0, k) == Rational(1)) {
      if (display_index != -1) return std::nullopt;
      display_index = k;
    }
  if (display_index == -1) return std::nullopt;

  std::vector<int> tail(d);
  std::iota(tail.begin(), tail.end(), 1);
  do {
    perm[0] = 0;
    std::copy(tail.begin(), tail.end(), perm.begin() + 1);
    int i_actual = perm[display_index];
    bool ok = true;
    for (int j = 0; j <= d && ok; ++j)
      for (int k = 0; k <= d && ok; ++k)
        if (krein.at(i_actual, perm[j], perm[k]) != ref.get(j, k)) ok = false;
    if (ok) return KreinDisplayMatch{display_index, perm};
  } while (std::next_permutation(tail.begin(), tail.end()));
  return std::nullopt;
}

}  // namespace mubh
