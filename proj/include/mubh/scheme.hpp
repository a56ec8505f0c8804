#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mubh/matrix.hpp"

namespace mubh {

/// Scheme-axiom violation with the first failing witness in the message.
class scheme_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vertex set plus a total symmetric labeling of ordered pairs into classes
/// 0..d, with class 0 the identity relation and every class nonempty.
class RelationPartition {
 public:
  RelationPartition(int size, int d, std::vector<std::uint8_t> relmap)
      : size_(size), d_(d), relmap_(std::move(relmap)) {
    if (size <= 0 || d < 1 || d > 200) throw std::invalid_argument("bad scheme shape");
    if (relmap_.size() != static_cast<std::size_t>(size) * size)
      throw std::invalid_argument("relation map size mismatch");
    std::vector<std::int64_t> count(d + 1, 0);
    for (int x = 0; x < size; ++x)
      for (int y = 0; y < size; ++y) {
        int c = relmap_[idx(x, y)];
        if (c > d)
          throw scheme_error("class index " + std::to_string(c) + " out of range at (" +
                             std::to_string(x) + "," + std::to_string(y) + ")");
        if (c != relmap_[idx(y, x)])
          throw scheme_error("relation not symmetric at (" + std::to_string(x) + "," +
                             std::to_string(y) + ")");
        if ((c == 0) != (x == y))
          throw scheme_error("class 0 is not the identity relation at (" + std::to_string(x) +
                             "," + std::to_string(y) + ")");
        ++count[c];
      }
    for (int c = 0; c <= d; ++c)
      if (count[c] == 0) throw scheme_error("class " + std::to_string(c) + " is empty");
    planes_.reserve(d + 1);
    for (int c = 0; c <= d; ++c) planes_.emplace_back(size, size);
    for (int x = 0; x < size; ++x)
      for (int y = 0; y < size; ++y) planes_[relmap_[idx(x, y)]].set(x, y, true);
  }

  int size() const { return size_; }
  int classes() const { return d_; }

  int rel(int x, int y) const { return relmap_[idx(x, y)]; }

  const detail::BitPlane& plane(int c) const { return planes_.at(c); }

  BinMatrix adjacency(int c) const {
    BinMatrix m(size_, size_);
    for (int x = 0; x < size_; ++x)
      for (int y = 0; y < size_; ++y)
        if (rel(x, y) == c) m.set(x, y, 1);
    return m;
  }

  std::int64_t valency(int c) const { return planes_.at(c).row_popcount(0); }

  /// New scheme with vertex x renamed to position perm[x].
  RelationPartition permuted(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != size_) throw std::invalid_argument("bad permutation");
    std::vector<std::uint8_t> r(relmap_.size());
    for (int x = 0; x < size_; ++x)
      for (int y = 0; y < size_; ++y)
        r[static_cast<std::size_t>(perm[x]) * size_ + perm[y]] = relmap_[idx(x, y)];
    return RelationPartition(size_, d_, std::move(r));
  }

  friend bool operator==(const RelationPartition& a, const RelationPartition& b) {
    return a.size_ == b.size_ && a.d_ == b.d_ && a.relmap_ == b.relmap_;
  }

 private:
  std::size_t idx(int x, int y) const { return static_cast<std::size_t>(x) * size_ + y; }

  int size_, d_;
  std::vector<std::uint8_t> relmap_;
  std::vector<detail::BitPlane> planes_;
};

/// Structure constants p[i][j][k] of a verified scheme.
class IntersectionTensor {
 public:
  IntersectionTensor(int d, int size) : d_(d), size_(size), p_((d + 1) * (d + 1) * (d + 1), 0) {}

  int classes() const { return d_; }
  int scheme_size() const { return size_; }

  std::int64_t& at(int i, int j, int k) { return p_[(static_cast<std::size_t>(i) * (d_ + 1) + j) * (d_ + 1) + k]; }
  std::int64_t get(int i, int j, int k) const {
    return p_[(static_cast<std::size_t>(i) * (d_ + 1) + j) * (d_ + 1) + k];
  }

  std::int64_t valency(int i) const { return get(i, i, 0); }

  friend bool operator==(const IntersectionTensor& a, const IntersectionTensor& b) {
    return a.d_ == b.d_ && a.p_ == b.p_;
  }

 private:
  int d_, size_;
  std::vector<std::int64_t> p_;
};

enum class VerifyStrategy { automatic, products, counting };

/// Checks axiom (3): every product A_i A_j is constant on each class, and
/// returns the intersection tensor. Axioms (1)-(2) are structural and already
/// enforced by RelationPartition. Throws scheme_error with the first failing
/// (i,j,k,x,y). Above 256 vertices entries are counted pairwise on the packed
/// rows instead of materializing integer products; both paths agree exactly.
inline IntersectionTensor verify_scheme(const RelationPartition& rels,
                                        VerifyStrategy strategy = VerifyStrategy::automatic) {
  int n = rels.size(), d = rels.classes();
  bool counting = strategy == VerifyStrategy::counting ||
                  (strategy == VerifyStrategy::automatic && n > 256);
  IntersectionTensor tensor(d, n);
  std::vector<char> seen((d + 1) * (d + 1) * (d + 1), 0);
  auto record = [&](int i, int j, int x, int y, std::int64_t value) {
    int k = rels.rel(x, y);
    std::size_t key = (static_cast<std::size_t>(i) * (d + 1) + j) * (d + 1) + k;
    if (!seen[key]) {
      seen[key] = 1;
      tensor.at(i, j, k) = value;
      tensor.at(j, i, k) = value;
    } else if (tensor.get(i, j, k) != value) {
      throw scheme_error("axiom (3) fails: (A_" + std::to_string(i) + " A_" + std::to_string(j) +
                         ")(" + std::to_string(x) + "," + std::to_string(y) + ") = " +
                         std::to_string(value) + " but class " + std::to_string(k) +
                         " already gave " + std::to_string(tensor.get(i, j, k)));
    }
  };
  for (int i = 0; i <= d; ++i) {
    for (int j = i; j <= d; ++j) {
      if (counting) {
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y)
            record(i, j, x, y,
                   detail::BitPlane::and_popcount(rels.plane(i), x, rels.plane(j), y));
      } else {
        // full product on the packed planes
        IntMatrix prod(n, n);
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y)
            prod.at(x, y) = detail::BitPlane::and_popcount(rels.plane(i), x, rels.plane(j), y);
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y) record(i, j, x, y, prod.get(x, y));
      }
    }
  }
  return tensor;
}

/// Vertices grouped into p fibers of equal size q.
struct FiberPartition {
  int p = 0, q = 0;
  std::vector<int> fiber_of;               // vertex -> fiber index
  std::vector<std::vector<int>> fibers;    // fiber -> vertices, in discovery order
};

/// Connected components of sum of the classes in idx_set, which must form a
/// disjoint union of equal-size cliques (I_p (x) J_q after reordering).
inline FiberPartition find_fibers(const RelationPartition& rels, const std::vector<int>& idx_set) {
  int n = rels.size();
  std::vector<char> in_set(rels.classes() + 1, 0);
  bool has_zero = false;
  for (int c : idx_set) {
    if (c < 0 || c > rels.classes()) throw std::invalid_argument("class index out of range");
    in_set[c] = 1;
    if (c == 0) has_zero = true;
  }
  if (!has_zero) throw std::invalid_argument("index set must contain class 0");

  FiberPartition fp;
  fp.fiber_of.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    if (fp.fiber_of[v] != -1) continue;
    std::vector<int> comp{v};
    fp.fiber_of[v] = static_cast<int>(fp.fibers.size());
    for (std::size_t head = 0; head < comp.size(); ++head) {
      int x = comp[head];
      for (int y = 0; y < n; ++y)
        if (in_set[rels.rel(x, y)] && fp.fiber_of[y] == -1) {
          fp.fiber_of[y] = fp.fiber_of[v];
          comp.push_back(y);
        }
    }
    fp.fibers.push_back(std::move(comp));
  }
  fp.p = static_cast<int>(fp.fibers.size());
  fp.q = static_cast<int>(fp.fibers[0].size());
  for (const auto& f : fp.fibers)
    if (static_cast<int>(f.size()) != fp.q)
      throw scheme_error("fibers have unequal sizes " + std::to_string(fp.q) + " and " +
                         std::to_string(f.size()));
  // components must be cliques under the index set
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      bool same = fp.fiber_of[x] == fp.fiber_of[y];
      if (same != static_cast<bool>(in_set[rels.rel(x, y)]))
        throw scheme_error("index set is not an imprimitivity system at (" + std::to_string(x) +
                           "," + std::to_string(y) + ")");
    }
  return fp;
}

struct QuotientResult {
  RelationPartition quotient;
  std::vector<std::vector<int>> index_classes;  // equivalence classes of 0..d, class of I first
  FiberPartition fibers;
  std::vector<int> ordering;  // vertices sorted fiber-major
};

/// Quotient scheme on the fibers of the index set I, together with the
/// equivalence classes of relation indices under j ~ k iff p_ijk != 0 for
/// some i in I.
inline QuotientResult quotient_scheme(const RelationPartition& rels, const std::vector<int>& idx_set) {
  FiberPartition fp = find_fibers(rels, idx_set);
  IntersectionTensor tensor = verify_scheme(rels);
  int d = rels.classes();

  // union-find over relation indices
  std::vector<int> parent(d + 1);
  for (int i = 0; i <= d; ++i) parent[i] = i;
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (int c : idx_set) unite(c, 0);
  for (int i : idx_set)
    for (int j = 0; j <= d; ++j)
      for (int k = 0; k <= d; ++k)
        if (tensor.get(i, j, k) != 0) unite(j, k);

  std::map<int, int> root_to_class;
  root_to_class[find(0)] = 0;
  std::vector<std::vector<int>> index_classes(1);
  for (int j = 0; j <= d; ++j) {
    int r = find(j);
    if (!root_to_class.count(r)) {
      root_to_class[r] = static_cast<int>(index_classes.size());
      index_classes.emplace_back();
    }
    index_classes[root_to_class[r]].push_back(j);
  }

  // label fiber pairs by the index class of the relations between them
  int p = fp.p;
  std::vector<std::uint8_t> qmap(static_cast<std::size_t>(p) * p, 0);
  for (int u = 0; u < p; ++u)
    for (int v = 0; v < p; ++v) {
      if (u == v) continue;
      int expect = -1;
      for (int x : fp.fibers[u])
        for (int y : fp.fibers[v]) {
          int cls = root_to_class.at(find(rels.rel(x, y)));
          if (expect == -1)
            expect = cls;
          else if (expect != cls)
            throw scheme_error("fiber pair (" + std::to_string(u) + "," + std::to_string(v) +
                               ") meets two index classes");
        }
      qmap[static_cast<std::size_t>(u) * p + v] = static_cast<std::uint8_t>(expect);
    }
  int t = static_cast<int>(index_classes.size()) - 1;
  if (t < 1) throw scheme_error("quotient would have no classes");

  std::vector<int> ordering;
  ordering.reserve(rels.size());
  for (const auto& f : fp.fibers) ordering.insert(ordering.end(), f.begin(), f.end());

  return QuotientResult{RelationPartition(p, t, std::move(qmap)), std::move(index_classes),
                        std::move(fp), std::move(ordering)};
}

struct UniformityResult {
  bool uniform = false;
  std::string failure;  // empty when uniform
  // coefficients a[i][j][k], indexed like the intersection tensor
  std::vector<std::int64_t> coeff;
  int d = 0;
  std::int64_t a(int i, int j, int k) const {
    return coeff[(static_cast<std::size_t>(i) * (d + 1) + j) * (d + 1) + k];
  }
};

/// Uniformity of an imprimitive scheme over the given fibers: the quotient is
/// class 1 and the block products A_i^{UV} A_j^{VW} decompose with the same
/// coefficients a_ij^k for every fiber triple (U,V,W).
inline UniformityResult is_uniform(const RelationPartition& rels, const FiberPartition& fp) {
  UniformityResult res;
  res.d = rels.classes();
  int d = rels.classes(), n = rels.size();
  if (static_cast<int>(fp.fiber_of.size()) != n || fp.p * fp.q != n) {
    res.failure = "fiber partition does not cover the vertex set";
    return res;
  }

  // index set = classes meeting a fiber; must be exactly the intra-fiber classes
  std::vector<char> in_set(d + 1, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (fp.fiber_of[x] == fp.fiber_of[y]) in_set[rels.rel(x, y)] = 1;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (fp.fiber_of[x] != fp.fiber_of[y] && in_set[rels.rel(x, y)]) {
        res.failure = "class " + std::to_string(rels.rel(x, y)) +
                      " appears both inside and between fibers, e.g. at (" + std::to_string(x) +
                      "," + std::to_string(y) + ")";
        return res;
      }

  // class-1 quotient: every pair of distinct fibers must see every cross class
  // grouped identically; with the partition above this reduces to checking the
  // quotient has a single nontrivial class, via quotient_scheme.
  std::vector<int> idx_set;
  for (int c = 0; c <= d; ++c)
    if (in_set[c]) idx_set.push_back(c);
  try {
    QuotientResult q = quotient_scheme(rels, idx_set);
    if (q.quotient.classes() != 1) {
      res.failure = "quotient scheme has " + std::to_string(q.quotient.classes()) +
                    " classes, expected 1";
      return res;
    }
  } catch (const scheme_error& e) {
    res.failure = e.what();
    return res;
  }

  // extract packed blocks per (class, fiber pair)
  int p = fp.p, q = fp.q;
  auto blk = [&](int cls, int u, int v) {
    detail::BitPlane b(q, q);
    for (int x = 0; x < q; ++x) {
      int vx = fp.fibers[u][x];
      for (int y = 0; y < q; ++y)
        if (rels.rel(vx, fp.fibers[v][y]) == cls) b.set(x, y, true);
    }
    return b;
  };
  std::vector<detail::BitPlane> blocks;
  blocks.reserve(static_cast<std::size_t>(d + 1) * p * p);
  for (int cls = 0; cls <= d; ++cls)
    for (int u = 0; u < p; ++u)
      for (int v = 0; v < p; ++v) blocks.push_back(blk(cls, u, v));
  auto block_of = [&](int cls, int u, int v) -> const detail::BitPlane& {
    return blocks[(static_cast<std::size_t>(cls) * p + u) * p + v];
  };

  res.coeff.assign(static_cast<std::size_t>(d + 1) * (d + 1) * (d + 1), 0);
  std::vector<char> have(static_cast<std::size_t>(d + 1) * (d + 1) * (d + 1), 0);

  for (int u = 0; u < p; ++u)
    for (int v = 0; v < p; ++v)
      for (int w = 0; w < p; ++w)
        for (int i = 0; i <= d; ++i) {
          if (static_cast<bool>(in_set[i]) != (u == v)) continue;  // i needs edges between U and V
          const detail::BitPlane& bi = block_of(i, u, v);
          for (int j = 0; j <= d; ++j) {
            if (static_cast<bool>(in_set[j]) != (v == w)) continue;
            // column y of A_j^{VW} is row y of A_j^{WV}
            const detail::BitPlane& bjt = block_of(j, w, v);
            for (int x = 0; x < q; ++x)
              for (int y = 0; y < q; ++y) {
                // (A_i^{UV} A_j^{VW})(x,y) = |{z in V : A_i(x,z) A_j(z,y)}|
                std::int64_t val = detail::BitPlane::and_popcount(bi, x, bjt, y);
                int vx = fp.fibers[u][x], vy = fp.fibers[w][y];
                int kcls = rels.rel(vx, vy);
                std::size_t key = (static_cast<std::size_t>(i) * (d + 1) + j) * (d + 1) + kcls;
                if (!have[key]) {
                  have[key] = 1;
                  res.coeff[key] = val;
                } else if (res.coeff[key] != val) {
                  res.failure = "a(" + std::to_string(i) + "," + std::to_string(j) +
                                ") differs across fiber triples at (" + std::to_string(u) + "," +
                                std::to_string(v) + "," + std::to_string(w) + ")";
                  return res;
                }
              }
          }
        }
  res.uniform = true;
  return res;
}

struct SrgParams {
  std::int64_t v, k, lambda, mu;
  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

/// Strongly regular graph parameters of a symmetric zero-diagonal adjacency
/// matrix, if any: A^2 = kI + lambda A + mu (J - I - A).
inline std::optional<SrgParams> is_srg(const BinMatrix& a) {
  int n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("adjacency matrix must be square");
  for (int i = 0; i < n; ++i) {
    if (a.get(i, i)) throw std::invalid_argument("adjacency matrix has a loop");
    for (int j = 0; j < n; ++j)
      if (a.get(i, j) != a.get(j, i)) throw std::invalid_argument("adjacency matrix not symmetric");
  }
  std::int64_t k = a.row_sum(0);
  for (int i = 1; i < n; ++i)
    if (a.row_sum(i) != k) return std::nullopt;
  std::int64_t lambda = -1, mu = -1;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      std::int64_t common = detail::BitPlane::and_popcount(a.plane(), x, a.plane(), y);
      std::int64_t& slot = a.get(x, y) ? lambda : mu;
      if (slot == -1)
        slot = common;
      else if (slot != common)
        return std::nullopt;
    }
  return SrgParams{n, k, lambda, mu};
}

struct DezaParams {
  std::int64_t v, k, b, a;
  friend bool operator==(const DezaParams&, const DezaParams&) = default;
};

/// Deza graph parameters: regular, and the common-neighbour counts of
/// distinct vertices take at most two values b >= a.
inline std::optional<DezaParams> is_deza(const BinMatrix& adj) {
  int n = adj.rows();
  if (n != adj.cols()) throw std::invalid_argument("adjacency matrix must be square");
  for (int i = 0; i < n; ++i) {
    if (adj.get(i, i)) throw std::invalid_argument("adjacency matrix has a loop");
    for (int j = 0; j < n; ++j)
      if (adj.get(i, j) != adj.get(j, i)) throw std::invalid_argument("adjacency matrix not symmetric");
  }
  std::int64_t k = adj.row_sum(0);
  for (int i = 1; i < n; ++i)
    if (adj.row_sum(i) != k) return std::nullopt;
  std::int64_t v1 = -1, v2 = -1;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      std::int64_t common = detail::BitPlane::and_popcount(adj.plane(), x, adj.plane(), y);
      if (v1 == -1 || v1 == common) {
        v1 = common;
      } else if (v2 == -1 || v2 == common) {
        v2 = common;
      } else {
        return std::nullopt;
      }
    }
  if (v2 == -1) v2 = v1;
  return DezaParams{n, k, std::max(v1, v2), std::min(v1, v2)};
}

}  // namespace mubh
