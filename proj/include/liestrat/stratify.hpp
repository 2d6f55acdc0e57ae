#ifndef LIESTRAT_STRATIFY_HPP
#define LIESTRAT_STRATIFY_HPP

#include <string>
#include <vector>

#include "liestrat/flag.hpp"

namespace liestrat {

/// Skew form B_xi(x, y) = <xi, [x, y]> in flag coordinates.  Depends only on
/// the restriction of xi to [g, g].
template <typename K>
Mat<K> skew_form(const FlaggedAlgebra<K>& fa, const std::vector<K>& xi) {
  int m = fa.dim();
  if (int(xi.size()) != m) throw DimensionMismatch("skew_form: functional length mismatch");
  Mat<K> b(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      K v = vec_dot(xi, fa.alg.structure(i, j));
      b(i, j) = v;
      b(j, i) = -v;
    }
  return b;
}

/// Radical of the restriction of B_xi to the flag step g_j, as a subspace of
/// the ambient algebra:  N(B_j) = {x in g_j : xi([x, g_j]) = 0}.
template <typename K>
Subspace<K> restricted_radical(const FlaggedAlgebra<K>& fa, const std::vector<K>& xi, int j) {
  int m = fa.dim();
  if (j < 1 || j > m) throw DimensionMismatch("restricted_radical: step out of range");
  Mat<K> b = skew_form(fa, xi);
  Mat<K> block(j, j);
  for (int r = 0; r < j; ++r)
    for (int c = 0; c < j; ++c) block(r, c) = b(r, c);
  Mat<K> ker = block.kernel_basis_rows();  // rows live in g_j coordinates
  Mat<K> rows(ker.rows(), m);
  for (int r = 0; r < ker.rows(); ++r)
    for (int c = 0; c < j; ++c) rows(r, c) = ker(r, c);
  return Subspace<K>::from_rows(rows, m);
}

/// Stabilizer g(xi) = radical of the full form.
template <typename K>
Subspace<K> stabilizer(const FlaggedAlgebra<K>& fa, const std::vector<K>& xi) {
  return restricted_radical(fa, xi, fa.dim());
}

/// Multi-index of stabilizer dimensions along the flag: k_j = dim g_j(xi|g_j).
struct FineIndex {
  std::vector<int> k;  // k[j-1] = k_j

  FineIndex() = default;
  explicit FineIndex(std::vector<int> values) : k(std::move(values)) {
    for (size_t j = 0; j < k.size(); ++j)
      if (k[j] < 0 || k[j] > int(j) + 1)
        throw InvariantViolation("fine index k_" + std::to_string(j + 1) + " = " +
                                 std::to_string(k[j]) + " out of range [0, " +
                                 std::to_string(j + 1) + "]");
  }

  friend bool operator==(const FineIndex& a, const FineIndex& b) { return a.k == b.k; }
  friend bool operator!=(const FineIndex& a, const FineIndex& b) { return !(a == b); }
  friend bool operator<(const FineIndex& a, const FineIndex& b) { return a.k < b.k; }

  std::string to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < k.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(k[i]);
    }
    return s + ")";
  }
};

template <typename K>
FineIndex fine_index(const FlaggedAlgebra<K>& fa, const std::vector<K>& xi) {
  int m = fa.dim();
  std::vector<int> k(m, 0);
  for (int j = 1; j <= m; ++j) k[j - 1] = restricted_radical(fa, xi, j).dim();
  return FineIndex(std::move(k));
}

/// Jump set of a subspace W relative to the coordinate flag:
/// {j : e_j not in g_{j-1} + W}.  Always has cardinality dim(g) - dim(W).
template <typename K>
std::vector<int> jump_set(const Subspace<K>& w) {
  int m = w.ambient_dim();
  std::vector<int> jumps;
  Subspace<K> acc = w;
  for (int j = 1; j <= m; ++j) {
    std::vector<K> ej(m, K(0));
    ej[j - 1] = K(1);
    if (acc.contains(ej)) continue;
    jumps.push_back(j);
    acc = sum(acc, Subspace<K>::span({ej}, m));
  }
  if (int(jumps.size()) != m - w.dim())
    throw InvariantViolation("jump set cardinality mismatch");
  return jumps;
}

/// Label of an ultrafine layer: the jump set e of the stabilizer, the index
/// map k -> j_k of the descending recursion, and the root-kernel condition
/// set b.  Equality is structural; labels order lexicographically so they can
/// serve as map keys.
struct UltrafineLabel {
  std::vector<int> e;     // sorted ascending, even cardinality 2d
  std::vector<int> jmap;  // jmap[k-1] = j_k, an injective map {1..d} -> e
  std::vector<int> b;     // sorted subset of {1..d}

  UltrafineLabel() = default;
  UltrafineLabel(std::vector<int> e_, std::vector<int> jmap_, std::vector<int> b_)
      : e(std::move(e_)), jmap(std::move(jmap_)), b(std::move(b_)) {
    if (e.size() % 2 != 0) throw InvariantViolation("ultrafine label: |e| is odd");
    size_t d = e.size() / 2;
    if (jmap.size() != d) throw InvariantViolation("ultrafine label: |jmap| != d");
    std::vector<int> seen;
    for (int j : jmap) {
      if (std::find(e.begin(), e.end(), j) == e.end())
        throw InvariantViolation("ultrafine label: jmap image not inside e");
      if (std::find(seen.begin(), seen.end(), j) != seen.end())
        throw InvariantViolation("ultrafine label: jmap not injective");
      seen.push_back(j);
    }
    for (int x : b)
      if (x < 1 || x > int(d)) throw InvariantViolation("ultrafine label: b outside {1..d}");
  }

  int orbit_dim() const { return int(e.size()); }
  bool is_character() const { return e.empty(); }

  friend bool operator==(const UltrafineLabel& a, const UltrafineLabel& b_) {
    return a.e == b_.e && a.jmap == b_.jmap && a.b == b_.b;
  }
  friend bool operator!=(const UltrafineLabel& a, const UltrafineLabel& b_) {
    return !(a == b_);
  }
  friend bool operator<(const UltrafineLabel& a, const UltrafineLabel& b_) {
    if (a.e != b_.e) return a.e < b_.e;
    if (a.jmap != b_.jmap) return a.jmap < b_.jmap;
    return a.b < b_.b;
  }

  std::string to_string() const {
    auto list = [](const std::vector<int>& v) {
      std::string s = "{";
      for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
      }
      return s + "}";
    };
    return "e=" + list(e) + " j=" + list(jmap) + " b=" + list(b);
  }
};

}  // namespace liestrat

#endif
