#ifndef LIESTRAT_LIE_ALGEBRA_HPP
#define LIESTRAT_LIE_ALGEBRA_HPP

#include <string>
#include <vector>

#include "liestrat/matrix.hpp"
#include "liestrat/subspace.hpp"

namespace liestrat {

/// Finite-dimensional Lie algebra given by exact structure constants
/// c[i][j] = coordinates of [e_i, e_j].  Construction verifies antisymmetry
/// and the Jacobi identity on all basis triples; instances are immutable and
/// safe to share across threads.
template <typename K>
class LieAlgebra {
public:
  using StructureTable = std::vector<std::vector<std::vector<K>>>;

  LieAlgebra() = default;  // empty algebra; fill via validated()

  static LieAlgebra validated(std::vector<std::string> names, StructureTable table) {
    int m = int(names.size());
    if (int(table.size()) != m)
      throw ValidationError("shape", {}, "", "structure table has wrong number of rows");
    for (int i = 0; i < m; ++i) {
      if (int(table[i].size()) != m)
        throw ValidationError("shape", {i + 1}, "",
                              "structure table row " + std::to_string(i + 1) + " has wrong length");
      for (int j = 0; j < m; ++j)
        if (int(table[i][j].size()) != m)
          throw ValidationError("shape", {i + 1, j + 1}, "",
                                "bracket [" + names[i] + "," + names[j] + "] has wrong length");
    }
    LieAlgebra a;
    a.names_ = std::move(names);
    a.c_ = std::move(table);
    a.check_antisymmetry();
    a.check_jacobi();
    a.ad_cache_.reserve(m);
    for (int i = 0; i < m; ++i) a.ad_cache_.push_back(a.compute_ad_basis(i));
    return a;
  }

  int dim() const { return int(names_.size()); }
  const std::vector<std::string>& basis_names() const { return names_; }
  const std::vector<K>& structure(int i, int j) const { return c_[i][j]; }

  std::vector<K> bracket(const std::vector<K>& x, const std::vector<K>& y) const {
    int m = dim();
    if (int(x.size()) != m || int(y.size()) != m)
      throw DimensionMismatch("bracket: coordinate length mismatch");
    std::vector<K> out(m, K(0));
    for (int i = 0; i < m; ++i) {
      if (is_zero(x[i])) continue;
      for (int j = 0; j < m; ++j) {
        if (is_zero(y[j])) continue;
        K f = x[i] * y[j];
        for (int r = 0; r < m; ++r) out[r] += f * c_[i][j][r];
      }
    }
    return out;
  }

  /// ad(x) e_j = [x, e_j]; columns indexed by j.
  Mat<K> ad(const std::vector<K>& x) const {
    int m = dim();
    if (int(x.size()) != m) throw DimensionMismatch("ad: coordinate length mismatch");
    Mat<K> out(m, m);
    for (int i = 0; i < m; ++i) {
      if (is_zero(x[i])) continue;
      for (int j = 0; j < m; ++j)
        for (int r = 0; r < m; ++r)
          if (!is_zero(c_[i][j][r])) out(r, j) += x[i] * c_[i][j][r];
    }
    return out;
  }

  const Mat<K>& ad_basis(int i) const { return ad_cache_[i]; }

  /// Infinitesimal coadjoint action on dual coordinates: coad(x) = -ad(x)^T.
  Mat<K> coad(const std::vector<K>& x) const { return K(-1) * ad(x).transposed(); }

  /// Trace form of the adjoint representation as a functional row:
  /// modular_exponent(x) = tr(ad x), with Delta(exp x) = e^{-tr(ad x)}.
  std::vector<K> modular_exponent_row() const {
    int m = dim();
    std::vector<K> row(m, K(0));
    for (int i = 0; i < m; ++i) row[i] = ad_cache_[i].trace();
    return row;
  }

  /// Span of all brackets [g, g].
  Subspace<K> derived_subspace() const {
    int m = dim();
    Mat<K> rows(0, m);
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (!vec_is_zero(c_[i][j])) rows.append_row(c_[i][j]);
    return Subspace<K>::from_rows(rows, m);
  }

  /// Lower-central-series test: nilpotent iff g ⊇ [g,g] ⊇ [g,[g,g]] ⊇ ...
  /// reaches zero.
  bool is_nilpotent() const {
    int m = dim();
    Subspace<K> layer = Subspace<K>::full(m);
    for (int step = 0; step <= m; ++step) {
      Mat<K> rows(0, m);
      for (int i = 0; i < m; ++i)
        for (int r = 0; r < layer.dim(); ++r) {
          std::vector<K> w = bracket(basis_coord(i), layer.basis_vector(r));
          if (!vec_is_zero(w)) rows.append_row(w);
        }
      Subspace<K> next = Subspace<K>::from_rows(rows, m);
      if (next.dim() == 0) return true;
      if (next.dim() == layer.dim()) return false;
      layer = next;
    }
    return false;
  }

  /// Structure constants re-expressed in a new basis given by rows of p
  /// (each row = new basis vector in current coordinates).
  LieAlgebra change_basis(const Mat<K>& p, std::vector<std::string> new_names) const {
    int m = dim();
    if (p.rows() != m || p.cols() != m)
      throw DimensionMismatch("change_basis: matrix must be square of algebra dimension");
    Mat<K> pt_inv = p.transposed().inverse();
    StructureTable table(m, std::vector<std::vector<K>>(m, std::vector<K>(m, K(0))));
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        std::vector<K> w = bracket(p.row(i), p.row(j));
        std::vector<K> wf = pt_inv.apply(w);
        table[i][j] = wf;
        std::vector<K> neg(m, K(0));
        for (int r = 0; r < m; ++r) neg[r] = -wf[r];
        table[j][i] = neg;
      }
    return validated(std::move(new_names), std::move(table));
  }

  std::vector<K> basis_coord(int i) const {
    std::vector<K> v(dim(), K(0));
    v[i] = K(1);
    return v;
  }

private:
  Mat<K> compute_ad_basis(int i) const {
    int m = dim();
    Mat<K> out(m, m);
    for (int j = 0; j < m; ++j)
      for (int r = 0; r < m; ++r) out(r, j) = c_[i][j][r];
    return out;
  }

  void check_antisymmetry() const {
    int m = dim();
    for (int i = 0; i < m; ++i)
      for (int j = 0; j <= i; ++j) {
        std::vector<K> s = vec_add(c_[i][j], c_[j][i]);
        if (!vec_is_zero(s))
          throw ValidationError("antisymmetry", {i + 1, j + 1}, vec_to_string(s),
                                "antisymmetry fails for (" + names_[i] + ", " + names_[j] +
                                    "): [x,y]+[y,x] = " + vec_to_string(s));
      }
  }

  void check_jacobi() const {
    int m = dim();
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        for (int k = j + 1; k < m; ++k) {
          std::vector<K> r = bracket(basis_coord(i), c_[j][k]);
          r = vec_add(r, bracket(basis_coord(j), c_[k][i]));
          r = vec_add(r, bracket(basis_coord(k), c_[i][j]));
          if (!vec_is_zero(r))
            throw ValidationError("jacobi", {i + 1, j + 1, k + 1}, vec_to_string(r),
                                  "Jacobi identity fails at (" + names_[i] + ", " + names_[j] +
                                      ", " + names_[k] + "); residual " + vec_to_string(r));
        }
  }

  std::vector<std::string> names_;
  StructureTable c_;
  std::vector<Mat<K>> ad_cache_;
};

/// Exponent of the relative modular function of the subgroup attached to the
/// bracket-closed subspace k:  rho_K(exp y) = e^{tr(ad_g y) - tr(ad_k y)}.
/// Throws if k is not a subalgebra or y is not a member.
template <typename K>
K relative_modular_exponent(const LieAlgebra<K>& g, const Subspace<K>& k,
                            const std::vector<K>& y) {
  if (k.ambient_dim() != g.dim())
    throw DimensionMismatch("relative_modular_exponent: ambient mismatch");
  for (int r = 0; r < k.dim(); ++r)
    for (int s = r + 1; s < k.dim(); ++s)
      if (!k.contains(g.bracket(k.basis_vector(r), k.basis_vector(s))))
        throw ValidationError("not-subalgebra", {r + 1, s + 1}, "",
                              "relative_modular_exponent: k is not a subalgebra");
  if (!k.contains(y))
    throw ValidationError("not-member", {}, vec_to_string(y),
                          "relative_modular_exponent: y is not in k");
  K tr_k(0);
  for (int t = 0; t < k.dim(); ++t) {
    std::vector<K> w = g.bracket(y, k.basis_vector(t));
    tr_k += k.coordinates_of(w)[t];
  }
  return g.ad(y).trace() - tr_k;
}

inline LieAlgebra<GaussianRational> complexify(const LieAlgebra<Rational>& a) {
  int m = a.dim();
  typename LieAlgebra<GaussianRational>::StructureTable table(
      m, std::vector<std::vector<GaussianRational>>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) table[i][j] = complexify(a.structure(i, j));
  return LieAlgebra<GaussianRational>::validated(a.basis_names(), std::move(table));
}

}  // namespace liestrat

#endif
