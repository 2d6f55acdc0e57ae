#ifndef LIESTRAT_SUBSPACE_HPP
#define LIESTRAT_SUBSPACE_HPP

#include <vector>

#include "liestrat/matrix.hpp"

namespace liestrat {

/// A linear subspace of K^n in canonical form: the stored basis matrix is in
/// reduced row echelon form with no zero rows, so two Subspace values describe
/// the same subspace exactly when they compare equal.
template <typename K>
class Subspace {
public:
  Subspace() : ambient_(0) {}

  static Subspace zero(int ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Mat<K>(0, ambient);
    return s;
  }

  static Subspace full(int ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Mat<K>::identity(ambient);
    return s;
  }

  /// span(e_1, ..., e_j) of the standard basis; j = 0 gives the zero space.
  static Subspace coordinate(int ambient, int j) {
    if (j < 0 || j > ambient) throw DimensionMismatch("coordinate subspace index out of range");
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Mat<K>(j, ambient);
    for (int i = 0; i < j; ++i) s.basis_(i, i) = K(1);
    return s;
  }

  static Subspace span(const std::vector<std::vector<K>>& vectors, int ambient) {
    for (const auto& v : vectors)
      if (int(v.size()) != ambient)
        throw DimensionMismatch("span: vector length " + std::to_string(v.size()) +
                                " does not match ambient dimension " + std::to_string(ambient));
    Mat<K> m(int(vectors.size()), ambient);
    for (size_t i = 0; i < vectors.size(); ++i) m.set_row(int(i), vectors[i]);
    return from_rows(m, ambient);
  }

  /// Canonicalizes an arbitrary generating row matrix.
  static Subspace from_rows(Mat<K> m, int ambient) {
    if (m.rows() > 0 && m.cols() != ambient)
      throw DimensionMismatch("from_rows width does not match ambient dimension");
    int rank = m.rref();
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Mat<K>(rank, ambient);
    for (int i = 0; i < rank; ++i) s.basis_.set_row(i, m.row(i));
    return s;
  }

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Mat<K>& basis() const { return basis_; }
  std::vector<K> basis_vector(int i) const { return basis_.row(i); }

  bool contains(const std::vector<K>& v) const {
    if (int(v.size()) != ambient_) throw DimensionMismatch("contains: ambient mismatch");
    std::vector<K> r = reduce(v);
    return vec_is_zero(r);
  }

  /// Remainder of v after eliminating against the RREF basis.  Zero iff the
  /// subspace contains v.
  std::vector<K> reduce(const std::vector<K>& v) const {
    std::vector<K> r = v;
    for (int i = 0; i < basis_.rows(); ++i) {
      int p = pivot_col(i);
      if (!is_zero(r[p])) {
        K f = r[p];
        for (int j = 0; j < ambient_; ++j) r[j] -= f * basis_(i, j);
      }
    }
    return r;
  }

  /// Coordinates of v in the stored basis; throws if v is not a member.
  std::vector<K> coordinates_of(const std::vector<K>& v) const {
    if (!contains(v)) throw Error("coordinates_of: vector not in subspace");
    std::vector<K> c(basis_.rows(), K(0));
    for (int i = 0; i < basis_.rows(); ++i) c[i] = v[pivot_col(i)];
    return c;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  std::string to_string() const { return basis_.to_string(); }

private:
  int pivot_col(int row) const {
    for (int j = 0; j < ambient_; ++j)
      if (!is_zero(basis_(row, j))) return j;
    throw InvariantViolation("zero row stored in canonical subspace basis");
  }

  int ambient_;
  Mat<K> basis_;
};

template <typename K>
Subspace<K> sum(const Subspace<K>& a, const Subspace<K>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("sum: ambient mismatch");
  return Subspace<K>::from_rows(stack_rows(a.basis(), b.basis()), a.ambient_dim());
}

/// A ∩ B via the kernel of the stacked annihilator constraints.
template <typename K>
Subspace<K> intersect(const Subspace<K>& a, const Subspace<K>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("intersect: ambient mismatch");
  if (a.dim() == a.ambient_dim()) return b;
  if (b.dim() == b.ambient_dim()) return a;
  Mat<K> constraints = stack_rows(a.basis().kernel_basis_rows(), b.basis().kernel_basis_rows());
  return Subspace<K>::from_rows(constraints.kernel_basis_rows(), a.ambient_dim());
}

template <typename K>
bool subspace_leq(const Subspace<K>& a, const Subspace<K>& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionMismatch("subspace_leq: ambient mismatch");
  for (int i = 0; i < a.dim(); ++i)
    if (!b.contains(a.basis_vector(i))) return false;
  return true;
}

/// {u in ambient : B(u, w) = 0 for every w in W} for a skew-symmetric bilinear
/// form B given by its matrix (B(x, y) = x^T B y on coordinates).
template <typename K>
Subspace<K> perp_wrt_form(const Subspace<K>& w, const Mat<K>& form, const Subspace<K>& ambient) {
  int n = w.ambient_dim();
  if (ambient.ambient_dim() != n) throw DimensionMismatch("perp_wrt_form: ambient mismatch");
  if (form.rows() != n || form.cols() != n)
    throw DimensionMismatch("perp_wrt_form: form must be square of ambient dimension");
  Mat<K> neg = K(-1) * form;
  if (form.transposed() != neg)
    throw ValidationError("skew", {}, form.to_string(), "perp_wrt_form: form is not skew-symmetric");
  // Constraint rows: (w B^T) u = 0 encodes B(u, w) = 0.
  Mat<K> constraints = w.basis() * form.transposed();
  Subspace<K> perp = Subspace<K>::from_rows(constraints.kernel_basis_rows(), n);
  return intersect(perp, ambient);
}

inline Subspace<GaussianRational> complexify(const Subspace<Rational>& s) {
  // Entrywise injection Q -> Q(i) preserves reduced echelon form, so the
  // canonical representative carries over unchanged.
  Mat<GaussianRational> b = complexify(s.basis());
  Subspace<GaussianRational> out = Subspace<GaussianRational>::from_rows(b, s.ambient_dim());
  if (out.dim() != s.dim()) throw InvariantViolation("complexification changed dimension");
  return out;
}

}  // namespace liestrat

#endif
