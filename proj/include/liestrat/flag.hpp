#ifndef LIESTRAT_FLAG_HPP
#define LIESTRAT_FLAG_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liestrat/lie_algebra.hpp"

namespace liestrat {

/// A Lie algebra together with a validated Jordan-Hölder flag, re-expressed in
/// flag coordinates so that every flag step g_j = span(e_1, ..., e_j) is a
/// coordinate subspace.  Also carries the root functionals lambda_j defined by
/// [x, e_j] = lambda_j(x) e_j  (mod g_{j-1}).
template <typename K>
struct FlaggedAlgebra {
  LieAlgebra<K> alg;   // structure constants in flag coordinates
  Mat<K> flag_rows;    // row i = flag basis vector e_{i+1} in defining coordinates
  Mat<K> flag_inv;     // inverse of flag_rows
  Mat<K> roots;        // row j = lambda_{j+1} as a functional row in flag coordinates

  int dim() const { return alg.dim(); }

  Subspace<K> step(int j) const { return Subspace<K>::coordinate(dim(), j); }

  std::vector<K> root_row(int j) const { return roots.row(j - 1); }  // 1-based

  /// Functional given on the defining basis -> flag coordinates.
  std::vector<K> functional_to_flag(const std::vector<K>& xi_def) const {
    return flag_rows.apply(xi_def);  // row_def * F^T, computed as F * xi
  }

  /// Functional in flag coordinates -> defining-basis coordinates.
  std::vector<K> functional_to_defining(const std::vector<K>& xi_flag) const {
    return flag_inv.transposed().apply_left(xi_flag);
  }

  /// Vector given in defining coordinates -> flag coordinates.
  std::vector<K> vector_to_flag(const std::vector<K>& v_def) const {
    return flag_inv.transposed().apply(v_def);
  }

  std::vector<K> vector_to_defining(const std::vector<K>& v_flag) const {
    return flag_rows.transposed().apply(v_flag);
  }
};

namespace detail {

template <typename K>
Mat<K> compute_roots_checked(const LieAlgebra<K>& flag_alg) {
  int m = flag_alg.dim();
  Mat<K> roots(m, m);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i) roots(j, i) = flag_alg.structure(i, j)[j];
  // lambda_j must vanish on the derived subalgebra.
  for (int j = 0; j < m; ++j) {
    std::vector<K> lam = roots.row(j);
    for (int p = 0; p < m; ++p)
      for (int q = p + 1; q < m; ++q)
        if (!is_zero(vec_dot(lam, flag_alg.structure(p, q))))
          throw InvariantViolation("root functional lambda_" + std::to_string(j + 1) +
                                   " does not vanish on [g,g]");
  }
  return roots;
}

}  // namespace detail

/// Validates that the rows of flag_rows are an ordered basis adapted to a
/// chain of ideals (each g_j = span of the first j rows is an ideal), and
/// returns the algebra rewritten in flag coordinates together with its roots.
/// Fails with the first offending step j and a witness pair.
template <typename K>
FlaggedAlgebra<K> validate_jh_flag(const LieAlgebra<K>& a, const Mat<K>& flag_rows) {
  int m = a.dim();
  if (flag_rows.rows() != m || flag_rows.cols() != m)
    throw ValidationError("flag-shape", {}, "", "flag must provide exactly dim = " +
                                                    std::to_string(m) + " basis vectors");
  Mat<K> inv;
  try {
    inv = flag_rows.inverse();
  } catch (const Error&) {
    throw ValidationError("flag-singular", {}, flag_rows.to_string(),
                          "flag basis matrix is singular");
  }

  std::vector<std::string> flag_names;
  flag_names.reserve(m);
  for (int i = 0; i < m; ++i) flag_names.push_back("f" + std::to_string(i + 1));
  LieAlgebra<K> flag_alg = a.change_basis(flag_rows, flag_names);

  // Ideal condition: [e_i, e_j] must lie in g_j, i.e. have no component
  // past index j in flag coordinates.
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i) {
      const std::vector<K>& w = flag_alg.structure(i, j);
      for (int r = j + 1; r < m; ++r)
        if (!is_zero(w[r]))
          throw ValidationError(
              "ideal-step", {j + 1, i + 1}, vec_to_string(w),
              "flag step " + std::to_string(j + 1) + " is not an ideal: [x, e_" +
                  std::to_string(j + 1) + "] has component outside g_" + std::to_string(j + 1) +
                  " for x = flag vector " + std::to_string(i + 1));
    }

  FlaggedAlgebra<K> out;
  out.flag_rows = flag_rows;
  out.flag_inv = inv;
  out.roots = detail::compute_roots_checked(flag_alg);
  out.alg = std::move(flag_alg);
  return out;
}

namespace detail {

/// Candidate rational eigenvalues of a matrix, zero first, then increasing.
inline std::vector<Rational> eigenvalue_candidates(const Mat<Rational>& m) {
  std::vector<Rational> roots = rational_roots(char_poly(m));
  std::stable_sort(roots.begin(), roots.end(), [](const Rational& a, const Rational& b) {
    bool az = is_zero(a), bz = is_zero(b);
    if (az != bz) return az;
    return a < b;
  });
  return roots;
}

/// Depth-first search for a nonzero joint eigenspace of all ad(e_i) with
/// rational eigenvalues.
inline std::optional<Subspace<Rational>> common_eigenspace(const LieAlgebra<Rational>& a) {
  int m = a.dim();
  std::optional<Subspace<Rational>> found;
  auto dfs = [&](auto&& self, int i, const Subspace<Rational>& v) -> bool {
    if (i == m) {
      found = v;
      return true;
    }
    const Mat<Rational>& adi = a.ad_basis(i);
    if (adi.is_zero_matrix()) return self(self, i + 1, v);  // everything is 0-eigenspace
    for (const Rational& lam : eigenvalue_candidates(adi)) {
      Mat<Rational> shifted = adi;
      for (int d = 0; d < m; ++d) shifted(d, d) -= lam;
      Subspace<Rational> ker =
          Subspace<Rational>::from_rows(shifted.kernel_basis_rows(), m);
      Subspace<Rational> w = intersect(v, ker);
      if (w.dim() > 0 && self(self, i + 1, w)) return true;
    }
    return false;
  };
  dfs(dfs, 0, Subspace<Rational>::full(m));
  return found;
}

struct FlagSearchResult {
  bool ok = false;
  Mat<Rational> rows;       // flag rows in the algebra's coordinates
  std::string diagnostic;   // set when !ok
};

inline FlagSearchResult find_flag_rows(const LieAlgebra<Rational>& a) {
  int m = a.dim();
  FlagSearchResult res;
  if (m == 0) {
    res.ok = true;
    res.rows = Mat<Rational>(0, 0);
    return res;
  }
  if (m == 1) {
    res.ok = true;
    res.rows = Mat<Rational>::identity(1);
    return res;
  }
  std::optional<Subspace<Rational>> eig = common_eigenspace(a);
  if (!eig || eig->dim() == 0) {
    res.diagnostic =
        "no joint eigenvector with rational eigenvalues found; "
        "provide a flag explicitly";
    return res;
  }
  std::vector<Rational> v = eig->basis_vector(0);

  // Quotient by span(v): drop the pivot coordinate of v.
  int pivot = -1;
  for (int j = 0; j < m; ++j)
    if (!is_zero(v[j])) {
      pivot = j;
      break;
    }
  std::vector<int> keep;
  for (int j = 0; j < m; ++j)
    if (j != pivot) keep.push_back(j);

  auto project = [&](const std::vector<Rational>& w) {
    // coordinates of w mod span(v) on the images of the kept basis vectors
    Rational f = w[pivot] / v[pivot];
    std::vector<Rational> q(m - 1, Rational(0));
    for (int t = 0; t < m - 1; ++t) q[t] = w[keep[t]] - f * v[keep[t]];
    return q;
  };

  typename LieAlgebra<Rational>::StructureTable table(
      m - 1, std::vector<std::vector<Rational>>(m - 1, std::vector<Rational>(m - 1, Rational(0))));
  for (int s = 0; s < m - 1; ++s)
    for (int t = s + 1; t < m - 1; ++t) {
      std::vector<Rational> w =
          a.bracket(a.basis_coord(keep[s]), a.basis_coord(keep[t]));
      std::vector<Rational> q = project(w);
      table[s][t] = q;
      std::vector<Rational> neg(m - 1, Rational(0));
      for (int r = 0; r < m - 1; ++r) neg[r] = -q[r];
      table[t][s] = neg;
    }
  std::vector<std::string> qnames;
  const std::vector<std::string>& names = a.basis_names();
  for (int t = 0; t < m - 1; ++t) qnames.push_back(names[keep[t]]);
  LieAlgebra<Rational> quotient =
      LieAlgebra<Rational>::validated(std::move(qnames), std::move(table));

  FlagSearchResult sub = find_flag_rows(quotient);
  if (!sub.ok) return sub;

  res.ok = true;
  res.rows = Mat<Rational>(m, m);
  res.rows.set_row(0, v);
  for (int i = 0; i < m - 1; ++i) {
    std::vector<Rational> lift(m, Rational(0));
    for (int t = 0; t < m - 1; ++t) lift[keep[t]] = sub.rows(i, t);
    res.rows.set_row(i + 1, lift);
  }
  return res;
}

}  // namespace detail

struct FlagSearchFailure {
  std::string diagnostic;
};

/// Best-effort search for a Jordan-Hölder flag: looks for a one-dimensional
/// ideal spanned by a joint ad-eigenvector with rational eigenvalues,
/// quotients, and recurses.  A failure does not certify that no flag exists
/// over the reals; algebras whose roots are irrational always fail here.
inline std::optional<FlaggedAlgebra<Rational>> find_jh_flag(
    const LieAlgebra<Rational>& a, FlagSearchFailure* failure = nullptr) {
  detail::FlagSearchResult res = detail::find_flag_rows(a);
  if (!res.ok) {
    if (failure) failure->diagnostic = res.diagnostic;
    return std::nullopt;
  }
  return validate_jh_flag(a, res.rows);
}

inline FlaggedAlgebra<GaussianRational> complexify(const FlaggedAlgebra<Rational>& fa) {
  FlaggedAlgebra<GaussianRational> out;
  out.alg = complexify(fa.alg);
  out.flag_rows = complexify(fa.flag_rows);
  out.flag_inv = complexify(fa.flag_inv);
  out.roots = complexify(fa.roots);
  return out;
}

}  // namespace liestrat

#endif
