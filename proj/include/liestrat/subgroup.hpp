#ifndef LIESTRAT_SUBGROUP_HPP
#define LIESTRAT_SUBGROUP_HPP

#include <vector>

#include "liestrat/lie_algebra.hpp"
#include "liestrat/numeric.hpp"

namespace liestrat {

/// A connected closed subgroup of the ambient exponential group, represented
/// by its subalgebra (the two determine each other).  Carries the exact
/// modular data as trace exponents:
///   Delta_K(exp y) = e^{-tr(ad_k y)},  rho_K(exp y) = e^{tr(ad_g y) - tr(ad_k y)}.
template <typename K>
struct SubgroupDescriptor {
  Subspace<K> subalgebra;
  std::vector<K> ambient_trace;   // tr(ad_g b_s) per stored basis vector
  std::vector<K> relative_trace;  // tr(ad_k b_s) per stored basis vector
};

/// Builds the descriptor, verifying that k is closed under the bracket.
/// Throws ValidationError (kind "not-subalgebra") with the first witness pair.
template <typename K>
SubgroupDescriptor<K> subgroup_from_subalgebra(const LieAlgebra<K>& g, const Subspace<K>& k) {
  if (k.ambient_dim() != g.dim())
    throw DimensionMismatch("subgroup_from_subalgebra: ambient mismatch");
  for (int r = 0; r < k.dim(); ++r)
    for (int s = r + 1; s < k.dim(); ++s) {
      std::vector<K> w = g.bracket(k.basis_vector(r), k.basis_vector(s));
      if (!k.contains(w))
        throw ValidationError("not-subalgebra", {r + 1, s + 1}, vec_to_string(w),
                              "subspace is not a subalgebra: bracket of basis vectors " +
                                  std::to_string(r + 1) + " and " + std::to_string(s + 1) +
                                  " leaves the subspace");
    }

  SubgroupDescriptor<K> out;
  out.subalgebra = k;
  for (int s = 0; s < k.dim(); ++s) {
    std::vector<K> y = k.basis_vector(s);
    out.ambient_trace.push_back(g.ad(y).trace());
    // matrix of ad(y) restricted to k, in the stored basis of k
    Mat<K> restr(k.dim(), k.dim());
    for (int t = 0; t < k.dim(); ++t) {
      std::vector<K> w = g.bracket(y, k.basis_vector(t));
      std::vector<K> coords = k.coordinates_of(w);
      for (int q = 0; q < k.dim(); ++q) restr(q, t) = coords[q];
    }
    out.relative_trace.push_back(restr.trace());
  }
  return out;
}

/// Exponent r with rho_K(exp y) = e^r, i.e. r = tr(ad_g y) - tr(ad_k y).
/// Exact; throws if y is not a member of k.
template <typename K>
K rho_exponent(const SubgroupDescriptor<K>& desc, const std::vector<K>& y) {
  if (!desc.subalgebra.contains(y))
    throw ValidationError("not-member", {}, vec_to_string(y),
                          "rho_exponent: vector is not in the subalgebra");
  std::vector<K> c = desc.subalgebra.coordinates_of(y);
  K r(0);
  for (size_t s = 0; s < c.size(); ++s)
    r += c[s] * (desc.ambient_trace[s] - desc.relative_trace[s]);
  return r;
}

/// Operator-norm distance between the orthogonal projections onto two
/// subspaces; the metric realizing the subgroup topology on connected
/// subgroups through the subalgebra picture.  Floating point from exact bases.
inline double grassmann_gap(const Subspace<Rational>& k1, const Subspace<Rational>& k2) {
  return projection_gap(k1, k2);
}

}  // namespace liestrat

#endif
