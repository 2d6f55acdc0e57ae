#ifndef LIESTRAT_LABELS_HPP
#define LIESTRAT_LABELS_HPP

#include "liestrat/polarize.hpp"

namespace liestrat {

/// Root-kernel condition set: b = {k : p^{k-1} ∩ Ker(lambda_{i_k}) = p^k}.
/// Empty whenever all roots vanish, in particular for nilpotent algebras.
template <typename K>
std::vector<int> root_condition_set(const FlaggedAlgebra<K>& fa,
                                    const PolarizationTrace<K>& tr) {
  int m = fa.dim();
  std::vector<int> b;
  for (int k = 1; k <= tr.d; ++k) {
    std::vector<K> lam = fa.root_row(tr.i[k - 1]);
    Mat<K> lam_row(1, m);
    lam_row.set_row(0, lam);
    Subspace<K> ker = Subspace<K>::from_rows(lam_row.kernel_basis_rows(), m);
    if (intersect(tr.chain[k - 1], ker) == tr.chain[k]) b.push_back(k);
  }
  return b;
}

template <typename K>
UltrafineLabel ultrafine_label(const FlaggedAlgebra<K>& fa, const std::vector<K>& xi) {
  PolarizationTrace<K> tr = descending_sequence(fa, xi);
  std::vector<int> e = jump_set(stabilizer(fa, xi));
  return UltrafineLabel(std::move(e), tr.j, root_condition_set(fa, tr));
}

/// Runs the entire labeling pipeline over the Gaussian rationals on the
/// complexified data.  Contractually equal to ultrafine_label on the rational
/// input; exercised as a cross-check of the complexification identities.
inline UltrafineLabel complexified_label(const FlaggedAlgebra<Rational>& fa,
                                         const std::vector<Rational>& xi) {
  FlaggedAlgebra<GaussianRational> fc = complexify(fa);
  return ultrafine_label(fc, complexify(xi));
}

}  // namespace liestrat

#endif
