#ifndef LIESTRAT_POLARIZE_HPP
#define LIESTRAT_POLARIZE_HPP

#include <vector>

#include "liestrat/numeric.hpp"
#include "liestrat/rng.hpp"
#include "liestrat/stratify.hpp"

namespace liestrat {

namespace detail {

/// True iff the restriction of the form to U x W is nonzero.
template <typename K>
bool pairs_nontrivially(const Subspace<K>& u, const Subspace<K>& w, const Mat<K>& form) {
  if (u.dim() == 0 || w.dim() == 0) return false;
  Mat<K> prod = u.basis() * form * w.basis().transposed();
  return !prod.is_zero_matrix();
}

}  // namespace detail

/// Sum of the radicals of the restricted forms, p(B) = N(B_1) + ... + N(B_m).
/// This is the Vergne polarization of xi relative to the flag.
template <typename K>
Subspace<K> vergne_polarization(const FlaggedAlgebra<K>& fa, const std::vector<K>& xi) {
  int m = fa.dim();
  Subspace<K> p = Subspace<K>::zero(m);
  for (int j = 1; j <= m; ++j) p = sum(p, restricted_radical(fa, xi, j));
  return p;
}

/// Full record of the descending recursion
///   p^0 = g,  p^{k+1} = (V_{i_{k+1}} ∩ p^k)^{perp_B} ∩ p^k,
/// together with the index sequences i_k (first flag step that pairs
/// nontrivially with p^k) and j_k (first flag step whose trace in p^k leaves
/// p^{k+1}).  d is the orbit half-dimension, so the chain has d steps.
template <typename K>
struct PolarizationTrace {
  int d = 0;
  std::vector<Subspace<K>> chain;  // p^0, ..., p^d
  std::vector<int> i;              // i_1 < ... < i_d
  std::vector<int> j;              // j_1, ..., j_d

  const Subspace<K>& polarization() const { return chain.back(); }
};

template <typename K>
PolarizationTrace<K> descending_sequence(const FlaggedAlgebra<K>& fa, const std::vector<K>& xi) {
  int m = fa.dim();
  Mat<K> b = skew_form(fa, xi);
  PolarizationTrace<K> tr;
  tr.chain.push_back(Subspace<K>::full(m));

  while (detail::pairs_nontrivially(tr.chain.back(), tr.chain.back(), b)) {
    const Subspace<K>& cur = tr.chain.back();
    int i_next = -1;
    Subspace<K> vi_cap;
    for (int i = 0; i <= m; ++i) {
      Subspace<K> cap = intersect(fa.step(i), cur);
      if (detail::pairs_nontrivially(cap, cur, b)) {
        i_next = i;
        vi_cap = cap;
        break;
      }
    }
    if (i_next < 0) throw InvariantViolation("descending step found no pairing flag index");
    Subspace<K> next = perp_wrt_form(vi_cap, b, cur);
    int j_next = -1;
    for (int j = 0; j <= m; ++j) {
      Subspace<K> cap = intersect(fa.step(j), cur);
      if (!subspace_leq(cap, next)) {
        j_next = j;
        break;
      }
    }
    if (j_next < 0) throw InvariantViolation("descending step found no escaping flag index");
    if (!subspace_leq(next, cur) || next.dim() >= cur.dim())
      throw InvariantViolation("descending chain failed to descend strictly");
    tr.i.push_back(i_next);
    tr.j.push_back(j_next);
    tr.chain.push_back(next);
  }
  tr.d = int(tr.chain.size()) - 1;

  // Consistency of the whole record; any failure here is an implementation
  // bug, never valid input behavior.
  Subspace<K> radical = stabilizer(fa, xi);
  Subspace<K> pg = vergne_polarization(fa, xi);
  if (tr.polarization() != pg)
    throw InvariantViolation("chain endpoint differs from sum-of-radicals polarization");
  int rank = m - radical.dim();
  if (rank != 2 * tr.d) throw InvariantViolation("chain length is not half the form rank");
  std::vector<int> jump_n = jump_set(radical);
  std::vector<int> jump_p = jump_set(pg);
  std::vector<int> expected_i;
  for (int x : jump_n)
    if (std::find(jump_p.begin(), jump_p.end(), x) == jump_p.end()) expected_i.push_back(x);
  if (tr.i != expected_i)
    throw InvariantViolation("i-sequence differs from jump(N(B)) \\ jump(p(B))");
  std::vector<int> j_sorted = tr.j;
  std::sort(j_sorted.begin(), j_sorted.end());
  if (j_sorted != jump_p) throw InvariantViolation("j-sequence is not a bijection onto jump(p(B))");
  for (int k = 0; k < tr.d; ++k) {
    if (tr.i[k] >= tr.j[k]) throw InvariantViolation("expected i_k < j_k");
    if (k + 1 < tr.d && tr.i[k] >= tr.i[k + 1])
      throw InvariantViolation("expected strictly increasing i-sequence");
  }
  return tr;
}

/// Verification predicates for a candidate polarization at xi.
struct PolarizationCheck {
  bool is_subalgebra = false;
  bool is_isotropic = false;
  bool has_polarization_dimension = false;
  bool contains_stabilizer = false;

  bool all() const {
    return is_subalgebra && is_isotropic && has_polarization_dimension && contains_stabilizer;
  }
};

template <typename K>
PolarizationCheck check_polarization(const FlaggedAlgebra<K>& fa, const std::vector<K>& xi,
                                     const Subspace<K>& p) {
  int m = fa.dim();
  if (p.ambient_dim() != m) throw DimensionMismatch("check_polarization: ambient mismatch");
  PolarizationCheck out;
  out.is_subalgebra = true;
  out.is_isotropic = true;
  for (int r = 0; r < p.dim() && (out.is_subalgebra || out.is_isotropic); ++r)
    for (int s = r + 1; s < p.dim(); ++s) {
      std::vector<K> w = fa.alg.bracket(p.basis_vector(r), p.basis_vector(s));
      if (out.is_subalgebra && !p.contains(w)) out.is_subalgebra = false;
      if (out.is_isotropic && !is_zero(vec_dot(xi, w))) out.is_isotropic = false;
    }
  Subspace<K> radical = stabilizer(fa, xi);
  out.has_polarization_dimension = (2 * p.dim() == m + radical.dim());
  out.contains_stabilizer = subspace_leq(radical, p);
  return out;
}

/// Result of the sampled Pukánszky containment check P·xi ⊆ xi + p^perp.
/// The exact branch runs whenever coad(y) is nilpotent (always, for nilpotent
/// algebras) and must give residual exactly zero; otherwise a floating-point
/// matrix exponential is used and the residual is compared to the tolerance.
struct PukanszkyReport {
  int samples = 0;
  int exact_samples = 0;
  double max_residual = 0.0;
  bool containment_ok = true;
  /// dim coad(p)·xi == dim p - dim(p ∩ g(xi)) == dim p^perp, checked exactly.
  bool orbit_dimension_identity = false;
};

template <typename K>
PukanszkyReport pukanszky_containment_check(const FlaggedAlgebra<K>& fa,
                                            const std::vector<K>& xi, const Subspace<K>& p,
                                            int samples, double tolerance,
                                            uint64_t seed = 12345) {
  static_assert(std::is_same_v<K, Rational>, "sampling check runs on rational data");
  int m = fa.dim();
  PolarizationCheck pc = check_polarization(fa, xi, p);
  if (!pc.is_subalgebra)
    throw ValidationError("not-subalgebra", {}, p.to_string(),
                          "pukanszky check requires a subalgebra");

  PukanszkyReport rep;
  // Infinitesimal transversality: the rows xi∘ad(u) for u in a basis of p
  // span the tangent space of P·xi at xi.
  Mat<Rational> rows(0, m);
  for (int r = 0; r < p.dim(); ++r) {
    Mat<Rational> adu = fa.alg.ad(p.basis_vector(r));
    rows.append_row(adu.apply_left(xi));  // xi ∘ ad(u)
  }
  Subspace<Rational> tangent = Subspace<Rational>::from_rows(rows, m);
  Subspace<Rational> radical = stabilizer(fa, xi);
  int stab_in_p = intersect(p, radical).dim();
  rep.orbit_dimension_identity =
      tangent.dim() == p.dim() - stab_in_p && tangent.dim() == m - p.dim();

  SplitMix64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    std::vector<Rational> y(m, Rational(0));
    for (int r = 0; r < p.dim(); ++r) {
      std::vector<Rational> term = vec_scale(random_rational(rng, 4), p.basis_vector(r));
      y = vec_add(y, term);
    }
    Mat<Rational> coad = fa.alg.coad(y);
    ++rep.samples;
    if (matrix_is_nilpotent(coad)) {
      ++rep.exact_samples;
      // eta = exp(coad(y)) xi by the finite series
      std::vector<Rational> eta = xi, term = xi;
      for (int k = 1; k < m; ++k) {
        term = vec_scale(rational(1, k), coad.apply(term));
        eta = vec_add(eta, term);
      }
      std::vector<Rational> diff = vec_sub(eta, xi);
      for (int r = 0; r < p.dim(); ++r)
        if (!is_zero(vec_dot(diff, p.basis_vector(r)))) rep.containment_ok = false;
    } else {
      Eigen::MatrixXd expm = matrix_exponential(to_eigen(coad));
      Eigen::VectorXd eta = expm * to_eigen(xi);
      Eigen::VectorXd diff = eta - to_eigen(xi);
      for (int r = 0; r < p.dim(); ++r) {
        double res = std::abs(diff.dot(to_eigen(p.basis_vector(r))));
        rep.max_residual = std::max(rep.max_residual, res);
        if (res >= tolerance) rep.containment_ok = false;
      }
    }
  }
  return rep;
}

}  // namespace liestrat

#endif
