#ifndef LIESTRAT_ORBITS_HPP
#define LIESTRAT_ORBITS_HPP

#include <algorithm>
#include <vector>

#include "liestrat/labels.hpp"

namespace liestrat {

/// One-parameter factor exp(t * e_a) of a group word; 1-based basis index.
struct WordFactor {
  int index;
  Rational t;

  friend bool operator==(const WordFactor& a, const WordFactor& b) {
    return a.index == b.index && a.t == b.t;
  }
};

/// Group element exp(t_1 e_{a_1}) ··· exp(t_r e_{a_r}) kept as a factor list;
/// factors are never multiplied out, so the word doubles as an exact
/// certificate of how a representative was reached.
struct GroupWord {
  std::vector<WordFactor> factors;

  GroupWord inverse() const {
    GroupWord w;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it)
      w.factors.push_back({it->index, -it->t});
    return w;
  }

  friend bool operator==(const GroupWord& a, const GroupWord& b) {
    return a.factors == b.factors;
  }
};

/// Result of a coadjoint application.  `exact` is meaningful only when
/// is_exact; `approx` is always filled (mirroring the exact value when one
/// exists) so numeric consumers need not branch.
struct CoadjointResult {
  std::vector<Rational> exact;
  bool is_exact = false;
  std::vector<double> approx;
};

/// xi ∘ Ad(exp(-t x)), i.e. e^{t coad(x)} xi on dual coordinates.  Exact via
/// the finite series when ad(x) is nilpotent; floating point otherwise.
inline CoadjointResult coadjoint_apply(const FlaggedAlgebra<Rational>& fa,
                                       const std::vector<Rational>& x, const Rational& t,
                                       const std::vector<Rational>& xi) {
  int m = fa.dim();
  if (int(x.size()) != m || int(xi.size()) != m)
    throw DimensionMismatch("coadjoint_apply: coordinate length mismatch");
  Mat<Rational> c = fa.alg.coad(x);
  CoadjointResult out;
  if (matrix_is_nilpotent(c)) {
    out.is_exact = true;
    std::vector<Rational> eta = xi, term = xi;
    for (int k = 1; k < m; ++k) {
      Rational step = t / Rational(k);
      term = vec_scale(step, c.apply(term));
      eta = vec_add(eta, term);
      if (vec_is_zero(term)) break;
    }
    out.exact = eta;
    out.approx.reserve(m);
    for (const Rational& q : out.exact) out.approx.push_back(to_double(q));
  } else {
    Eigen::MatrixXd expm = matrix_exponential(to_double(t) * to_eigen(c));
    Eigen::VectorXd eta = expm * to_eigen(xi);
    out.approx.assign(eta.data(), eta.data() + m);
  }
  return out;
}

/// Applies a word to xi, rightmost factor first.  Throws if any factor falls
/// off the exact path.
inline std::vector<Rational> apply_word_exact(const FlaggedAlgebra<Rational>& fa,
                                              const GroupWord& word,
                                              std::vector<Rational> xi) {
  for (auto it = word.factors.rbegin(); it != word.factors.rend(); ++it) {
    std::vector<Rational> dir(fa.dim(), Rational(0));
    dir[it->index - 1] = Rational(1);
    CoadjointResult r = coadjoint_apply(fa, dir, it->t, xi);
    if (!r.is_exact)
      throw ValidationError("non-nilpotent-word", {it->index}, "",
                            "word factor exp(t e_" + std::to_string(it->index) +
                                ") has non-nilpotent adjoint; exact application impossible");
    xi = std::move(r.exact);
  }
  return xi;
}

/// Orbit dimension dim G·xi = dim g - dim g(xi) = rank B_xi.
template <typename K>
int orbit_dimension(const FlaggedAlgebra<K>& fa, const std::vector<K>& xi) {
  Subspace<K> radical = stabilizer(fa, xi);
  int d = fa.dim() - radical.dim();
  if (int(jump_set(radical).size()) != d)
    throw InvariantViolation("orbit dimension differs from stabilizer jump count");
  return d;
}

/// Canonical representative of the coadjoint orbit of xi on a nilpotent
/// algebra: the unique point of the orbit whose coordinates vanish on the
/// jump set e = jump(g(xi)).  The zeroing word is returned as a certificate.
struct OrbitRepresentative {
  std::vector<Rational> representative;
  GroupWord word;             // word · xi = representative
  std::vector<int> zeroed;    // = jump set e
};

inline OrbitRepresentative nilpotent_cross_section(const FlaggedAlgebra<Rational>& fa,
                                                   const std::vector<Rational>& xi) {
  int m = fa.dim();
  if (!fa.alg.is_nilpotent())
    throw ValidationError("non-nilpotent", {}, "",
                          "cross-section construction is implemented for nilpotent "
                          "algebras only");
  std::vector<int> e = jump_set(stabilizer(fa, xi));
  std::vector<Rational> eta = xi;
  GroupWord word;

  std::vector<Mat<Rational>> coads;
  coads.reserve(m);
  for (int a = 0; a < m; ++a) coads.push_back(Rational(-1) * fa.alg.ad_basis(a).transposed());

  // Coefficients of coordinate `target` of exp(t coad) eta as a polynomial in
  // t (finite since the action is unipotent).
  auto coordinate_poly = [&](const Mat<Rational>& coad, int target) {
    std::vector<Rational> coeffs;
    std::vector<Rational> term = eta;
    coeffs.push_back(term[target]);
    for (int k = 1; k < m; ++k) {
      term = vec_scale(rational(1, k), coad.apply(term));
      coeffs.push_back(term[target]);
      if (vec_is_zero(term)) break;
    }
    while (!coeffs.empty() && is_zero(coeffs.back())) coeffs.pop_back();
    return coeffs;
  };
  auto apply_step = [&](int a, const Rational& t) {
    std::vector<Rational> next = eta, term = eta;
    for (int k = 1; k < m; ++k) {
      Rational step = t / Rational(k);
      term = vec_scale(step, coads[a].apply(term));
      next = vec_add(next, term);
      if (vec_is_zero(term)) break;
    }
    eta = std::move(next);
    word.factors.insert(word.factors.begin(), {a + 1, t});
  };

  // Jump coordinates are cleared from the highest index down; a later step can
  // in principle disturb an earlier zero, so sweep until stable (bounded).
  int budget = 4 * int(e.size()) + 4;
  for (;;) {
    int target = -1;
    for (auto it = e.rbegin(); it != e.rend(); ++it)
      if (!is_zero(eta[*it - 1])) {
        target = *it - 1;
        break;
      }
    if (target < 0) break;
    if (--budget < 0)
      throw ZeroingStepUnsolvable(target + 1, "zeroing failed to stabilize");

    int chosen = -1;
    Rational tstar(0);
    for (int a = 0; a < m && chosen < 0; ++a) {
      std::vector<Rational> poly = coordinate_poly(coads[a], target);
      if (poly.size() == 2 && !is_zero(poly[1])) {
        chosen = a;
        tstar = -poly[0] / poly[1];
      }
    }
    if (chosen < 0) {
      // fallback: any direction whose coordinate polynomial has a rational root
      std::string last_poly = "0";
      for (int a = 0; a < m && chosen < 0; ++a) {
        std::vector<Rational> poly = coordinate_poly(coads[a], target);
        if (poly.size() < 2) continue;
        last_poly = poly_to_string(poly);
        std::vector<Rational> roots = rational_roots(poly);
        if (!roots.empty()) {
          chosen = a;
          tstar = roots.front();
        }
      }
      if (chosen < 0) throw ZeroingStepUnsolvable(target + 1, last_poly);
    }
    apply_step(chosen, tstar);
  }

  OrbitRepresentative rep;
  rep.representative = eta;
  rep.word = word;
  rep.zeroed = e;
  for (int j : e)
    if (!is_zero(eta[j - 1]))
      throw InvariantViolation("cross-section left a jump coordinate nonzero");
  if (fine_index(fa, eta) != fine_index(fa, xi) ||
      ultrafine_label(fa, eta) != ultrafine_label(fa, xi))
    throw InvariantViolation("cross-section changed the layer label");
  return rep;
}

}  // namespace liestrat

#endif
