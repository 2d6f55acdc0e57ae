#ifndef LIESTRAT_NUMERIC_HPP
#define LIESTRAT_NUMERIC_HPP

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "liestrat/matrix.hpp"
#include "liestrat/subspace.hpp"

namespace liestrat {

// Floating-point shadows of exact data.  Everything in this header is
// diagnostic-only: the exact pipeline never consumes these values.

inline Eigen::MatrixXd to_eigen(const Mat<Rational>& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = to_double(m(i, j));
  return out;
}

inline Eigen::VectorXd to_eigen(const std::vector<Rational>& v) {
  Eigen::VectorXd out(long(v.size()));
  for (size_t i = 0; i < v.size(); ++i) out(long(i)) = to_double(v[i]);
  return out;
}

inline Eigen::MatrixXd matrix_exponential(const Eigen::MatrixXd& m) { return m.exp(); }

/// Orthogonal projection onto the row space of an exact basis matrix.
inline Eigen::MatrixXd row_space_projection(const Mat<Rational>& basis_rows, int ambient) {
  if (basis_rows.rows() == 0) return Eigen::MatrixXd::Zero(ambient, ambient);
  Eigen::MatrixXd at = to_eigen(basis_rows).transpose();  // ambient x k
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(at);
  Eigen::MatrixXd q =
      qr.householderQ() * Eigen::MatrixXd::Identity(ambient, basis_rows.rows());
  return q * q.transpose();
}

/// Operator-norm distance of the orthogonal projections onto two subspaces.
/// 0 iff the subspaces agree; 1 if one contains a direction orthogonal to the
/// other; symmetric and satisfies the triangle inequality.
inline double projection_gap(const Subspace<Rational>& a, const Subspace<Rational>& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionMismatch("projection_gap: ambient mismatch");
  int n = a.ambient_dim();
  if (n == 0) return 0.0;
  Eigen::MatrixXd diff =
      row_space_projection(a.basis(), n) - row_space_projection(b.basis(), n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(diff);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace liestrat

#endif
