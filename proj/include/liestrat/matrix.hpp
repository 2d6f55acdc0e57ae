#ifndef LIESTRAT_MATRIX_HPP
#define LIESTRAT_MATRIX_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "liestrat/errors.hpp"
#include "liestrat/rational.hpp"

namespace liestrat {

// ---------------------------------------------------------------------------
// small dense vector helpers (coordinate vectors / functionals as rows)
// ---------------------------------------------------------------------------

template <typename K>
std::vector<K> vec_add(const std::vector<K>& a, const std::vector<K>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector length mismatch in add");
  std::vector<K> r(a.size(), K(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

template <typename K>
std::vector<K> vec_sub(const std::vector<K>& a, const std::vector<K>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector length mismatch in sub");
  std::vector<K> r(a.size(), K(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

template <typename K>
std::vector<K> vec_scale(const K& c, const std::vector<K>& a) {
  std::vector<K> r(a.size(), K(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

/// Bilinear pairing of a functional row with a coordinate vector.
template <typename K>
K vec_dot(const std::vector<K>& a, const std::vector<K>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector length mismatch in dot");
  K s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <typename K>
bool vec_is_zero(const std::vector<K>& a) {
  for (const K& x : a)
    if (!is_zero(x)) return false;
  return true;
}

template <typename K>
std::string vec_to_string(const std::vector<K>& a) {
  std::string s = "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += ", ";
    s += to_string(a[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// Mat<K>: dense matrix over an exact field
// ---------------------------------------------------------------------------

template <typename K>
class Mat {
public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * size_t(cols), K(0)) {
    if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimension");
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }

  static Mat from_rows(const std::vector<std::vector<K>>& rows) {
    if (rows.empty()) return Mat(0, 0);
    Mat m(int(rows.size()), int(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows[0].size())
        throw DimensionMismatch("ragged row list in from_rows");
      for (size_t j = 0; j < rows[i].size(); ++j) m(int(i), int(j)) = rows[i][j];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  K& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const K& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  std::vector<K> row(int i) const {
    std::vector<K> r(cols_, K(0));
    for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }

  void set_row(int i, const std::vector<K>& v) {
    if (int(v.size()) != cols_) throw DimensionMismatch("row length mismatch");
    for (int j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
  }

  void append_row(const std::vector<K>& v) {
    if (rows_ == 0 && cols_ == 0) cols_ = int(v.size());
    if (int(v.size()) != cols_) throw DimensionMismatch("row length mismatch in append");
    a_.insert(a_.end(), v.begin(), v.end());
    ++rows_;
  }

  Mat transposed() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Mat r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const K& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (int j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  friend Mat operator+(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw DimensionMismatch("matrix sum shape mismatch");
    Mat r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
    return r;
  }

  friend Mat operator-(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw DimensionMismatch("matrix difference shape mismatch");
    Mat r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
    return r;
  }

  friend Mat operator*(const K& c, const Mat& a) {
    Mat r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = c * a.a_[i];
    return r;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  /// A x for a coordinate column x.
  std::vector<K> apply(const std::vector<K>& x) const {
    if (int(x.size()) != cols_) throw DimensionMismatch("apply length mismatch");
    std::vector<K> r(rows_, K(0));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!is_zero((*this)(i, j))) r[i] += (*this)(i, j) * x[j];
    return r;
  }

  /// r A for a functional row r.
  std::vector<K> apply_left(const std::vector<K>& r) const {
    if (int(r.size()) != rows_) throw DimensionMismatch("apply_left length mismatch");
    std::vector<K> out(cols_, K(0));
    for (int i = 0; i < rows_; ++i)
      if (!is_zero(r[i]))
        for (int j = 0; j < cols_; ++j) out[j] += r[i] * (*this)(i, j);
    return out;
  }

  bool is_zero_matrix() const {
    for (const K& x : a_)
      if (!is_zero(x)) return false;
    return true;
  }

  K trace() const {
    if (rows_ != cols_) throw DimensionMismatch("trace of non-square matrix");
    K t(0);
    for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  /// In-place reduced row echelon form.  Returns the rank; if pivots is
  /// non-null the pivot column of each of the first rank rows is stored.
  int rref(std::vector<int>* pivots = nullptr) {
    if (pivots) pivots->clear();
    int lead = 0;
    for (int col = 0; col < cols_ && lead < rows_; ++col) {
      int piv = -1;
      for (int i = lead; i < rows_; ++i)
        if (!is_zero((*this)(i, col))) {
          piv = i;
          break;
        }
      if (piv < 0) continue;
      swap_rows(piv, lead);
      K inv = K(1) / (*this)(lead, col);
      for (int j = col; j < cols_; ++j) (*this)(lead, j) = inv * (*this)(lead, j);
      for (int i = 0; i < rows_; ++i) {
        if (i == lead) continue;
        K f = (*this)(i, col);
        if (is_zero(f)) continue;
        for (int j = col; j < cols_; ++j) (*this)(i, j) -= f * (*this)(lead, j);
      }
      if (pivots) pivots->push_back(col);
      ++lead;
    }
    return lead;
  }

  int rank() const {
    Mat copy = *this;
    return copy.rref();
  }

  /// Row basis of the kernel {x : A x = 0}.
  Mat kernel_basis_rows() const {
    Mat r = *this;
    std::vector<int> pivots;
    int rank = r.rref(&pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (int p : pivots) is_pivot[p] = true;
    Mat out(cols_ - rank, cols_);
    int k = 0;
    for (int f = 0; f < cols_; ++f) {
      if (is_pivot[f]) continue;
      out(k, f) = K(1);
      for (int i = 0; i < rank; ++i) out(k, pivots[i]) = -r(i, f);
      ++k;
    }
    return out;
  }

  /// Exact inverse; throws if singular.
  Mat inverse() const {
    if (rows_ != cols_) throw DimensionMismatch("inverse of non-square matrix");
    int n = rows_;
    Mat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
      aug(i, n + i) = K(1);
    }
    std::vector<int> pivots;
    aug.rref(&pivots);
    // all pivots must land in the left block, else the matrix is singular
    if (int(pivots.size()) < n || pivots[n - 1] >= n) throw Error("matrix is singular");
    Mat inv(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
  }

  std::string to_string() const {
    std::string s = "[";
    for (int i = 0; i < rows_; ++i) {
      if (i) s += "; ";
      s += vec_to_string(row(i));
    }
    return s + "]";
  }

private:
  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  int rows_, cols_;
  std::vector<K> a_;
};

/// Stacks the rows of b under the rows of a.
template <typename K>
Mat<K> stack_rows(const Mat<K>& a, const Mat<K>& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) throw DimensionMismatch("stack_rows width mismatch");
  Mat<K> r = a;
  for (int i = 0; i < b.rows(); ++i) r.append_row(b.row(i));
  return r;
}

template <typename K>
bool matrix_is_nilpotent(const Mat<K>& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("nilpotency of non-square matrix");
  Mat<K> p = m;
  for (int k = 1; k < m.rows(); ++k) {
    if (p.is_zero_matrix()) return true;
    p = p * m;
  }
  return p.is_zero_matrix();
}

/// Characteristic polynomial det(tI - M) by the Faddeev-LeVerrier recursion.
/// Returns coefficients c[0] + c[1] t + ... + c[n] t^n with c[n] = 1.
template <typename K>
std::vector<K> char_poly(const Mat<K>& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("char_poly of non-square matrix");
  int n = m.rows();
  std::vector<K> c(size_t(n) + 1, K(0));
  c[n] = K(1);
  Mat<K> aux = Mat<K>::identity(n);
  for (int k = 1; k <= n; ++k) {
    aux = m * aux;
    K ck = -(K(1) / K(k)) * aux.trace();
    c[n - k] = ck;
    for (int i = 0; i < n; ++i) aux(i, i) += ck;
  }
  return c;
}

namespace detail {

inline void push_divisors(const mpz_class& value, std::vector<mpz_class>* out) {
  mpz_class n = abs(value);
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out->push_back(d);
      out->push_back(n / d);
    }
  }
}

}  // namespace detail

/// All rational roots of the polynomial with the given rational coefficients
/// (c[0] + c[1] t + ...), each listed once, sorted.  Uses the rational root
/// theorem on the integer-scaled polynomial; divisor enumeration bails out on
/// constant terms past 10^15, returning only the roots found so far.
inline std::vector<Rational> rational_roots(std::vector<Rational> c) {
  while (!c.empty() && is_zero(c.back())) c.pop_back();
  std::vector<Rational> roots;
  if (c.empty()) return roots;  // zero polynomial: caller decides
  size_t low = 0;
  while (low < c.size() && is_zero(c[low])) ++low;
  if (low > 0) {
    roots.push_back(Rational(0));
    c.erase(c.begin(), c.begin() + long(low));
  }
  if (c.size() <= 1) return roots;

  mpz_class scale(1);
  for (const Rational& q : c) scale = lcm(scale, q.get_den());
  std::vector<mpz_class> z;
  z.reserve(c.size());
  for (const Rational& q : c) {
    mpz_class num = q.get_num() * (scale / q.get_den());
    z.push_back(num);
  }
  const mpz_class bound("1000000000000000");
  if (abs(z.front()) > bound || abs(z.back()) > bound) return roots;

  std::vector<mpz_class> ps, qs;
  detail::push_divisors(z.front(), &ps);
  detail::push_divisors(z.back(), &qs);
  auto eval_is_zero = [&](const Rational& t) {
    Rational acc(0);
    for (size_t k = z.size(); k-- > 0;) acc = acc * t + Rational(z[k]);
    return is_zero(acc);
  };
  for (const mpz_class& p : ps)
    for (const mpz_class& q : qs)
      for (int s : {1, -1}) {
        mpz_class num = (s == 1) ? p : mpz_class(-p);
        Rational cand(num, q);
        cand.canonicalize();
        if (eval_is_zero(cand)) roots.push_back(cand);
      }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

template <typename K>
std::string poly_to_string(const std::vector<K>& c) {
  std::string s;
  for (size_t k = 0; k < c.size(); ++k) {
    if (is_zero(c[k])) continue;
    if (!s.empty()) s += " + ";
    s += to_string(c[k]) + "*t^" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

inline Mat<GaussianRational> complexify(const Mat<Rational>& m) {
  Mat<GaussianRational> out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = GaussianRational(m(i, j));
  return out;
}

inline std::vector<GaussianRational> complexify(const std::vector<Rational>& v) {
  std::vector<GaussianRational> out;
  out.reserve(v.size());
  for (const Rational& q : v) out.emplace_back(q);
  return out;
}

}  // namespace liestrat

#endif
