#ifndef LIESTRAT_RATIONAL_HPP
#define LIESTRAT_RATIONAL_HPP

#include <gmpxx.h>

#include <complex>
#include <string>

#include "liestrat/errors.hpp"

namespace liestrat {

/// Exact rational scalar.  GMP keeps values canonical (positive denominator,
/// lowest terms) as long as construction goes through the helpers below.
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
  if (den == 0) throw Error("rational with zero denominator");
  mpz_class n(num), d(den);
  Rational q(n, d);
  q.canonicalize();
  return q;
}

/// Parses "p", "-p" or "p/q".  Throws ValidationError on malformed input.
inline Rational parse_rational(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0 || text.empty())
    throw ValidationError("rational-parse", {}, text,
                          "cannot parse rational '" + text + "'");
  if (q.get_den() == 0)
    throw ValidationError("rational-parse", {}, text,
                          "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline double to_double(const Rational& q) { return q.get_d(); }

/// Exact element of Q(i): re + im*i.  Stands in for a complex scalar the same
/// way Rational stands in for a real one.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(int n) : re(n), im(0) {}  // NOLINT: implicit by design
  GaussianRational(Rational r) : re(std::move(r)), im(0) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    Rational n = b.re * b.re + b.im * b.im;
    if (sgn(n) == 0) throw Error("division by zero Gaussian rational");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
  GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }
};

inline bool is_zero(const GaussianRational& z) { return is_zero(z.re) && is_zero(z.im); }

inline std::string to_string(const GaussianRational& z) {
  if (is_zero(z.im)) return to_string(z.re);
  return to_string(z.re) + (sgn(z.im) >= 0 ? "+" : "") + to_string(z.im) + "i";
}

inline std::complex<double> to_complex(const GaussianRational& z) {
  return {z.re.get_d(), z.im.get_d()};
}

inline GaussianRational complexify(const Rational& r) { return GaussianRational(r); }

}  // namespace liestrat

#endif
