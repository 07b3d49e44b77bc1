#pragma once

#include <gmpxx.h>

#include <compare>
#include <complex>
#include <string>
#include <string_view>

namespace affschur {

using Integer = mpz_class;
using Rational = mpq_class;

/// Gaussian rational re + im*i. Exact; the only inexact scalars in the
/// project are the long-double root approximations in roots.cpp.
struct ComplexRational {
  Rational re{0};
  Rational im{0};

  ComplexRational() = default;
  ComplexRational(Rational real) : re(std::move(real)) {}  // NOLINT: implicit by design of the scalar tower
  ComplexRational(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}
  ComplexRational(long v) : re(v) {}  // NOLINT

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  ComplexRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  ComplexRational& operator+=(const ComplexRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ComplexRational& operator-=(const ComplexRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  ComplexRational& operator*=(const ComplexRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  ComplexRational& operator/=(const ComplexRational& o);

  friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
  friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
  friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
  friend ComplexRational operator/(ComplexRational a, const ComplexRational& b) { return a /= b; }
  friend ComplexRational operator-(const ComplexRational& a) { return {-a.re, -a.im}; }

  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  /// Lexicographic on (re, im); used only to canonicalize multisets.
  friend std::strong_ordering operator<=>(const ComplexRational& a, const ComplexRational& b) {
    if (int c = cmp(a.re, b.re); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    int c = cmp(a.im, b.im);
    if (c == 0) return std::strong_ordering::equal;
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }

  std::complex<long double> to_complex() const;
};

/// "p", "p/q", or "(re,im)" with each part "p" or "p/q".
ComplexRational parse_scalar(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const ComplexRational& z);

/// Exact binary expansion of a long double as a rational.
Rational rational_from_long_double(long double x);

}  // namespace affschur
