#pragma once

#include <complex>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace mixed_milnor {

using Rational = mpq_class;

// Exact complex number re + i*im with rational parts. mpq_class keeps both
// parts canonical (lowest terms, positive denominator).
class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(long v) : re_(v), im_(0) {}  // NOLINT(implicit)
  GaussianRational(Rational re) : re_(std::move(re)), im_(0) {  // NOLINT
    re_.canonicalize();
  }
  GaussianRational(Rational re, Rational im)
      : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm2() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }
  template <typename T>
  std::complex<T> to_complex_as() const {
    return {to_real<T>(re_), to_real<T>(im_)};
  }

  // "3", "-1/2", "2i", "(1/2-3i)". Output re-parses with the polynomial grammar.
  std::string to_string() const;

 private:
  // exact for word-sized numerator and denominator
  template <typename T>
  static T to_real(const Rational& q) {
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p())
      return static_cast<T>(q.get_num().get_si()) / static_cast<T>(q.get_den().get_si());
    return static_cast<T>(q.get_d());
  }

  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

// Exact rational from a finite double (every double is a dyadic rational).
Rational rational_from_double(double x);

}  // namespace mixed_milnor
