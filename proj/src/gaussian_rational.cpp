#include "mixed_milnor/gaussian_rational.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mixed_milnor {

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  Rational d = o.norm2();
  if (sgn(d) == 0) throw std::domain_error("division by zero Gaussian rational");
  *this *= o.conj();
  re_ /= d;
  im_ /= d;
  return *this;
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  if (sgn(re_) == 0) {
    if (im_ == 1) return "i";
    if (im_ == -1) return "-i";
    return im_.get_str() + "i";
  }
  std::string im_part;
  if (abs(im_) == 1) {
    im_part = "i";
  } else {
    im_part = Rational(abs(im_)).get_str() + "i";
  }
  return "(" + re_.get_str() + (sgn(im_) > 0 ? "+" : "-") + im_part + ")";
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  return os << z.to_string();
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::domain_error("non-finite double");
  Rational r(x);  // exact: mpq_set_d
  r.canonicalize();
  return r;
}

}  // namespace mixed_milnor
