#pragma once

#include <climits>
#include <map>
#include <string>

#include "mixed_milnor/gaussian_rational.hpp"

namespace mixed_milnor {

// Truncated power series in a real parameter s with Gaussian-rational
// coefficients. Every coefficient of exponent <= known_through() is exact;
// kExact marks an exact (finite) polynomial.
class Series {
 public:
  static constexpr long kExact = LONG_MAX;

  Series() = default;
  explicit Series(long known_through) : known_(known_through) {}
  static Series constant(const GaussianRational& c);
  static Series monomial(long e, const GaussianRational& c);

  const std::map<long, GaussianRational>& coefficients() const { return c_; }
  long known_through() const { return known_; }
  bool is_exact() const { return known_ == kExact; }

  // Lowest exponent with a nonzero coefficient among the known ones;
  // known_through()+1 when none is known to be nonzero.
  long order() const;
  // Nothing nonzero within the known range.
  bool vanishes_as_known() const { return c_.empty(); }
  GaussianRational coefficient(long e) const;

  void add_term(long e, const GaussianRational& c);
  // Drops everything above `cap` and lowers known_through accordingly.
  Series& truncate(long cap);
  Series conj() const;
  Series shifted(long by) const;

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const GaussianRational& k);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const GaussianRational& k) { return a *= k; }

  // Product keeping exponents <= cap.
  static Series multiply(const Series& a, const Series& b, long cap);

  // "c*t^e + ... + O(t^k)" with exponents divided by `denominator`.
  std::string to_string(long denominator = 1) const;

 private:
  std::map<long, GaussianRational> c_;
  long known_ = kExact;
};

}  // namespace mixed_milnor
