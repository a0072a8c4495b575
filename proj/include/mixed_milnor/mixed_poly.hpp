#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mixed_milnor/gaussian_rational.hpp"

namespace mixed_milnor {

using Exponents = std::vector<int>;

// z^nu * zbar^mu. The support point is nu + mu.
struct MixedMonomial {
  Exponents nu;
  Exponents mu;

  std::size_t num_vars() const { return nu.size(); }
  Exponents support() const;
  int total_degree() const;

  friend bool operator==(const MixedMonomial&, const MixedMonomial&) = default;
};

// Graded order on (nu+mu, nu): ascending total degree, then descending
// lexicographic support, then descending lexicographic nu.
struct MonomialOrder {
  bool operator()(const MixedMonomial& a, const MixedMonomial& b) const;
};

// Sum of c * z^nu * zbar^mu with Gaussian-rational coefficients. Zero
// coefficients are never stored, so the term map is a canonical form.
class MixedPoly {
 public:
  using TermMap = std::map<MixedMonomial, GaussianRational, MonomialOrder>;

  explicit MixedPoly(std::size_t n = 1);

  static MixedPoly constant(std::size_t n, const GaussianRational& c);
  static MixedPoly variable(std::size_t n, std::size_t j);       // z_j, 0-based
  static MixedPoly conj_variable(std::size_t n, std::size_t j);  // zbar_j
  static MixedPoly monomial(std::size_t n, Exponents nu, Exponents mu,
                            const GaussianRational& c = GaussianRational(1));

  std::size_t num_vars() const { return n_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const MixedMonomial& m, const GaussianRational& c);

  bool is_real_valued() const;
  bool is_holomorphic() const;
  int total_degree() const;
  const GaussianRational* coefficient(const MixedMonomial& m) const;

  // Same terms, ambient variable count raised to m >= n.
  MixedPoly embedded(std::size_t m, std::size_t offset = 0) const;

  MixedPoly& operator+=(const MixedPoly& o);
  MixedPoly& operator-=(const MixedPoly& o);
  MixedPoly& operator*=(const GaussianRational& c);
  MixedPoly operator-() const;

  friend MixedPoly operator+(MixedPoly a, const MixedPoly& b) { return a += b; }
  friend MixedPoly operator-(MixedPoly a, const MixedPoly& b) { return a -= b; }
  friend MixedPoly operator*(const MixedPoly& a, const MixedPoly& b);
  friend MixedPoly operator*(MixedPoly a, const GaussianRational& c) { return a *= c; }
  friend MixedPoly operator*(const GaussianRational& c, MixedPoly a) { return a *= c; }

  friend bool operator==(const MixedPoly& a, const MixedPoly& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  MixedPoly pow(unsigned e) const;

 private:
  std::size_t n_;
  TermMap terms_;
};

enum class WirtingerKind { Z, ZBar };

// swaps nu and mu in every term and conjugates the coefficients
MixedPoly conjugate(const MixedPoly& f);

struct RealImagParts {
  MixedPoly g;  // (f + conj f) / 2
  MixedPoly h;  // (f - conj f) / (2i)
};
RealImagParts real_imag_parts(const MixedPoly& f);

// Terms with nu_k = mu_k = 0 for every k outside `subset` (0-based indices).
// The ambient variable count is kept.
MixedPoly restrict_to(const MixedPoly& f, std::span<const std::size_t> subset);

// Formal d/dz_j or d/dzbar_j with z_j and zbar_j independent. j is 0-based.
MixedPoly wirtinger(const MixedPoly& f, std::size_t j, WirtingerKind kind);
std::vector<MixedPoly> wirtinger_gradient(const MixedPoly& f, WirtingerKind kind);

// (q - conj q) / (2i), the imaginary part as a real-valued mixed polynomial.
MixedPoly imaginary_part(const MixedPoly& q);

using ComplexPoint = std::vector<std::complex<double>>;

struct GradientPair {
  std::vector<std::complex<double>> d_z;
  std::vector<std::complex<double>> d_zbar;
};

void require_finite(std::span<const std::complex<double>> p);

template <typename T>
std::complex<T> evaluate(const MixedPoly& f, std::span<const std::complex<T>> p);

template <typename T>
void gradients(const MixedPoly& f, std::span<const std::complex<T>> p,
               std::vector<std::complex<T>>& d_z, std::vector<std::complex<T>>& d_zbar);

inline std::complex<double> evaluate(const MixedPoly& f, const ComplexPoint& p) {
  return evaluate<double>(f, std::span<const std::complex<double>>(p));
}
GradientPair gradients(const MixedPoly& f, const ComplexPoint& p);

// Per-variable magnitude of the derivative terms before cancellation:
// sum over terms of |c| (nu_j + mu_j) |p|^(nu+mu) / |p_j|. Zero when z_j is absent.
template <typename T>
std::vector<T> gradient_scale(const MixedPoly& f, std::span<const std::complex<T>> p);

// Canonical text form; parse_poly(to_string(f)) == f.
std::string to_string(const MixedPoly& f);

}  // namespace mixed_milnor
