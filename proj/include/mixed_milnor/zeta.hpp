#pragma once

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "mixed_milnor/mixed_poly.hpp"
#include "mixed_milnor/newton.hpp"

namespace mixed_milnor {

// (1 - t^d)^e contributed by the top face with weight P of f^I.
struct ZetaFactor {
  long d = 0;
  long e = 0;
  Subset I;
  WeightVector P;
  long chi = 0;
};

struct ZetaFunction {
  std::vector<ZetaFactor> factors;

  // (d, e) with equal d merged, zero exponents dropped, sorted by d
  std::vector<std::pair<long, long>> merged() const;
  // "(1-t^20)^2", "(1-t^2)^-1*(1-t^3)", "1"
  std::string product() const;
};

// z^nu zbar^mu -> z^(nu-mu). Checks strong polar positivity under P.
MixedPoly polar_reduction(const MixedPoly& f_face, const WeightVector& P);

// (-1)^(k-1) * k! * Vol_k(conv({0} u support)); support points have length k.
long chi_torus(const std::vector<LatticePoint>& reduced_support, std::size_t k);

ZetaFunction zeta_function(const MixedPoly& f);

using IntPoly = std::vector<mpz_class>;  // coefficient of t^i at index i

struct ExpandedZeta {
  IntPoly numerator;
  IntPoly denominator;  // constant term positive
};

ExpandedZeta expand_zeta(const ZetaFunction& z);
std::string to_string(const IntPoly& p);

}  // namespace mixed_milnor
