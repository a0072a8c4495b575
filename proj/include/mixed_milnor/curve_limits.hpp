#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mixed_milnor/mixed_poly.hpp"
#include "mixed_milnor/newton.hpp"
#include "mixed_milnor/series.hpp"

namespace mixed_milnor {

struct ArcTerm {
  Rational exponent;
  GaussianRational coeff;
};

// z_j(t) = sum of coeff * t^exponent, t > 0 real. `truncation` = k means the
// jet is only known modulo t^k; without it the jet is an exact polynomial.
struct Jet {
  std::vector<ArcTerm> terms;  // strictly increasing exponents, nonzero coefficients
  std::optional<Rational> truncation;

  bool is_zero() const { return terms.empty(); }
  Rational leading_exponent() const { return terms.empty() ? Rational(0) : terms.front().exponent; }
};

struct Arc {
  std::vector<Jet> jets;

  std::size_t num_vars() const { return jets.size(); }
  bool is_exact() const;
  // lcm of exponent denominators; t = s^q turns every exponent into an integer
  long denominator() const;
  // jets in the integer parameter s
  std::vector<Series> in_s() const;
  long max_exponent_in_s() const;

  // z_j = coeffs[j] * t^exps[j]; a zero coefficient gives the zero jet
  static Arc monomial(const std::vector<GaussianRational>& coeffs, const std::vector<Rational>& exps);
};

// "z1 = (1+0i); z2 = t; z3 = (2+0i)*t^3 + O(t^6)". Unlisted variables are
// the zero jet. Exponents may be written t^(3/2).
Arc parse_arc(std::string_view text, std::size_t n_hint = 0);
std::string to_string(const Arc& arc);

struct ArcSeries {
  Series series;     // in s = t^(1/q)
  long denominator;  // q
};

// f(z(t), conj z(t)) through t-order `order`. TruncationOverflow when the arc's
// jets are too short to determine that many terms.
ArcSeries expand_arc(const MixedPoly& f, const Arc& arc, long order);

struct ReductionStep {
  bool swap = false;   // (v_g, v_h) := (-v_h, v_g), i.e. f replaced by i f
  Rational lambda;     // v_h -= lambda * t^shift * v_g
  Rational shift;
};

struct LimitTangentResult {
  std::vector<GaussianRational> leading_g;  // exact leading coefficient vectors
  std::vector<GaussianRational> leading_h;
  ComplexPoint covector_g;  // unit vectors
  ComplexPoint covector_h;
  Rational order_g;  // t-exponent of the leading terms
  Rational order_h;
  std::vector<ReductionStep> reduction_steps;
  bool independent = false;
  long computation_order = 0;  // s-order the series were carried to (0: exact)
};

struct LimitOptions {
  std::optional<long> order;  // s-order; default 4 * deg f * max exponent
  int raises = 2;
};

LimitTangentResult limit_tangent(const MixedPoly& f, const Arc& arc, const LimitOptions& opts = {});

enum class AfStatus { Holds, Fails, Inconclusive };
const char* status_name(AfStatus s);

struct AfArcVerdict {
  bool contains_CI = false;
  AfStatus status = AfStatus::Inconclusive;
  Subset I;
  LimitTangentResult limit;
};

AfArcVerdict af_test_arc(const MixedPoly& f, const Arc& arc, const Subset& I, const LimitOptions& opts = {});

// Distance of p from span_R(dbar g(p), dbar h(p)) relative to |p|.
// SingularFiber when p is (numerically) a critical point of f.
double transversality_residual(const MixedPoly& f, const ComplexPoint& p);

struct TransversalityScan {
  int accepted = 0;
  long attempts = 0;
  int singular = 0;
  double min_residual = 0.0;
  ComplexPoint argmin;
};

// Uniform samples of the sphere |z| = radius kept when |f| <= delta.
TransversalityScan transversality_scan(const MixedPoly& f, double radius, double delta, int samples,
                                       std::uint64_t seed, long max_attempts = 0);

struct OpennessProbe {
  double arg_coverage = 0.0;
  double sector_halfwidth = 0.0;  // pi when coverage == 1
  int nonzero_samples = 0;
};

constexpr int kArgBins = 256;

OpennessProbe boundary_openness_probe(const MixedPoly& f, const ComplexPoint& p, double epsilon, int samples,
                                      std::uint64_t seed);

}  // namespace mixed_milnor
