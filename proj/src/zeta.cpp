#include "mixed_milnor/zeta.hpp"

#include <algorithm>
#include <map>

#include "mixed_milnor/error.hpp"
#include "mixed_milnor/polytope.hpp"

namespace mixed_milnor {

std::vector<std::pair<long, long>> ZetaFunction::merged() const {
  std::map<long, long> m;
  for (const auto& f : factors) m[f.d] += f.e;
  std::vector<std::pair<long, long>> out;
  for (auto [d, e] : m)
    if (e != 0) out.emplace_back(d, e);
  return out;
}

std::string ZetaFunction::product() const {
  std::string out;
  for (auto [d, e] : merged()) {
    if (!out.empty()) out += "*";
    out += d == 1 ? "(1-t)" : "(1-t^" + std::to_string(d) + ")";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

MixedPoly polar_reduction(const MixedPoly& f_face, const WeightVector& P) {
  if (f_face.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "zero face function");
  DegreeReport deg = degrees(f_face, P);
  if (!deg.strongly_polar || !deg.polar_positive)
    throw Error(ErrorCode::NotStronglyPolar, "face function is not strongly polar positive weighted homogeneous");
  const std::size_t n = f_face.num_vars();
  MixedPoly out(n);
  for (const auto& [m, c] : f_face.terms()) {
    Exponents nu(n);
    for (std::size_t k = 0; k < n; ++k) {
      nu[k] = m.nu[k] - m.mu[k];
      if (nu[k] < 0)
        throw Error(ErrorCode::NegativeReducedExponent, "reduced exponent is negative (Laurent case)");
    }
    out.add_term({nu, Exponents(n, 0)}, c);
  }
  return out;
}

long chi_torus(const std::vector<LatticePoint>& reduced_support, std::size_t k) {
  if (reduced_support.empty()) throw Error(ErrorCode::BadParams, "empty support");
  for (const auto& p : reduced_support)
    if (p.size() != k) throw Error(ErrorCode::DimensionMismatch, "support point length differs from k");
  mpz_class v = normalized_volume_with_origin(reduced_support);
  if (!v.fits_slong_p()) throw Error(ErrorCode::SupportTooLarge, "Euler characteristic overflows");
  long chi = v.get_si();
  return (k % 2 == 1) ? chi : -chi;
}

ZetaFunction zeta_function(const MixedPoly& f) {
  ZetaFunction z;
  for (const auto& I : vanishing_subsets(f).nonvanishing) {
    for (const auto& top : top_faces(f, I)) {
      DegreeReport deg = degrees(top.face_poly, top.weight);
      if (!deg.strongly_polar || !deg.polar_positive)
        throw Error(ErrorCode::NotSPWHFaceType, "a top face function is not strongly polar positive");
      MixedPoly reduced = polar_reduction(top.face_poly, top.weight);
      std::vector<LatticePoint> pts;
      for (const auto& [m, c] : reduced.terms()) {
        LatticePoint q;
        for (auto i : I) q.push_back(m.nu[i]);
        pts.push_back(std::move(q));
      }
      ZetaFactor fac;
      fac.I = I;
      fac.P = top.weight;
      fac.d = *deg.pdeg;
      fac.chi = chi_torus(pts, I.size());
      if (fac.chi % fac.d != 0)
        throw Error(ErrorCode::ZetaIntegrality, "polar degree does not divide the Euler characteristic");
      fac.e = -fac.chi / fac.d;
      z.factors.push_back(std::move(fac));
    }
  }
  return z;
}

namespace {

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// exact division by a monic polynomial
IntPoly div_monic(IntPoly a, const IntPoly& b) {
  std::size_t db = b.size() - 1;
  IntPoly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    mpz_class c = a[i];
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

IntPoly cyclotomic(long n, std::map<long, IntPoly>& cache) {
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  IntPoly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (long d = 1; d < n; ++d)
    if (n % d == 0) p = div_monic(p, cyclotomic(d, cache));
  cache[n] = p;
  return p;
}

}  // namespace

ExpandedZeta expand_zeta(const ZetaFunction& z) {
  std::map<long, long> mult;  // cyclotomic index -> exponent
  long sign_exp = 0;
  for (auto [d, e] : z.merged()) {
    sign_exp += e;  // 1 - t^d = -(t^d - 1)
    for (long k = 1; k <= d; ++k)
      if (d % k == 0) mult[k] += e;
  }
  std::map<long, IntPoly> cache;
  ExpandedZeta out{{1}, {1}};
  for (auto [k, m] : mult) {
    if (m == 0) continue;
    IntPoly c = cyclotomic(k, cache);
    IntPoly& target = m > 0 ? out.numerator : out.denominator;
    for (long r = 0; r < std::abs(m); ++r) target = mul(target, c);
  }
  bool negate = (sign_exp % 2) != 0;
  if (sgn(out.denominator[0]) < 0) {
    negate = !negate;
    for (auto& c : out.denominator) c = -c;
  }
  if (negate)
    for (auto& c : out.numerator) c = -c;
  return out;
}

std::string to_string(const IntPoly& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    mpz_class a = abs(p[i]);
    std::string mono = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
    std::string term = mono.empty() ? a.get_str() : (a == 1 ? mono : a.get_str() + "*" + mono);
    if (out.empty()) out = (p[i] < 0 ? "-" : "") + term;
    else out += (p[i] < 0 ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace mixed_milnor
