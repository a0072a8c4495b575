#include "mixed_milnor/degeneracy.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "mixed_milnor/error.hpp"

namespace mixed_milnor {

const char* status_name(NondegeneracyStatus s) {
  switch (s) {
    case NondegeneracyStatus::NoCriticalPointFound: return "NoCriticalPointFound";
    case NondegeneracyStatus::CriticalPointWitness: return "CriticalPointWitness";
    case NondegeneracyStatus::Degenerate: return "Degenerate";
  }
  return "?";
}

const char* status_name(TamenessStatus s) {
  switch (s) {
    case TamenessStatus::TameCertified: return "TameCertified";
    case TamenessStatus::NotTame: return "NotTame";
    case TamenessStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

double criticality_residual(const MixedPoly& f, const ComplexPoint& p) {
  require_finite(p);
  if (p.size() != f.num_vars()) throw Error(ErrorCode::DimensionMismatch, "point dimension mismatch");
  return masked_criticality_residual<double>(f, std::span<const std::complex<double>>(p),
                                             std::vector<bool>(f.num_vars(), true));
}

namespace {

// f = c * k with k real-valued
bool is_phase_times_real(const MixedPoly& f) {
  if (f.is_zero()) return false;
  GaussianRational c0 = f.terms().begin()->second;
  return (f * (GaussianRational(1) / c0)).is_real_valued();
}

}  // namespace

std::vector<NondegeneracyVerdict> falsify_nondegeneracy(const MixedPoly& f, int budget, std::uint64_t seed) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "zero polynomial");
  if (budget < 1) throw Error(ErrorCode::BadParams, "budget must be at least 1");
  const std::size_t n = f.num_vars();
  std::vector<std::pair<FaceDescriptor, std::vector<LatticePoint>>> jobs;
  for (auto& d : compact_faces(f)) {
    auto gens = d.generators;
    jobs.emplace_back(std::move(d), std::move(gens));
  }
  for (auto& d : essential_noncompact_faces(f)) {
    if (d.compact_part.empty()) continue;
    auto gens = d.compact_part;
    jobs.emplace_back(std::move(d), std::move(gens));
  }

  std::map<std::vector<LatticePoint>, NondegeneracyVerdict> cache;
  std::vector<NondegeneracyVerdict> out;
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    auto& [face, gens] = jobs[k];
    auto hit = cache.find(gens);
    if (hit != cache.end()) {
      NondegeneracyVerdict v = hit->second;
      v.face = face;
      out.push_back(std::move(v));
      continue;
    }
    NondegeneracyVerdict v;
    v.face = face;
    v.face_poly = face_function(f, gens);
    if (is_phase_times_real(v.face_poly)) {
      v.status = NondegeneracyStatus::Degenerate;
      v.witness = ComplexPoint(n, std::complex<double>(1.0, 0.0));
      v.residual_stats.min_residual = criticality_residual(v.face_poly, *v.witness);
    } else {
      SearchOptions opts;
      opts.budget = budget;
      opts.seed = seed + static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(budget);
      SearchResult r = search_critical_points(v.face_poly, std::vector<bool>(n, true), nullptr, opts);
      v.residual_stats = r.stats;
      if (r.witness) {
        v.status = NondegeneracyStatus::CriticalPointWitness;
        v.witness = r.witness;
      }
    }
    cache.emplace(gens, v);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<CriterionPoly> criterion_polys(const MixedPoly& f_face, const Subset& I) {
  RealImagParts parts = real_imag_parts(f_face);
  std::vector<CriterionPoly> out;
  for (std::size_t j = 0; j < f_face.num_vars(); ++j) {
    if (std::binary_search(I.begin(), I.end(), j)) continue;
    MixedPoly dg = wirtinger(parts.g, j, WirtingerKind::ZBar);
    MixedPoly dh = wirtinger(parts.h, j, WirtingerKind::ZBar);
    out.push_back({j, imaginary_part(dg * conjugate(dh))});
  }
  return out;
}

std::vector<CriterionPoly> tameness_witness_polys(const MixedPoly& f, const FaceDescriptor& face) {
  if (face.kind != FaceKind::NonCompactEssential)
    throw Error(ErrorCode::NotEssentialFace, "face is not an essential non-compact face");
  return criterion_polys(face_function(f, face.generators), face.noncompact_directions);
}

bool is_sign_definite_modulus_sum(const MixedPoly& T) {
  if (T.is_zero()) return false;
  int sign = 0;
  for (const auto& [m, c] : T.terms()) {
    if (m.nu != m.mu || !c.is_real()) return false;
    int s = sgn(c.re());
    if (sign == 0) sign = s;
    else if (s != sign) return false;
  }
  return true;
}

namespace {

constexpr double kTwoPi = 6.283185307179586;

// Random point of the torus in the I coordinates with |z_I| = r.
void sample_shell(std::mt19937_64& rng, const Subset& I, double r, ComplexPoint& p) {
  std::normal_distribution<double> gauss;
  double norm2 = 0;
  for (auto i : I) {
    std::complex<double> z;
    do {
      z = {gauss(rng), gauss(rng)};
    } while (std::abs(z) < 1e-3);
    p[i] = z;
    norm2 += std::norm(z);
  }
  double s = r / std::sqrt(norm2);
  for (auto i : I) p[i] *= s;
}

// Looks for a point of V_face in the torus where d rho (rho = |z_I|^2) lies in
// span_R(dbar g, dbar h), with |z_I| <= radius.
RhoProbe rho_probe(const MixedPoly& f_face, const Subset& I, double radius, int budget, std::uint64_t seed) {
  const std::size_t n = f_face.num_vars();
  RealImagParts parts = real_imag_parts(f_face);
  auto dg = wirtinger_gradient(parts.g, WirtingerKind::ZBar);
  auto dh = wirtinger_gradient(parts.h, WirtingerKind::ZBar);
  std::vector<bool> in_I(n, false);
  for (auto i : I) in_I[i] = true;
  RhoProbe out;
  out.ran = true;
  out.min_residual = std::numeric_limits<double>::infinity();

  auto point_of = [n](const std::vector<double>& x) {
    ComplexPoint p(n);
    for (std::size_t j = 0; j < n; ++j) p[j] = std::polar(std::exp(x[2 * j]), x[2 * j + 1]);
    return p;
  };
  // scale-free measure: |f|/sum|terms| plus the normalised span defect
  auto measure = [&](const ComplexPoint& p) {
    double mag = 0;
    for (const auto& [m, c] : f_face.terms()) {
      double t = std::abs(c.to_complex());
      for (std::size_t k = 0; k < n; ++k) t *= std::pow(std::abs(p[k]), m.nu[k] + m.mu[k]);
      mag += t;
    }
    double fv = mag > 0 ? std::abs(evaluate(f_face, p)) / mag : 1.0;
    std::vector<std::complex<double>> t(n), u1(n), u2(n);
    double tn = 0;
    for (std::size_t j = 0; j < n; ++j) {
      t[j] = in_I[j] ? p[j] : 0.0;
      tn += std::norm(t[j]);
      u1[j] = evaluate(dg[j], p);
      u2[j] = evaluate(dh[j], p);
    }
    double span = tn > 0 ? span_residual(t, u1, u2) / std::sqrt(tn) : 1.0;
    return std::make_pair(fv, span);
  };

  int restarts = std::max(4, budget / 4);
  for (int r = 0; r < restarts; ++r) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(r));
    std::uniform_real_distribution<double> logmag(-2.0, 2.0), angle(0.0, kTwoPi);
    std::vector<double> x(2 * n + 2);
    for (std::size_t j = 0; j < n; ++j) {
      x[2 * j] = in_I[j] ? std::log(radius / 2) : logmag(rng);
      x[2 * j + 1] = angle(rng);
    }
    x[2 * n] = 1.0;
    x[2 * n + 1] = 1.0;
    auto residual = [&](const std::vector<double>& y) {
      ComplexPoint p = point_of(y);
      double mag = 0;
      for (const auto& [m, c] : f_face.terms()) {
        double t = std::abs(c.to_complex());
        for (std::size_t k = 0; k < n; ++k) t *= std::pow(std::abs(p[k]), m.nu[k] + m.mu[k]);
        mag += t;
      }
      std::vector<double> res;
      std::complex<double> fv = evaluate(f_face, p) / (mag > 0 ? mag : 1.0);
      res.push_back(fv.real());
      res.push_back(fv.imag());
      double zi = 0;
      for (auto i : I) zi += std::norm(p[i]);
      zi = std::sqrt(zi);
      for (std::size_t j = 0; j < n; ++j) {
        std::complex<double> t = in_I[j] ? p[j] : 0.0;
        std::complex<double> d = (t - y[2 * n] * evaluate(dg[j], p) - y[2 * n + 1] * evaluate(dh[j], p)) /
                                 (zi > 0 ? zi : 1.0);
        res.push_back(d.real());
        res.push_back(d.imag());
      }
      return res;
    };
    auto project = [&](std::vector<double>& y) {
      for (std::size_t j = 0; j < n; ++j) y[2 * j] = std::clamp(y[2 * j], -10.0, 10.0);
    };
    x = levenberg_marquardt(residual, x, 80, project);
    ComplexPoint p = point_of(x);
    auto [fv, span] = measure(p);
    double score = std::max(fv, span);
    out.min_residual = std::min(out.min_residual, score);
    double zi = 0;
    for (auto i : I) zi += std::norm(p[i]);
    if (score < 1e-10 && std::sqrt(zi) <= radius) {
      out.critical_value_found = true;
      out.point = p;
      break;
    }
  }
  return out;
}

int severity(TamenessStatus s) {
  switch (s) {
    case TamenessStatus::TameCertified: return 0;
    case TamenessStatus::Inconclusive: return 1;
    case TamenessStatus::NotTame: return 2;
  }
  return 0;
}

}  // namespace

TamenessVerdict local_tameness_check(const MixedPoly& f, const Subset& I, const TamenessOptions& opts) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "zero polynomial");
  if (I.empty()) throw Error(ErrorCode::NotVanishing, "empty subset is not a vanishing coordinate subspace");
  for (auto i : I)
    if (i >= f.num_vars()) throw Error(ErrorCode::IndexOutOfRange, "subset index out of range");
  if (!restrict_to(f, I).is_zero())
    throw Error(ErrorCode::NotVanishing, "f does not vanish on this coordinate subspace");
  if (!(opts.probe_radius > 0)) throw Error(ErrorCode::BadParams, "probe radius must be positive");
  const std::size_t n = f.num_vars();

  TamenessVerdict verdict;
  verdict.I = I;
  verdict.status = TamenessStatus::TameCertified;
  verdict.certified_radius = kInfinity;

  std::size_t face_index = 0;
  for (auto& face : essential_noncompact_faces(f, true)) {
    if (face.noncompact_directions != I) continue;
    FaceTameness ft;
    ft.face = face;
    ft.face_poly = face_function(f, face.generators);
    ft.criterion = criterion_polys(ft.face_poly, I);
    for (const auto& c : ft.criterion)
      if (is_sign_definite_modulus_sum(c.T)) {
        ft.certifying_j = c.j;
        break;
      }
    if (!ft.certifying_j && ft.face_poly.is_holomorphic()) {
      for (std::size_t j = 0; j < n && !ft.certifying_j; ++j) {
        if (std::binary_search(I.begin(), I.end(), j)) continue;
        if (wirtinger(ft.face_poly, j, WirtingerKind::Z).size() == 1) ft.certifying_j = j;
      }
    }
    if (ft.certifying_j) {
      ft.status = TamenessStatus::TameCertified;
      ft.radius = kInfinity;
    } else {
      std::vector<bool> free(n, true);
      for (auto i : I) free[i] = false;
      ft.status = TamenessStatus::Inconclusive;
      ft.radius = opts.probe_radius;
      std::uint64_t base = opts.seed + face_index * 1000003ull;
      for (int s = opts.shells - 1; s >= 0; --s) {
        double r = opts.probe_radius * std::ldexp(1.0, -s);
        SearchOptions so;
        so.budget = opts.budget;
        so.seed = base + static_cast<std::uint64_t>(s) * static_cast<std::uint64_t>(opts.budget);
        SearchResult res = search_critical_points(
            ft.face_poly, free, [&](std::mt19937_64& rng, ComplexPoint& p) { sample_shell(rng, I, r, p); }, so);
        ft.stats.samples += res.stats.samples;
        ft.stats.restarts += res.stats.restarts;
        ft.stats.min_residual = std::min(ft.stats.min_residual, res.stats.min_residual);
        if (res.witness) {
          TamenessWitness w;
          w.frozen.assign(n, 0.0);
          w.critical.assign(n, 0.0);
          for (std::size_t j = 0; j < n; ++j) (free[j] ? w.critical : w.frozen)[j] = (*res.witness)[j];
          w.residual = res.witness_residual;
          ft.witness = w;
          ft.status = TamenessStatus::NotTame;
          ft.radius = r;
          break;
        }
      }
      ft.rho = rho_probe(ft.face_poly, I, opts.probe_radius, opts.budget, base + 7919);
    }
    if (severity(ft.status) > severity(verdict.status)) {
      verdict.status = ft.status;
      if (ft.status == TamenessStatus::NotTame) verdict.witness = ft.witness;
    }
    if (ft.status == TamenessStatus::NotTame && !verdict.witness) verdict.witness = ft.witness;
    verdict.certified_radius = std::min(verdict.certified_radius, ft.radius);
    verdict.faces.push_back(std::move(ft));
    ++face_index;
  }
  if (verdict.status == TamenessStatus::NotTame) {
    for (const auto& ft : verdict.faces)
      if (ft.status == TamenessStatus::NotTame) {
        verdict.certified_radius = ft.radius;
        break;
      }
  }
  return verdict;
}

TamenessRadii tameness_radii(const MixedPoly& f, double r0, const TamenessOptions& opts) {
  TamenessRadii out;
  for (const auto& I : vanishing_subsets(f).vanishing) {
    TamenessVerdict v = local_tameness_check(f, I, opts);
    double r = v.status == TamenessStatus::NotTame ? 0.0 : v.certified_radius;
    out.r_I.emplace_back(I, r);
    out.r_nc = std::min(out.r_nc, r);
  }
  out.rho_0 = std::min(out.r_nc, r0);
  return out;
}

}  // namespace mixed_milnor
