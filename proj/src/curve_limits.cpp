#include "mixed_milnor/curve_limits.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <random>

#include "mixed_milnor/error.hpp"
#include "mixed_milnor/local_search.hpp"
#include "mixed_milnor/parser.hpp"

namespace mixed_milnor {

const char* status_name(AfStatus s) {
  switch (s) {
    case AfStatus::Holds: return "Holds";
    case AfStatus::Fails: return "Fails";
    case AfStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

bool Arc::is_exact() const {
  return std::all_of(jets.begin(), jets.end(), [](const Jet& j) { return !j.truncation; });
}

long Arc::denominator() const {
  mpz_class q = 1;
  for (const auto& j : jets) {
    for (const auto& t : j.terms) q = lcm(q, t.exponent.get_den());
    if (j.truncation) q = lcm(q, j.truncation->get_den());
  }
  if (!q.fits_slong_p() || q > 1000000) throw Error(ErrorCode::BadArc, "exponent denominators too large");
  return q.get_si();
}

namespace {

long to_s(const Rational& e, long q) {
  Rational v = e * q;
  if (v.get_den() != 1 || !v.get_num().fits_slong_p()) throw Error(ErrorCode::BadArc, "exponent out of range");
  return v.get_num().get_si();
}

}  // namespace

std::vector<Series> Arc::in_s() const {
  long q = denominator();
  std::vector<Series> out;
  for (const auto& j : jets) {
    Series s(j.truncation ? to_s(*j.truncation, q) - 1 : Series::kExact);
    for (const auto& t : j.terms) s.add_term(to_s(t.exponent, q), t.coeff);
    out.push_back(std::move(s));
  }
  return out;
}

long Arc::max_exponent_in_s() const {
  long q = denominator(), m = 1;
  for (const auto& j : jets) {
    if (!j.terms.empty()) m = std::max(m, to_s(j.terms.back().exponent, q));
    if (j.truncation) m = std::max(m, to_s(*j.truncation, q));
  }
  return m;
}

Arc Arc::monomial(const std::vector<GaussianRational>& coeffs, const std::vector<Rational>& exps) {
  if (coeffs.size() != exps.size()) throw Error(ErrorCode::DimensionMismatch, "arc coefficient/exponent lengths differ");
  Arc a;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    Jet jet;
    if (sgn(exps[j]) < 0) throw Error(ErrorCode::BadArc, "negative arc exponent");
    if (!coeffs[j].is_zero()) jet.terms.push_back({exps[j], coeffs[j]});
    a.jets.push_back(std::move(jet));
  }
  return a;
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

Rational parse_exponent(const std::string& raw) {
  std::string s = trim(raw);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = trim(s.substr(1, s.size() - 2));
  if (s.empty()) throw Error(ErrorCode::BadArc, "missing exponent");
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/')
      throw Error(ErrorCode::BadArc, "bad exponent '" + s + "'");
  try {
    Rational q(s);
    if (q.get_den() == 0) throw Error(ErrorCode::BadArc, "zero denominator in exponent");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::BadArc, "bad exponent '" + s + "'");
  }
}

// "t", "t^3", "t^(3/2)", "t^3/2"
Rational parse_t_power(const std::string& s) {
  std::string r = trim(s);
  if (r.empty() || r[0] != 't') throw Error(ErrorCode::BadArc, "expected 't'");
  r = trim(r.substr(1));
  if (r.empty()) return Rational(1);
  if (r[0] != '^') throw Error(ErrorCode::BadArc, "expected '^' after 't'");
  return parse_exponent(r.substr(1));
}

GaussianRational parse_constant(const std::string& text) {
  MixedPoly p = parse_poly(text, 1);
  if (p.is_zero()) return GaussianRational();
  if (p.size() != 1 || p.terms().begin()->first.total_degree() != 0)
    throw Error(ErrorCode::BadArc, "arc coefficient '" + text + "' is not a constant");
  return p.terms().begin()->second;
}

Jet parse_jet(const std::string& text) {
  std::vector<std::string> pieces;
  int depth = 0;
  std::size_t start = 0;
  char prev = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && (c == '+' || c == '-') && prev != 0 && prev != '*' && prev != '^' && prev != '/') {
      pieces.push_back(text.substr(start, i - start));
      start = i;
    }
    if (!std::isspace(static_cast<unsigned char>(c))) prev = c;
  }
  pieces.push_back(text.substr(start));

  Jet jet;
  std::map<Rational, GaussianRational> acc;
  for (const auto& raw : pieces) {
    std::string piece = trim(raw);
    bool negative = false;
    if (!piece.empty() && (piece[0] == '+' || piece[0] == '-')) {
      negative = piece[0] == '-';
      piece = trim(piece.substr(1));
    }
    if (piece.empty()) throw Error(ErrorCode::BadArc, "empty term in arc '" + text + "'");
    if (piece.rfind("O(", 0) == 0) {
      if (piece.back() != ')') throw Error(ErrorCode::BadArc, "unterminated O(...)");
      jet.truncation = parse_t_power(piece.substr(2, piece.size() - 3));
      continue;
    }
    // the 't' at depth 0 splits coefficient and power
    std::size_t tpos = std::string::npos;
    depth = 0;
    for (std::size_t i = 0; i < piece.size(); ++i) {
      if (piece[i] == '(') ++depth;
      if (piece[i] == ')') --depth;
      if (depth == 0 && piece[i] == 't') {
        tpos = i;
        break;
      }
    }
    Rational e(0);
    std::string coef = piece;
    if (tpos != std::string::npos) {
      e = parse_t_power(piece.substr(tpos));
      coef = trim(piece.substr(0, tpos));
      if (!coef.empty() && coef.back() == '*') coef = trim(coef.substr(0, coef.size() - 1));
    }
    GaussianRational c = coef.empty() ? GaussianRational(1) : parse_constant(coef);
    if (negative) c = -c;
    acc[e] += c;
  }
  for (auto& [e, c] : acc) {
    if (c.is_zero()) continue;
    if (jet.truncation && e >= *jet.truncation)
      throw Error(ErrorCode::BadArc, "term at or beyond the declared truncation");
    jet.terms.push_back({e, c});
  }
  return jet;
}

}  // namespace

Arc parse_arc(std::string_view text, std::size_t n_hint) {
  std::vector<std::pair<std::size_t, Jet>> assigned;
  std::size_t n = n_hint;
  std::string all(text);
  std::size_t pos = 0;
  while (pos <= all.size()) {
    std::size_t end = all.find(';', pos);
    if (end == std::string::npos) end = all.size();
    std::string part = trim(std::string_view(all).substr(pos, end - pos));
    pos = end + 1;
    if (part.empty()) continue;
    std::size_t eq = part.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::BadArc, "expected 'zK = jet' in '" + part + "'");
    std::string lhs = trim(part.substr(0, eq));
    if (lhs.size() < 2 || lhs[0] != 'z' ||
        !std::all_of(lhs.begin() + 1, lhs.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw Error(ErrorCode::BadArc, "bad arc variable '" + lhs + "'");
    std::size_t k = std::stoul(lhs.substr(1));
    if (k < 1 || k > 64) throw Error(ErrorCode::IndexOutOfRange, "arc variable index out of range");
    n = std::max(n, k);
    assigned.emplace_back(k - 1, parse_jet(part.substr(eq + 1)));
  }
  if (n == 0) throw Error(ErrorCode::BadArc, "empty arc");
  Arc arc;
  arc.jets.resize(n);
  for (auto& [k, jet] : assigned) arc.jets[k] = std::move(jet);
  return arc;
}

std::string to_string(const Arc& arc) {
  std::string out;
  for (std::size_t j = 0; j < arc.jets.size(); ++j) {
    if (j) out += "; ";
    out += "z" + std::to_string(j + 1) + " = ";
    const Jet& jet = arc.jets[j];
    std::string body;
    for (const auto& t : jet.terms) {
      std::string c = t.coeff.to_string();
      if (!t.coeff.is_real() && sgn(t.coeff.re()) == 0) c = "(" + c + ")";
      std::string e = t.exponent.get_den() == 1 ? t.exponent.get_str() : "(" + t.exponent.get_str() + ")";
      std::string tpow = t.exponent == 1 ? "t" : "t^" + e;
      std::string term = sgn(t.exponent) == 0 ? c : c == "1" ? tpow : c == "-1" ? "-" + tpow : c + "*" + tpow;
      body += body.empty() ? term : " + " + term;
    }
    if (jet.truncation) {
      std::string e = jet.truncation->get_den() == 1 ? jet.truncation->get_str() : "(" + jet.truncation->get_str() + ")";
      body += (body.empty() ? "O(t^" : " + O(t^") + e + ")";
    }
    out += body.empty() ? "0" : body;
  }
  return out;
}

namespace {

Arc fit_arc(const MixedPoly& f, const Arc& arc) {
  if (arc.num_vars() > f.num_vars()) throw Error(ErrorCode::DimensionMismatch, "arc has more coordinates than f");
  Arc a = arc;
  a.jets.resize(f.num_vars());
  return a;
}

// p(z(s), conj z(s)) with exponents <= cap
Series substitute(const MixedPoly& p, const std::vector<Series>& z, const std::vector<Series>& zb, long cap) {
  const std::size_t n = z.size();
  std::vector<std::vector<Series>> zpow(n), zbpow(n);
  auto power = [cap](std::vector<Series>& cache, const Series& base, int e) -> const Series& {
    if (cache.empty()) cache.push_back(Series::constant(GaussianRational(1)));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(Series::multiply(cache.back(), base, cap));
    return cache[e];
  };
  Series total;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Series t = Series::constant(c);
    for (std::size_t j = 0; j < n; ++j) {
      if (m.nu[j]) t = Series::multiply(t, power(zpow[j], z[j], m.nu[j]), cap);
      if (m.mu[j]) t = Series::multiply(t, power(zbpow[j], zb[j], m.mu[j]), cap);
    }
    t.truncate(cap);
    if (first) {
      total = t;
      first = false;
    } else {
      total += t;
    }
  }
  return total;
}

struct Lead {
  bool zero = false;
  bool unresolved = false;
  long r = 0;
  std::size_t s = 0;
  std::vector<GaussianRational> c;
};

Lead lead_of(const std::vector<Series>& v) {
  Lead L;
  long r = Series::kExact;
  for (const auto& x : v) r = std::min(r, x.order());
  if (r == Series::kExact) {
    L.zero = true;
    return L;
  }
  for (const auto& x : v)
    if (x.known_through() < r) {
      L.unresolved = true;
      return L;
    }
  L.r = r;
  L.c.reserve(v.size());
  for (const auto& x : v) L.c.push_back(x.coefficient(r));
  L.s = 0;
  while (L.c[L.s].is_zero()) ++L.s;
  return L;
}

bool key_less(const Lead& a, const Lead& b) {
  if (a.zero) return false;
  if (b.zero) return true;
  return std::tie(a.s, a.r) < std::tie(b.s, b.r);
}

struct NeedMoreTerms {};

ComplexPoint unit(const std::vector<GaussianRational>& c) {
  ComplexPoint out;
  double norm2 = 0;
  for (const auto& x : c) {
    out.push_back(x.to_complex());
    norm2 += std::norm(out.back());
  }
  double nrm = std::sqrt(norm2);
  if (nrm > 0)
    for (auto& x : out) x /= nrm;
  return out;
}

LimitTangentResult reduce(std::vector<Series> vg, std::vector<Series> vh, long q) {
  LimitTangentResult res;
  for (int iter = 0; iter < 100000; ++iter) {
    Lead Lg = lead_of(vg), Lh = lead_of(vh);
    if (Lg.unresolved || Lh.unresolved) throw NeedMoreTerms{};
    if (Lg.zero && Lh.zero) {
      res.independent = false;
      break;
    }
    if (key_less(Lh, Lg)) {
      std::vector<Series> ng;
      for (auto& x : vh) ng.push_back(x * GaussianRational(-1));
      vh = std::move(vg);
      vg = std::move(ng);
      ReductionStep st;
      st.swap = true;
      res.reduction_steps.push_back(st);
      continue;
    }
    res.leading_g = Lg.c;
    res.order_g = Rational(Lg.r, q);
    if (Lh.zero) {
      res.leading_h.assign(vg.size(), GaussianRational());
      res.independent = false;
      break;
    }
    res.leading_h = Lh.c;
    res.order_h = Rational(Lh.r, q);
    if (Lh.s > Lg.s) {
      res.independent = true;
      break;
    }
    const GaussianRational& cg = Lg.c[Lg.s];
    const GaussianRational& ch = Lh.c[Lh.s];
    GaussianRational cross = ch * cg.conj();
    if (sgn(cross.im()) != 0) {
      res.independent = true;
      break;
    }
    Rational lambda = cross.re() / cg.norm2();
    long shift = Lh.r - Lg.r;
    for (std::size_t j = 0; j < vh.size(); ++j) vh[j] -= vg[j].shifted(shift) * GaussianRational(lambda);
    ReductionStep st;
    st.lambda = lambda;
    st.shift = Rational(shift, q);
    res.reduction_steps.push_back(st);
  }
  res.covector_g = unit(res.leading_g);
  res.covector_h = unit(res.leading_h);
  return res;
}

}  // namespace

ArcSeries expand_arc(const MixedPoly& f, const Arc& arc_in, long order) {
  Arc arc = fit_arc(f, arc_in);
  long q = arc.denominator();
  if (order < 0) throw Error(ErrorCode::BadParams, "order must be non-negative");
  long cap = order * q;
  std::vector<Series> z = arc.in_s(), zb;
  for (const auto& s : z) zb.push_back(s.conj());
  Series s = substitute(f, z, zb, cap);
  if (s.known_through() < cap)
    throw Error(ErrorCode::TruncationOverflow, "arc jets determine f only through s-order " +
                                                   std::to_string(s.known_through()));
  s.truncate(cap);
  return {s, q};
}

LimitTangentResult limit_tangent(const MixedPoly& f, const Arc& arc_in, const LimitOptions& opts) {
  Arc arc = fit_arc(f, arc_in);
  if (std::all_of(arc.jets.begin(), arc.jets.end(), [](const Jet& j) { return j.is_zero(); }))
    throw Error(ErrorCode::BadArc, "arc is identically zero");
  const long q = arc.denominator();
  std::vector<Series> z = arc.in_s(), zb;
  for (const auto& s : z) zb.push_back(s.conj());

  RealImagParts parts = real_imag_parts(f);
  auto dg = wirtinger_gradient(parts.g, WirtingerKind::ZBar);
  auto dh = wirtinger_gradient(parts.h, WirtingerKind::ZBar);

  const bool exact = arc.is_exact();
  long cap = exact ? Series::kExact
                   : opts.order.value_or(4L * std::max(1, f.total_degree()) * arc.max_exponent_in_s());
  for (int attempt = 0;; ++attempt) {
    Series fs = substitute(f, z, zb, cap);
    if (fs.vanishes_as_known())
      throw Error(ErrorCode::ArcInsideV, "f vanishes along the arc" +
                                             std::string(fs.is_exact() ? "" : " to the available order"));
    std::vector<Series> vg, vh;
    for (std::size_t j = 0; j < f.num_vars(); ++j) {
      vg.push_back(substitute(dg[j], z, zb, cap));
      vh.push_back(substitute(dh[j], z, zb, cap));
    }
    try {
      LimitTangentResult res = reduce(std::move(vg), std::move(vh), q);
      res.computation_order = exact ? 0 : cap;
      return res;
    } catch (const NeedMoreTerms&) {
      if (exact || attempt >= opts.raises)
        throw Error(ErrorCode::TruncationExhausted, "arc jets too short to resolve the limit tangent");
      cap *= 2;
    }
  }
}

AfArcVerdict af_test_arc(const MixedPoly& f, const Arc& arc_in, const Subset& I, const LimitOptions& opts) {
  Arc arc = fit_arc(f, arc_in);
  for (std::size_t j = 0; j < arc.num_vars(); ++j) {
    bool in_I = std::binary_search(I.begin(), I.end(), j);
    const Jet& jet = arc.jets[j];
    if (in_I && (jet.is_zero() || sgn(jet.leading_exponent()) != 0))
      throw Error(ErrorCode::BadArc, "coordinates in I must tend to a nonzero constant");
    if (!in_I && !jet.is_zero() && sgn(jet.leading_exponent()) <= 0)
      throw Error(ErrorCode::BadArc, "coordinates outside I must tend to zero");
  }
  for (auto i : I)
    if (i >= f.num_vars()) throw Error(ErrorCode::IndexOutOfRange, "subset index out of range");
  AfArcVerdict v;
  v.I = I;
  v.limit = limit_tangent(f, arc, opts);
  if (!v.limit.independent) {
    v.status = AfStatus::Inconclusive;
    return v;
  }
  v.contains_CI = true;
  for (auto i : I)
    if (!v.limit.leading_g[i].is_zero() || !v.limit.leading_h[i].is_zero()) v.contains_CI = false;
  v.status = v.contains_CI ? AfStatus::Holds : AfStatus::Fails;
  return v;
}

double transversality_residual(const MixedPoly& f, const ComplexPoint& p) {
  require_finite(p);
  if (p.size() != f.num_vars()) throw Error(ErrorCode::DimensionMismatch, "point dimension mismatch");
  double pn = 0;
  for (const auto& x : p) pn += std::norm(x);
  pn = std::sqrt(pn);
  if (pn == 0) throw Error(ErrorCode::BadRequest, "transversality needs p != 0");
  double crit = masked_criticality_residual<double>(f, std::span<const std::complex<double>>(p),
                                                    std::vector<bool>(f.num_vars(), true));
  if (crit <= 1e-10) throw Error(ErrorCode::SingularFiber, "p is a critical point of f");
  GradientPair g = gradients(f, p);
  const std::complex<double> I(0, 1);
  std::vector<std::complex<double>> dg(p.size()), dh(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) {
    std::complex<double> cdz = std::conj(g.d_z[j]);
    dg[j] = (g.d_zbar[j] + cdz) / 2.0;
    dh[j] = I * (cdz - g.d_zbar[j]) / 2.0;
  }
  return span_residual(p, dg, dh) / pn;
}

TransversalityScan transversality_scan(const MixedPoly& f, double radius, double delta, int samples,
                                       std::uint64_t seed, long max_attempts) {
  if (!(radius > 0) || !(delta > 0) || samples < 1)
    throw Error(ErrorCode::BadParams, "radius, delta and samples must be positive");
  if (max_attempts <= 0) max_attempts = static_cast<long>(samples) * 100000L;
  const std::size_t n = f.num_vars();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  TransversalityScan out;
  out.min_residual = std::numeric_limits<double>::infinity();
  ComplexPoint p(n);
  while (out.accepted < samples && out.attempts < max_attempts) {
    ++out.attempts;
    double nrm = 0;
    for (auto& x : p) {
      x = {gauss(rng), gauss(rng)};
      nrm += std::norm(x);
    }
    nrm = std::sqrt(nrm);
    for (auto& x : p) x *= radius / nrm;
    if (std::abs(evaluate(f, p)) > delta) continue;
    double r;
    try {
      r = transversality_residual(f, p);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SingularFiber) throw;
      ++out.singular;
      continue;
    }
    ++out.accepted;
    if (r < out.min_residual) {
      out.min_residual = r;
      out.argmin = p;
    }
  }
  return out;
}

OpennessProbe boundary_openness_probe(const MixedPoly& f, const ComplexPoint& p, double epsilon, int samples,
                                      std::uint64_t seed) {
  require_finite(p);
  if (p.size() != f.num_vars()) throw Error(ErrorCode::DimensionMismatch, "point dimension mismatch");
  if (!(epsilon > 0) || samples < 1) throw Error(ErrorCode::BadParams, "epsilon and samples must be positive");
  double scale = 0;
  for (const auto& [m, c] : f.terms()) {
    double t = std::abs(c.to_complex());
    for (std::size_t k = 0; k < p.size(); ++k) t *= std::pow(std::abs(p[k]), m.nu[k] + m.mu[k]);
    scale += t;
  }
  if (std::abs(evaluate(f, p)) > 1e-9 * std::max(1.0, scale))
    throw Error(ErrorCode::BadRequest, "openness probe needs f(p) = 0");
  constexpr double kTwoPi = 6.283185307179586;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> args;
  std::vector<bool> bins(kArgBins, false);
  ComplexPoint z(p.size());
  for (int s = 0; s < samples; ++s) {
    for (std::size_t k = 0; k < p.size(); ++k) z[k] = p[k] + std::polar(epsilon * std::sqrt(unif(rng)), kTwoPi * unif(rng));
    std::complex<double> v = evaluate(f, z);
    if (v == 0.0) continue;
    double a = std::arg(v);
    if (a < 0) a += kTwoPi;
    args.push_back(a);
    bins[std::min(kArgBins - 1, static_cast<int>(a / kTwoPi * kArgBins))] = true;
  }
  if (args.empty()) throw Error(ErrorCode::AllValuesZero, "f vanished at every sample");
  OpennessProbe out;
  out.nonzero_samples = static_cast<int>(args.size());
  out.arg_coverage = static_cast<double>(std::count(bins.begin(), bins.end(), true)) / kArgBins;
  std::sort(args.begin(), args.end());
  double gap = args.front() + kTwoPi - args.back();
  for (std::size_t i = 1; i < args.size(); ++i) gap = std::max(gap, args[i] - args[i - 1]);
  out.sector_halfwidth = (kTwoPi - gap) / 2;
  return out;
}

}  // namespace mixed_milnor
