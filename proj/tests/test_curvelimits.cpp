#include <doctest.h>

#include "mixed_milnor/constructors.hpp"
#include "mixed_milnor/curve_limits.hpp"
#include "mixed_milnor/error.hpp"
#include "mixed_milnor/local_search.hpp"
#include "mixed_milnor/newton.hpp"
#include "mixed_milnor/parser.hpp"
#include "test_support.hpp"

using namespace mixed_milnor;
using namespace testing_support;

namespace {

MixedPoly P(const char* s, std::size_t n = 0) { return parse_poly(s, n); }

GaussianRational Q(long re, long im = 0, long den = 1) { return {Rational(re, den), Rational(im, den)}; }

using GPoint = std::vector<GaussianRational>;

GaussianRational exact_eval(const MixedPoly& f, const GPoint& z) {
  GaussianRational total;
  for (const auto& [m, c] : f.terms()) {
    GaussianRational t = c;
    for (std::size_t j = 0; j < z.size(); ++j) {
      for (int k = 0; k < m.nu[j]; ++k) t *= z[j];
      for (int k = 0; k < m.mu[j]; ++k) t *= z[j].conj();
    }
    total += t;
  }
  return total;
}

GPoint arc_point(const Arc& arc, const Rational& t) {
  GPoint p(arc.num_vars());
  for (std::size_t j = 0; j < p.size(); ++j)
    for (const auto& term : arc.jets[j].terms) {
      REQUIRE(term.exponent.get_den() == 1);
      Rational pw(1);
      for (long k = 0; k < term.exponent.get_num().get_si(); ++k) pw *= t;
      p[j] += term.coeff * GaussianRational(pw);
    }
  return p;
}

Rational re_dot(const GPoint& a, const GPoint& b) {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] * b[i].conj()).re();
  return s;
}

// relative distance of x from span_R(u, v), exact
double exact_defect(const GPoint& x, const GPoint& u, const GPoint& v) {
  Rational guu = re_dot(u, u), guv = re_dot(u, v), gvv = re_dot(v, v);
  Rational gxu = re_dot(x, u), gxv = re_dot(x, v), gxx = re_dot(x, x);
  Rational det = guu * gvv - guv * guv;
  REQUIRE(sgn(det) != 0);
  Rational a = (gxu * gvv - gxv * guv) / det, b = (gxv * guu - gxu * guv) / det;
  Rational d2 = (gxx - a * gxu - b * gxv) / gxx;
  return std::sqrt(std::max(0.0, d2.get_d()));
}

// the exact leading vectors lie in span_R(dbar g, dbar h) at nearby arc points, up to O(t)
double plane_defect(const MixedPoly& f, const Arc& arc, const LimitTangentResult& r, const Rational& t) {
  RealImagParts gh = real_imag_parts(f);
  auto dg = wirtinger_gradient(gh.g, WirtingerKind::ZBar), dh = wirtinger_gradient(gh.h, WirtingerKind::ZBar);
  GPoint p = arc_point(arc, t), u(p.size()), v(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) {
    u[j] = exact_eval(dg[j], p);
    v[j] = exact_eval(dh[j], p);
  }
  return std::max(exact_defect(r.leading_g, u, v), exact_defect(r.leading_h, u, v));
}

const Rational kSmallT(1, 1000000);

double dist_up_to_sign(const ComplexPoint& a, const ComplexPoint& b) {
  ComplexPoint m = b;
  for (auto& z : m) z = -z;
  return std::min(max_abs_diff(a, b), max_abs_diff(a, m));
}

Arc random_axis_arc(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  std::uniform_int_distribution<int> e(1, 5);
  std::vector<GaussianRational> c(n);
  std::vector<Rational> x(n);
  for (std::size_t j = 0; j < n; ++j) {
    c[j] = random_coeff(rng);
    x[j] = j == k ? 0 : e(rng);
  }
  return Arc::monomial(c, x);
}

}  // namespace

TEST_SUITE("curvelimits") {

TEST_CASE("series arithmetic") {
  Series a = Series::constant(Q(1)) + Series::monomial(2, Q(0, 1));
  Series b = Series::monomial(1, Q(3));
  Series ab = Series::multiply(a, b, Series::kExact);
  CHECK(ab.is_exact());
  CHECK(ab.order() == 1);
  CHECK(ab.coefficient(3) == Q(0, 3));
  Series cut = Series::multiply(a, b, 2);
  CHECK(cut.known_through() == 2);
  CHECK(cut.coefficient(3) == Q(0));
  CHECK((a - a).vanishes_as_known());
  CHECK((a - a).is_exact());
  Series zero;
  CHECK(Series::multiply(zero, Series(3), 10).is_exact());
  CHECK(a.conj().coefficient(2) == Q(0, -1));
  CHECK(b.shifted(2).order() == 3);
  Series trunc = Series::monomial(0, Q(1));
  trunc.truncate(4);
  CHECK(trunc.known_through() == 4);
  CHECK(Series::multiply(trunc, b, Series::kExact).known_through() == 5);
}

TEST_CASE("arc parsing") {
  Arc a = parse_arc("z1 = (1+0i); z2 = t; z3 = (2+0i)*t^3", 3);
  REQUIRE(a.num_vars() == 3);
  CHECK(a.is_exact());
  CHECK(a.jets[2].terms[0].exponent == 3);
  CHECK(a.jets[2].terms[0].coeff == Q(2));
  Arc half = parse_arc("z1 = t^(3/2) + O(t^4); z2 = 1");
  CHECK_FALSE(half.is_exact());
  CHECK(half.denominator() == 2);
  CHECK(parse_arc(to_string(half)).jets[0].terms.size() == 1);
  CHECK(to_string(parse_arc("z1 = 1; z2 = t")) == "z1 = 1; z2 = t");
  CHECK_THROWS_AS(parse_arc("z1 = t^"), Error);
  CHECK_THROWS_AS(parse_arc("z1 = zb1"), Error);
}

TEST_CASE("expand_arc examples") {
  MixedPoly bc = corpus("brieskorn_curve").poly;
  Arc w = Arc::monomial({Q(1, 1), Q(2, -1)}, {2, 3});
  ArcSeries s = expand_arc(bc, w, 60);
  CHECK(s.series.order() == 40);
  CHECK(s.series.order() == *degrees(delta_of_weight(bc, {2, 3}).face_poly, {2, 3}).rdeg);

  ArcSeries lin = expand_arc(P("z1"), parse_arc("z1 = t"), 5);
  CHECK(lin.series.order() == 1);
  CHECK(lin.series.coefficient(1) == Q(1));

  GaussianRational c = Q(2, 3);
  ArcSeries tib = expand_arc(corpus("tibar").poly, Arc::monomial({c, Q(1)}, {0, 1}), 6);
  CHECK(tib.series.order() == 2);
  CHECK(tib.series.coefficient(2) == c);
  CHECK(tib.series.coefficients().size() == 1);

  CHECK_THROWS_AS(expand_arc(P("z1^2"), parse_arc("z1 = t + O(t^2)"), 10), Error);
}

TEST_CASE("Tibar limit plane") {
  // rho e^{i theta} = 3/5 + 4/5 i, so (sin theta - i cos theta) = 4/5 - 3/5 i
  MixedPoly f = corpus("tibar").poly;
  Arc arc = Arc::monomial({Q(3, 4, 5), Q(1)}, {0, 1});
  LimitTangentResult r = limit_tangent(f, arc);
  CHECK(r.independent);
  ComplexPoint e1{{0.8, -0.6}, 0.0}, e2{0.0, 1.0};
  CHECK(span_residual(e1, r.covector_g, r.covector_h) < 1e-12);
  CHECK(span_residual(e2, r.covector_g, r.covector_h) < 1e-12);
  CHECK(plane_defect(f, arc, r, kSmallT) < 1e-4);
}

TEST_CASE("Parusinski second covector") {
  MixedPoly f = corpus("parusinski").poly;
  for (auto [re, im] : {std::pair{5, 0}, std::pair{3, 4}, std::pair{-4, 3}}) {
    Arc arc = Arc::monomial({Q(re, im, 5), Q(1), Q(2)}, {0, 1, 3});
    LimitTangentResult r = limit_tangent(f, arc);
    double c = re / 5.0, s = im / 5.0;
    ComplexPoint expect{{s, -c}, 0.0, 0.0};
    CHECK(dist_up_to_sign(r.covector_g, expect) < 1e-9);
    CHECK(plane_defect(f, arc, r, kSmallT) < 1e-4);
  }
}

TEST_CASE("holomorphic limits need no reduction") {
  LimitTangentResult r = limit_tangent(P("z1^2 + z2^2"), parse_arc("z1 = t; z2 = t"));
  double h = 1 / std::sqrt(2.0);
  CHECK(r.independent);
  CHECK(r.reduction_steps.empty());
  CHECK(max_abs_diff(r.covector_g, {h, h}) < 1e-12);
  CHECK(max_abs_diff(r.covector_h, {{0, h}, {0, h}}) < 1e-12);

  std::mt19937_64 rng(19);
  int done = 0;
  for (int k = 0; k < 150; ++k) {
    MixedPoly f = random_holomorphic(rng, 2, 3, 3);
    Arc arc = random_axis_arc(rng, 2, 9);
    try {
      LimitTangentResult lr = limit_tangent(f, arc);
      CHECK(lr.reduction_steps.empty());
      CHECK(lr.independent);
      ++done;
    } catch (const Error& e) {
      CHECK((e.code() == ErrorCode::ArcInsideV || e.code() == ErrorCode::BadArc));
    }
  }
  CHECK(done > 50);
}

TEST_CASE("reduction steps and limit plane on random mixed inputs") {
  std::mt19937_64 rng(23);
  int checked = 0, reduced = 0;
  for (int k = 0; k < 200; ++k) {
    MixedPoly f = random_poly(rng, 2, 3, 2);
    Arc arc = random_axis_arc(rng, 2, 9);
    LimitTangentResult r;
    try {
      r = limit_tangent(f, arc);
    } catch (const Error& e) {
      CHECK((e.code() == ErrorCode::ArcInsideV || e.code() == ErrorCode::BadArc));
      continue;
    }
    for (const auto& st : r.reduction_steps)
      if (!st.swap) {
        ++reduced;
        CHECK(sgn(st.shift) >= 0);
      }
    if (!r.independent) continue;
    ++checked;
    // covectors are unit and R-independent
    CHECK(std::abs(norm(r.covector_g) - 1) < 1e-12);
    CHECK(std::abs(norm(r.covector_h) - 1) < 1e-12);
    CHECK(span_residual(r.covector_h, r.covector_g, r.covector_g) > 1e-9);
    // the real plane agrees with the numerically sampled tangent data
    CHECK(plane_defect(f, arc, r, kSmallT) < 1e-3);
    CHECK(plane_defect(f, arc, r, kSmallT * kSmallT) < 1e-9);
  }
  CHECK(checked > 60);
  CHECK(reduced > 0);
}

TEST_CASE("truncated arcs") {
  MixedPoly f = corpus("parusinski").poly;
  Arc exact = parse_arc("z1 = 1; z2 = t; z3 = t^3");
  Arc trunc = parse_arc("z1 = 1 + O(t^12); z2 = t + O(t^12); z3 = t^3 + O(t^12)");
  Arc longer = parse_arc("z1 = 1 + O(t^17); z2 = t + O(t^17); z3 = t^3 + O(t^17)");
  LimitTangentResult a = limit_tangent(f, exact), b = limit_tangent(f, trunc), c = limit_tangent(f, longer);
  CHECK(max_abs_diff(a.covector_g, b.covector_g) < 1e-15);
  CHECK(max_abs_diff(a.covector_h, b.covector_h) < 1e-15);
  CHECK(max_abs_diff(b.covector_g, c.covector_g) < 1e-15);
  CHECK(max_abs_diff(b.covector_h, c.covector_h) < 1e-15);
  CHECK(b.computation_order > 0);
  LimitOptions more;
  more.order = b.computation_order + 5;
  LimitTangentResult d = limit_tangent(f, longer, more);
  CHECK(max_abs_diff(b.covector_h, d.covector_h) < 1e-15);

  CHECK_THROWS_AS(limit_tangent(f, parse_arc("z1 = 1; z2 = t + O(t^2); z3 = O(t^2)")), Error);
}

TEST_CASE("arc errors") {
  try {
    limit_tangent(corpus("tibar").poly, parse_arc("z1 = t; z2 = 0"));
    FAIL("expected ArcInsideV");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ArcInsideV);
  }
  CHECK_THROWS_AS(limit_tangent(P("z1"), parse_arc("z1 = 0")), Error);
  CHECK_THROWS_AS(af_test_arc(corpus("tibar").poly, parse_arc("z1 = t; z2 = t"), {0}), Error);
  CHECK_THROWS_AS(af_test_arc(corpus("tibar").poly, parse_arc("z1 = 1; z2 = 1"), {0}), Error);
}

TEST_CASE("a_f failures along the Tibar and Parusinski arcs") {
  AfArcVerdict t = af_test_arc(corpus("tibar").poly, parse_arc("z1 = 1; z2 = t"), {0});
  CHECK_FALSE(t.contains_CI);
  CHECK(t.status == AfStatus::Fails);
  AfArcVerdict p = af_test_arc(corpus("parusinski").poly, parse_arc("z1 = 1; z2 = t; z3 = t^3"), {0});
  CHECK_FALSE(p.contains_CI);
  CHECK(p.status == AfStatus::Fails);
}

TEST_CASE("random arc battery into the axes of a tame cyclic polynomial") {
  std::mt19937_64 rng(100);
  for (auto a : {std::vector<int>{2, 2, 2}, std::vector<int>{3, 2, 4}}) {
    MixedPoly f = corpus("cyclic", a).poly;
    int held = 0;
    for (int k = 0; k < 100; ++k) {
      std::size_t axis = static_cast<std::size_t>(k % 3);
      Arc arc = random_axis_arc(rng, 3, axis);
      AfArcVerdict v = af_test_arc(f, arc, {axis});
      CHECK(v.contains_CI);
      held += v.status == AfStatus::Holds;
    }
    CHECK(held == 100);
  }
}

TEST_CASE("transversality residual") {
  for (double th : {0.0, 1.0, 2.5})
    for (double r : {0.1, 1.0})
      CHECK(transversality_residual(P("z1", 2), {std::polar(r, th), 0.0}) < 1e-15);
  CHECK(transversality_residual(P("z1", 2), {1.0, 1.0}) > 0.5);
  try {
    transversality_residual(P("|z1|^2 - |z2|^2"), {1.0, 0.5});
    FAIL("expected SingularFiber");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SingularFiber);
  }
  std::mt19937_64 rng(4);
  for (int k = 0; k < 50; ++k) {
    ComplexPoint p = random_point(rng, 2);
    CHECK(transversality_residual(P("z1^2 + z2^2"), p) >= 0);
  }
}

TEST_CASE("span residual agrees with the Gram formulation") {
  std::mt19937_64 rng(6);
  for (int k = 0; k < 200; ++k) {
    ComplexPoint t = random_point(rng, 3), u = random_point(rng, 3), v = random_point(rng, 3);
    auto ip = [](const ComplexPoint& x, const ComplexPoint& y) {
      double s = 0;
      for (std::size_t i = 0; i < x.size(); ++i) s += (x[i] * std::conj(y[i])).real();
      return s;
    };
    double guu = ip(u, u), guv = ip(u, v), gvv = ip(v, v), gtu = ip(t, u), gtv = ip(t, v);
    double det = guu * gvv - guv * guv;
    double a = (gtu * gvv - gtv * guv) / det, b = (gtv * guu - gtu * guv) / det;
    double proj2 = a * gtu + b * gtv;
    double expect = std::sqrt(std::max(0.0, ip(t, t) - proj2));
    CHECK(std::abs(span_residual(t, u, v) - expect) < 1e-9);
    ComplexPoint inside(3);
    for (std::size_t i = 0; i < 3; ++i) inside[i] = 0.3 * u[i] - 1.7 * v[i];
    CHECK(span_residual(inside, u, v) < 1e-12);
  }
}

TEST_CASE("Tibar transversality scan stays away from tangency") {
  TransversalityScan s = transversality_scan(corpus("tibar").poly, 1.0, 1e-3, 1000, 0);
  CHECK(s.accepted == 1000);
  CHECK(s.singular == 0);
  CHECK(s.min_residual > 0.99);
  TransversalityScan again = transversality_scan(corpus("tibar").poly, 1.0, 1e-3, 1000, 0);
  CHECK(again.min_residual == s.min_residual);
}

TEST_CASE("openness probe") {
  MixedPoly tib = corpus("tibar").poly;
  OpennessProbe o = boundary_openness_probe(tib, {1.0, 0.0}, 0.1, 20000, 0);
  CHECK(o.arg_coverage < 1.0);
  CHECK(std::abs(o.sector_halfwidth - std::atan(0.1)) < 0.2 * std::atan(0.1));
  double prev = 0;
  for (double eps : {0.05, 0.1, 0.2}) {
    OpennessProbe q = boundary_openness_probe(tib, {1.0, 0.0}, eps, 20000, 0);
    CHECK(q.arg_coverage >= prev);
    prev = q.arg_coverage;
  }
  CHECK(boundary_openness_probe(P("z1*z2"), {1.0, 0.0}, 0.1, 20000, 0).arg_coverage == 1.0);
  CHECK(boundary_openness_probe(corpus("cone", {1, 2, 1, 1}).poly, {1.0, 1.0}, 0.1, 20000, 0).arg_coverage < 1.0);
  CHECK_THROWS_AS(boundary_openness_probe(tib, {1.0, 1.0}, 0.1, 100, 0), Error);
}

}
