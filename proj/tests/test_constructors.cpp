#include <doctest.h>

#include "mixed_milnor/constructors.hpp"
#include "mixed_milnor/degeneracy.hpp"
#include "mixed_milnor/error.hpp"
#include "mixed_milnor/newton.hpp"
#include "mixed_milnor/parser.hpp"
#include "test_support.hpp"

using namespace mixed_milnor;
using namespace testing_support;

namespace {

MixedPoly P(const char* s, std::size_t n = 0) { return parse_poly(s, n); }

PullbackSpec random_spec(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> b(0, 2), gap(1, 2);
  PullbackSpec s;
  for (std::size_t j = 0; j < n; ++j) {
    s.b.push_back(b(rng));
    s.a.push_back(s.b.back() + gap(rng));
  }
  return s;
}

std::vector<MixedPoly> corpus_sample() {
  return {corpus("fig1").poly,       corpus("tibar").poly,          corpus("tibar_a", {3}).poly,
          corpus("parusinski").poly, corpus("cone", {1, 3, 1, 2, 1}).poly, corpus("cyclic", {2, 3, 2}).poly,
          corpus("d_n", {5}).poly,   corpus("brieskorn_curve").poly};
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::BadRequest;
}

}  // namespace

TEST_SUITE("constructors") {

TEST_CASE("pullback examples") {
  for (int n = 4; n <= 6; ++n) {
    MixedPoly g = pullback_cyclic(corpus("d_n", {n}).poly, {{2, 2, 2}, {1, 1, 1}});
    MixedPoly expect = P("z1^4*zb1^2 + z2^4*zb2^2*z3^2*zb3") +
                       MixedPoly::monomial(3, {0, 0, 2 * (n - 1)}, {0, 0, n - 1});
    CHECK(g == expect);
  }
  for (const auto& f : corpus_sample()) {
    PullbackSpec id{std::vector<int>(f.num_vars(), 1), std::vector<int>(f.num_vars(), 0)};
    CHECK(pullback_cyclic(f, id) == f);
  }
  MixedPoly z = pullback_cyclic(P("z1*z2"), {{1, 2}, {0, 1}});
  REQUIRE(z.size() == 1);
  CHECK(z.terms().begin()->first.nu == Exponents{1, 2});
  CHECK(z.terms().begin()->first.mu == Exponents{0, 1});
  CHECK(vanishing_subsets(z).vanishing == vanishing_subsets(P("z1*z2")).vanishing);

  CHECK(code_of([] { pullback_cyclic(P("z1*z2"), {{1, 1}, {0, 1}}); }) == ErrorCode::BadParams);
  CHECK(code_of([] { pullback_cyclic(P("z1*z2"), {{1}, {0}}); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("pullback functoriality and support law") {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 100; ++k) {
    std::size_t n = 1 + k % 3;
    MixedPoly f = random_poly(rng, n, 3, 2);
    if (f.is_zero()) continue;
    PullbackSpec s1 = random_spec(rng, n), s2 = random_spec(rng, n);
    CHECK(pullback_cyclic(pullback_cyclic(f, s1), s2) == pullback_cyclic(f, compose(s1, s2)));
    // (a nu + b mu) + (b nu + a mu) = (a + b)(nu + mu), term by term
    MixedPoly g = pullback_cyclic(f, s1);
    std::vector<LatticePoint> scaled;
    for (const auto& [m, c] : f.terms()) {
      LatticePoint p = m.support();
      for (std::size_t j = 0; j < n; ++j) p[j] *= s1.a[j] + s1.b[j];
      scaled.push_back(p);
    }
    std::sort(scaled.begin(), scaled.end());
    scaled.erase(std::unique(scaled.begin(), scaled.end()), scaled.end());
    CHECK(support_points(g) == scaled);
  }
}

TEST_CASE("pullback preserves vanishing subsets") {
  std::mt19937_64 rng(42);
  for (const auto& f : corpus_sample())
    for (int k = 0; k < 3; ++k) {
      MixedPoly g = pullback_cyclic(f, random_spec(rng, f.num_vars()));
      VanishingReport a = vanishing_subsets(f), b = vanishing_subsets(g);
      CHECK(a.vanishing == b.vanishing);
      CHECK(a.nonvanishing == b.nonvanishing);
    }
}

TEST_CASE("join") {
  JoinResult j = join(P("z1^2"), P("z1^3"));
  CHECK(j.poly == P("z1^2 + z2^3"));
  CHECK(j.names == std::vector<std::string>{"f1.z1", "f2.z1"});
  CHECK(vanishing_subsets(j.poly).vanishing.empty());
  CHECK_THROWS_AS(join(P("0"), P("z1")), Error);
}

TEST_CASE("join vanishing law against brute-force restriction") {
  std::vector<std::pair<MixedPoly, MixedPoly>> pairs{{corpus("tibar").poly, corpus("tibar").poly},
                                                     {corpus("fig1").poly, corpus("tibar").poly},
                                                     {corpus("parusinski").poly, P("z1^2")}};
  std::mt19937_64 rng(43);
  auto no_constant = [](MixedPoly f) {
    MixedMonomial one{Exponents(f.num_vars(), 0), Exponents(f.num_vars(), 0)};
    if (const auto* c = f.coefficient(one)) f -= MixedPoly::monomial(f.num_vars(), one.nu, one.mu, *c);
    return f;
  };
  for (int k = 0; k < 20; ++k)
    pairs.emplace_back(no_constant(random_poly(rng, 2, 3, 2)), no_constant(random_poly(rng, 1 + k % 2, 2, 2)));
  for (const auto& [f1, f2] : pairs) {
    if (f1.is_zero() || f2.is_zero()) continue;
    MixedPoly f = join(f1, f2).poly;
    std::size_t n = f1.num_vars(), m = f2.num_vars();
    VanishingReport r1 = vanishing_subsets(f1), r2 = vanishing_subsets(f2), r = vanishing_subsets(f);
    for (unsigned mask = 1; mask < (1u << (n + m)); ++mask) {
      Subset I, I1, I2;
      for (std::size_t i = 0; i < n + m; ++i)
        if (mask >> i & 1) {
          I.push_back(i);
          (i < n ? I1 : I2).push_back(i < n ? i : i - n);
        }
      bool law = (I1.empty() || r1.is_vanishing(I1)) && (I2.empty() || r2.is_vanishing(I2));
      CHECK(r.is_vanishing(I) == law);
      CHECK(restrict_to(f, I).is_zero() == law);
    }
    // join support is the disjoint union of the embedded supports
    std::vector<LatticePoint> both;
    for (auto p : support_points(f1)) {
      p.resize(n + m, 0);
      both.push_back(p);
    }
    for (auto p : support_points(f2)) {
      p.insert(p.begin(), n, 0);
      both.push_back(p);
    }
    std::sort(both.begin(), both.end());
    CHECK(support_points(f) == both);
  }
  VanishingReport tt = vanishing_subsets(join(corpus("tibar").poly, corpus("tibar").poly).poly);
  for (Subset I : {Subset{0}, Subset{1}, Subset{2}, Subset{3}, Subset{0, 2}, Subset{0, 3}, Subset{1, 2}, Subset{1, 3}})
    CHECK(tt.is_vanishing(I));
}

TEST_CASE("join of tame polynomials is tame") {
  MixedPoly f = join(corpus("cyclic", {2, 3}).poly, corpus("tibar_a", {2}).poly).poly;
  VanishingReport r = vanishing_subsets(f);
  CHECK_FALSE(r.vanishing.empty());
  // along z3 and z4 the face is the full cyclic face, whose criterion polynomials
  // are indefinite; the sampler then reports Inconclusive rather than a proof
  for (const auto& I : r.vanishing) {
    TamenessVerdict v = local_tameness_check(f, I);
    CHECK(v.status != TamenessStatus::NotTame);
    if (I.size() > 1 || I[0] < 2) CHECK(v.status == TamenessStatus::TameCertified);
  }
}

TEST_CASE("corpus") {
  CHECK(corpus("fig1").poly == P("z1^3 + z2^3 + z2*z3^2"));
  CHECK(corpus("fig1").poly.size() == 3);
  CHECK(corpus("tibar_a", {1}).poly == corpus("tibar").poly);
  CHECK(corpus("d_n", {4}).poly == P("z1^2 + z2^2*z3 + z3^3"));
  CHECK(corpus("parusinski").poly == P("z1*(z2 + z3^2)*zb2"));
  CHECK(corpus("cyclic", {2, 3, 4}).poly == P("z1^2*zb2 + z2^3*zb3 + z3^4*zb1"));
  CHECK(corpus("cone", {1, 2, 1, 1}).poly == P("z1*(|z1|^2 - |z2|^2)"));
  CHECK(corpus("cone", {2, 3, 1, 2, 1}).poly == P("z1*(|z1|^2 + |z2|^4 - |z3|^2)"));
  CHECK(corpus("brieskorn_curve").poly ==
        P("z1^2*z2^2*(z1^6*zb1^3 + z2^4*zb2^2)*(z1^4*zb1^2 + z2^6*zb2^3)"));
  for (const auto& name : corpus_names()) CHECK_FALSE(name.empty());
  CHECK_FALSE(corpus("fig1").provenance.empty());

  CHECK(code_of([] { corpus("nope"); }) == ErrorCode::UnknownName);
  CHECK(code_of([] { corpus("cyclic", {2, 1}); }) == ErrorCode::BadParams);
  CHECK(code_of([] { corpus("d_n", {3}); }) == ErrorCode::BadParams);
  CHECK(code_of([] { corpus("tibar", {1}); }) == ErrorCode::BadParams);
  CHECK(code_of([] { corpus("cone", {2, 2, 1, 1}); }) == ErrorCode::BadParams);
}

}
