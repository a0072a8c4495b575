#include <doctest.h>

#include <set>

#include "mixed_milnor/constructors.hpp"
#include "mixed_milnor/error.hpp"
#include "mixed_milnor/newton.hpp"
#include "mixed_milnor/parser.hpp"
#include "oracles.hpp"

using namespace mixed_milnor;
using namespace testing_support;

namespace {

std::vector<Subset> subsets(std::initializer_list<Subset> l) { return {l}; }

}  // namespace

TEST_SUITE("newton") {

TEST_CASE("figure-1 vertices and faces") {
  MixedPoly f = corpus("fig1").poly;
  SupportReport r = support_vertices(f);
  CHECK(r.vertices == Points{{0, 1, 2}, {0, 3, 0}, {3, 0, 0}});
  CHECK_FALSE(r.convenient);

  auto ess = essential_noncompact_faces(f);
  REQUIRE(ess.size() == 1);
  CHECK(ess[0].kind == FaceKind::NonCompactEssential);
  CHECK(ess[0].noncompact_directions == Subset{2});
  CHECK(ess[0].compact_part == Points{{0, 1, 2}, {3, 0, 0}});
  CHECK(ess[0].weight_witness == LatticePoint{1, 3, 0});
  CHECK(ess[0].d_value == 3);

  // the non-compact faces over AB and BC exist but are not essential
  bool ab = false, bc = false;
  for (const auto& face : essential_noncompact_faces(f, false, true)) {
    if (face.compact_part == Points{{0, 3, 0}, {3, 0, 0}}) {
      ab = true;
      CHECK(face.kind == FaceKind::NonCompactInessential);
    }
    if (face.compact_part == Points{{0, 1, 2}, {0, 3, 0}}) {
      bc = true;
      CHECK(face.kind == FaceKind::NonCompactInessential);
    }
  }
  CHECK(ab);
  CHECK(bc);
}

TEST_CASE("one-variable and convenient cases") {
  for (int a = 1; a <= 5; ++a) {
    SupportReport r = support_vertices(MixedPoly::monomial(1, {a}, {0}));
    CHECK(r.vertices == Points{{a}});
    CHECK(r.convenient);
  }
  MixedPoly b = parse_poly("z1^3 + z2^4 + |z1|^2*z2");
  CHECK(support_vertices(b).convenient);
  CHECK(essential_noncompact_faces(b).empty());
  CHECK(vanishing_subsets(b).vanishing.empty());
  CHECK_THROWS_AS(support_vertices(MixedPoly(2)), Error);
}

TEST_CASE("delta_of_weight examples") {
  MixedPoly fig = corpus("fig1").poly;
  WeightedFace w = delta_of_weight(fig, {1, 3, 0});
  CHECK(w.d_value == 3);
  CHECK(w.face.generators == Points{{0, 1, 2}, {3, 0, 0}});
  CHECK(w.face_poly == parse_poly("z1^3 + z2*z3^2"));

  MixedPoly tib = corpus("tibar").poly;
  CHECK(delta_of_weight(tib, {1, 0}).face_poly == tib);

  std::mt19937_64 rng(4);
  for (int k = 0; k < 100; ++k) {
    MixedPoly f = random_poly(rng, 3, 4, 3);
    if (f.is_zero() || f.coefficient(MixedMonomial{{0, 0, 0}, {0, 0, 0}})) continue;
    int mindeg = INT_MAX;
    for (const auto& [m, c] : f.terms()) mindeg = std::min(mindeg, m.total_degree());
    CHECK(delta_of_weight(f, {1, 1, 1}).d_value == mindeg);
  }
}

TEST_CASE("d(P) and face functions against brute force") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> wt(0, 4);
  for (int k = 0; k < 200; ++k) {
    MixedPoly f = random_poly(rng, 3, 5, 3);
    if (f.is_zero()) continue;
    LatticePoint P{wt(rng), wt(rng), wt(rng)};
    if (P == LatticePoint{0, 0, 0}) P[0] = 1;
    P = primitive(P);
    long best = LONG_MAX;
    for (const auto& [m, c] : f.terms()) best = std::min(best, dot(P, m.support()));
    MixedPoly argmin(3);
    for (const auto& [m, c] : f.terms())
      if (dot(P, m.support()) == best) argmin.add_term(m, c);
    WeightedFace w = delta_of_weight(f, P);
    CHECK(w.d_value == best);
    CHECK(w.face_poly == argmin);
  }
}

TEST_CASE("oracle: vertices against dominance and weight enumeration on 200 random supports") {
  std::mt19937_64 rng(200);
  for (int k = 0; k < 200; ++k) {
    std::size_t n = k % 3 == 0 ? 1 : k % 3 == 1 ? 2 : 3;
    Points pts = random_support(rng, n, n == 3 ? 3 : 6);
    MixedPoly f = poly_from_support(pts, rng);
    SupportReport r = support_vertices(f);
    CAPTURE(to_string(f));
    CHECK(r.support == pts);
    Points expect = n == 1 ? Points{*std::min_element(pts.begin(), pts.end())} : vertex_oracle(pts, n);
    CHECK(r.vertices == expect);
    for (const auto& v : r.vertices) CHECK(std::find(pts.begin(), pts.end(), v) != pts.end());
    // convenience: every axis carries a vertex
    bool conv = true;
    for (std::size_t i = 0; i < n; ++i) {
      bool hit = false;
      for (const auto& v : r.vertices) {
        int nz = 0;
        for (std::size_t j = 0; j < n; ++j) nz += v[j] != 0 && j != i;
        hit |= nz == 0 && v[i] > 0;
      }
      conv &= hit;
    }
    CHECK(r.convenient == conv);
  }
}

TEST_CASE("restriction commutes with the boundary") {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 100; ++k) {
    MixedPoly f = random_poly(rng, 3, 6, 2);
    if (f.is_zero()) continue;
    Points verts = support_vertices(f).vertices;
    for (unsigned mask = 1; mask < 8; ++mask) {
      Subset I;
      for (std::size_t i = 0; i < 3; ++i)
        if (mask >> i & 1) I.push_back(i);
      MixedPoly fI = restrict_to(f, I);
      if (fI.is_zero()) continue;
      Points inside;
      for (const auto& v : verts) {
        bool ok = true;
        for (std::size_t i = 0; i < 3; ++i) ok &= (mask >> i & 1) || v[i] == 0;
        if (ok) inside.push_back(v);
      }
      CHECK(support_vertices(fI).vertices == inside);
    }
  }
}

TEST_CASE("vanishing subsets") {
  CHECK(vanishing_subsets(corpus("fig1").poly).vanishing == subsets({{2}}));
  CHECK(vanishing_subsets(corpus("parusinski").poly).vanishing == subsets({{0}, {1}, {2}, {0, 2}, {1, 2}}));
  for (int n = 4; n <= 7; ++n) CHECK(vanishing_subsets(corpus("d_n", {n}).poly).vanishing == subsets({{1}}));
  CHECK_THROWS_AS(vanishing_subsets(MixedPoly::variable(17, 0)), Error);

  for (const auto& name : corpus_names()) {
    std::vector<int> params;
    if (name == "tibar_a") params = {2};
    if (name == "cone") params = {1, 3, 1, 2, 1};
    if (name == "cyclic") params = {2, 3, 2};
    if (name == "d_n") params = {5};
    MixedPoly f = corpus(name, params).poly;
    VanishingReport r = vanishing_subsets(f);
    std::size_t n = f.num_vars();
    CHECK(r.vanishing.size() + r.nonvanishing.size() == (std::size_t(1) << n) - 1);
    for (const auto& I : r.vanishing) {
      CHECK(restrict_to(f, I).is_zero());
      for (unsigned sub = 1; sub < (1u << I.size()); ++sub) {
        Subset J;
        for (std::size_t b = 0; b < I.size(); ++b)
          if (sub >> b & 1) J.push_back(I[b]);
        CHECK(r.is_vanishing(J));
      }
    }
    for (const auto& I : r.nonvanishing) CHECK_FALSE(restrict_to(f, I).is_zero());
  }
}

TEST_CASE("essential faces re-verified independently") {
  MixedPoly dn = corpus("d_n", {4}).poly;
  auto ess = essential_noncompact_faces(dn);
  REQUIRE(ess.size() == 1);
  CHECK(ess[0].compact_part == Points{{0, 2, 1}, {2, 0, 0}});
  CHECK(ess[0].noncompact_directions == Subset{1});
  CHECK(ess[0].weight_witness == LatticePoint{1, 0, 2});
  CHECK(ess[0].d_value == 2);

  std::vector<MixedPoly> inputs{corpus("fig1").poly, dn, corpus("tibar").poly, corpus("parusinski").poly,
                                corpus("cyclic", {3, 2, 4}).poly, corpus("cone", {1, 2, 1, 1}).poly};
  std::mt19937_64 rng(3);
  for (int k = 0; k < 60; ++k) {
    MixedPoly f = random_poly(rng, 3, 4, 2);
    if (!f.is_zero()) inputs.push_back(f);
  }
  for (const auto& f : inputs) {
    for (const auto& face : essential_noncompact_faces(f, true)) {
      const auto& P = face.weight_witness;
      WeightedFace w = delta_of_weight(f, P);
      CHECK(w.d_value == face.d_value);
      CHECK(w.face.generators == face.generators);
      Subset zeros;
      for (std::size_t i = 0; i < P.size(); ++i)
        if (P[i] == 0) zeros.push_back(i);
      CHECK(zeros == face.noncompact_directions);
      CHECK(restrict_to(f, face.noncompact_directions).is_zero());
      // ray closure: moving a generator along E_i keeps l_P constant
      for (const auto& g : face.generators)
        for (auto i : face.noncompact_directions) {
          LatticePoint moved = g;
          moved[i] += 5;
          CHECK(dot(P, moved) == face.d_value);
        }
    }
  }
}

TEST_CASE("top faces") {
  auto tops = top_faces(corpus("brieskorn_curve").poly, {0, 1});
  REQUIRE(tops.size() == 2);
  std::set<LatticePoint> ws{tops[0].weight, tops[1].weight};
  CHECK(ws == std::set<LatticePoint>{{2, 3}, {3, 2}});

  auto one = top_faces(parse_poly("z1^2"), {0});
  REQUIRE(one.size() == 1);
  CHECK(one[0].weight == LatticePoint{1});
  CHECK(one[0].face_poly == parse_poly("z1^2"));

  for (int n = 4; n <= 6; ++n) {
    MixedPoly dn = corpus("d_n", {n}).poly;
    auto t = top_faces(dn, {0, 2});
    REQUIRE(t.size() == 1);
    MixedPoly expect = parse_poly("z1^2", 3) + MixedPoly::monomial(3, {0, 0, n - 1}, {0, 0, 0});
    CHECK(t[0].face_poly == expect);
    CHECK_THROWS_AS(top_faces(dn, {1}), Error);
  }
}

TEST_CASE("degrees") {
  MixedPoly bc = corpus("brieskorn_curve").poly;
  DegreeReport d = degrees(delta_of_weight(bc, {2, 3}).face_poly, {2, 3});
  CHECK(d.rdeg == 40);
  CHECK(d.pdeg == 20);
  CHECK(d.strongly_polar);
  CHECK(d.polar_positive);

  for (int a = 1; a < 5; ++a) {
    DegreeReport m = degrees(MixedPoly::monomial(1, {a}, {0}), {1});
    CHECK(m.rdeg == a);
    CHECK(m.pdeg == a);
  }
  DegreeReport r = degrees(parse_poly("|z1|^2"), {1});
  CHECK(r.rdeg == 2);
  CHECK(r.pdeg == 0);
  CHECK_FALSE(r.polar_positive);

  DegreeReport mixed = degrees(parse_poly("z1^2 + z1^3"), {1});
  CHECK_FALSE(mixed.rdeg.has_value());

  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> e(0, 3), w(1, 4);
  for (int k = 0; k < 100; ++k) {
    Exponents n1{e(rng), e(rng)}, m1{e(rng), e(rng)}, n2{e(rng), e(rng)}, m2{e(rng), e(rng)};
    LatticePoint P{w(rng), w(rng)};
    MixedPoly a = MixedPoly::monomial(2, n1, m1), b = MixedPoly::monomial(2, n2, m2);
    if ((a * b).terms().begin()->first.total_degree() == 0) continue;
    if (a.terms().begin()->first.total_degree() == 0 || b.terms().begin()->first.total_degree() == 0) continue;
    DegreeReport da = degrees(a, P), db = degrees(b, P), dab = degrees(a * b, P);
    CHECK(*dab.rdeg == *da.rdeg + *db.rdeg);
    CHECK(*dab.pdeg == *da.pdeg + *db.pdeg);
  }
}

TEST_CASE("compact faces carry strictly positive witnesses") {
  for (const auto& face : compact_faces(corpus("fig1").poly)) {
    for (auto p : face.weight_witness) CHECK(p > 0);
    CHECK(face.kind == FaceKind::Compact);
    CHECK(face.noncompact_directions.empty());
  }
  CHECK(compact_faces(corpus("fig1").poly).size() == 7);
}

}
