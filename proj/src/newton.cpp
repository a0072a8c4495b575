#include "mixed_milnor/newton.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mixed_milnor/error.hpp"

namespace mixed_milnor {

const char* face_kind_name(FaceKind k) {
  switch (k) {
    case FaceKind::Compact: return "Compact";
    case FaceKind::NonCompactEssential: return "NonCompactEssential";
    case FaceKind::NonCompactInessential: return "NonCompactInessential";
  }
  return "?";
}

bool VanishingReport::is_vanishing(const Subset& I) const {
  return std::find(vanishing.begin(), vanishing.end(), I) != vanishing.end();
}

std::vector<LatticePoint> support_points(const MixedPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "zero polynomial has no Newton polyhedron");
  std::set<LatticePoint> s;
  for (const auto& [m, c] : f.terms()) s.insert(m.support());
  if (s.size() > kMaxSupport)
    throw Error(ErrorCode::SupportTooLarge, "support has more than 64 points");
  return {s.begin(), s.end()};
}

MixedPoly face_function(const MixedPoly& f, const std::vector<LatticePoint>& points) {
  std::set<LatticePoint> keep(points.begin(), points.end());
  MixedPoly r(f.num_vars());
  for (const auto& [m, c] : f.terms())
    if (keep.count(m.support())) r.add_term(m, c);
  return r;
}

namespace {

struct RawFace {
  std::vector<std::size_t> points;  // indices into support, sorted
  Subset rays;                      // sorted

  bool operator<(const RawFace& o) const {
    return std::tie(points, rays) < std::tie(o.points, o.rays);
  }
};

bool includes(const std::vector<std::size_t>& big, const std::vector<std::size_t>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::vector<std::size_t> intersect(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

int face_dimension(const std::vector<LatticePoint>& gens, const Subset& rays, std::size_t n) {
  RationalMatrix rows;
  for (std::size_t i = 1; i < gens.size(); ++i) {
    RationalVector d(n);
    for (std::size_t c = 0; c < n; ++c) d[c] = gens[i][c] - gens[0][c];
    rows.push_back(std::move(d));
  }
  for (auto r : rays) {
    RationalVector e(n, Rational(0));
    e[r] = 1;
    rows.push_back(std::move(e));
  }
  return static_cast<int>(rank(rows));
}

struct Lattice {
  std::vector<LatticePoint> support;
  std::vector<OrthantFacet> facets;
  std::vector<RawFace> faces;
  std::set<std::size_t> on_compact;  // support indices lying on a compact face
};

Lattice build_lattice(const MixedPoly& f) {
  Lattice L;
  L.support = support_points(f);
  L.facets = orthant_facets(L.support);
  std::set<RawFace> seen;
  std::vector<RawFace> frontier;
  for (const auto& F : L.facets) {
    RawFace r{F.points, F.rays};
    if (seen.insert(r).second) frontier.push_back(r);
  }
  std::vector<RawFace> facet_faces = frontier;
  while (!frontier.empty()) {
    std::vector<RawFace> next;
    for (const auto& a : frontier)
      for (const auto& b : facet_faces) {
        RawFace c{intersect(a.points, b.points), {}};
        if (c.points.empty()) continue;
        std::set_intersection(a.rays.begin(), a.rays.end(), b.rays.begin(), b.rays.end(),
                              std::back_inserter(c.rays));
        if (seen.insert(c).second) next.push_back(c);
      }
    frontier = std::move(next);
  }
  L.faces.assign(seen.begin(), seen.end());
  for (const auto& r : L.faces)
    if (r.rays.empty()) L.on_compact.insert(r.points.begin(), r.points.end());
  return L;
}

FaceDescriptor describe(const MixedPoly& f, const Lattice& L, const RawFace& r) {
  const std::size_t n = f.num_vars();
  FaceDescriptor d;
  for (auto i : r.points) d.generators.push_back(L.support[i]);
  for (auto i : r.points)
    if (L.on_compact.count(i)) d.compact_part.push_back(L.support[i]);
  d.noncompact_directions = r.rays;
  d.dim = face_dimension(d.generators, r.rays, n);
  LatticePoint sum(n, 0);
  for (const auto& F : L.facets)
    if (includes(F.points, r.points) && includes(F.rays, r.rays))
      for (std::size_t c = 0; c < n; ++c) sum[c] += F.normal[c];
  d.weight_witness = primitive(sum);
  d.d_value = dot(d.weight_witness, d.generators[0]);
  if (r.rays.empty()) {
    d.kind = FaceKind::Compact;
  } else {
    d.kind = restrict_to(f, r.rays).is_zero() ? FaceKind::NonCompactEssential
                                              : FaceKind::NonCompactInessential;
  }
  return d;
}

bool face_less(const FaceDescriptor& a, const FaceDescriptor& b) {
  return std::tie(a.dim, a.noncompact_directions, a.generators) <
         std::tie(b.dim, b.noncompact_directions, b.generators);
}

}  // namespace

std::vector<FaceDescriptor> all_faces(const MixedPoly& f) {
  Lattice L = build_lattice(f);
  std::vector<FaceDescriptor> out;
  for (const auto& r : L.faces) out.push_back(describe(f, L, r));
  std::sort(out.begin(), out.end(), face_less);
  return out;
}

std::vector<FaceDescriptor> compact_faces(const MixedPoly& f) {
  std::vector<FaceDescriptor> out;
  for (auto& d : all_faces(f))
    if (d.kind == FaceKind::Compact) out.push_back(std::move(d));
  return out;
}

std::vector<FaceDescriptor> essential_noncompact_faces(const MixedPoly& f, bool include_subfaces,
                                                       bool include_inessential) {
  std::vector<FaceDescriptor> faces = all_faces(f);
  std::vector<FaceDescriptor> out;
  for (const auto& d : faces) {
    if (d.kind == FaceKind::Compact) continue;
    if (d.kind == FaceKind::NonCompactInessential && !include_inessential) continue;
    if (!include_subfaces) {
      bool dominated = false;
      for (const auto& e : faces) {
        if (&e == &d || e.noncompact_directions != d.noncompact_directions) continue;
        if (e.generators.size() > d.generators.size() &&
            std::includes(e.generators.begin(), e.generators.end(), d.generators.begin(),
                          d.generators.end())) {
          dominated = true;
          break;
        }
      }
      if (dominated) continue;
    }
    out.push_back(d);
  }
  return out;
}

SupportReport support_vertices(const MixedPoly& f) {
  SupportReport rep;
  Lattice L = build_lattice(f);
  rep.support = L.support;
  for (const auto& r : L.faces)
    if (r.rays.empty() && r.points.size() == 1) rep.vertices.push_back(L.support[r.points[0]]);
  std::sort(rep.vertices.begin(), rep.vertices.end());
  const std::size_t n = f.num_vars();
  rep.convenient = true;
  for (std::size_t i = 0; i < n && rep.convenient; ++i) {
    bool hit = false;
    for (const auto& s : rep.support) {
      bool axis = s[i] > 0;
      for (std::size_t c = 0; c < n && axis; ++c)
        if (c != i && s[c] != 0) axis = false;
      hit |= axis;
    }
    rep.convenient = hit;
  }
  return rep;
}

WeightedFace delta_of_weight(const MixedPoly& f, const WeightVector& P) {
  const std::size_t n = f.num_vars();
  if (P.size() != n) throw Error(ErrorCode::DimensionMismatch, "weight length does not match variable count");
  bool any = false;
  for (int p : P) {
    if (p < 0) throw Error(ErrorCode::BadParams, "weights must be non-negative");
    any |= p > 0;
  }
  if (!any) throw Error(ErrorCode::BadParams, "weight vector is zero");
  Lattice L = build_lattice(f);
  WeightVector Pp = primitive(P);
  long d = dot(Pp, L.support[0]);
  for (const auto& s : L.support) d = std::min(d, dot(Pp, s));
  RawFace r;
  for (std::size_t i = 0; i < L.support.size(); ++i)
    if (dot(Pp, L.support[i]) == d) r.points.push_back(i);
  for (std::size_t i = 0; i < n; ++i)
    if (Pp[i] == 0) r.rays.push_back(i);
  FaceDescriptor desc = describe(f, L, r);
  desc.weight_witness = Pp;
  desc.d_value = d;
  long scale = 1;
  for (std::size_t i = 0; i < n; ++i)
    if (P[i] != 0) {
      scale = P[i] / Pp[i];
      break;
    }
  MixedPoly fp = face_function(f, desc.generators);
  return {d * scale, std::move(desc), std::move(fp)};
}

VanishingReport vanishing_subsets(const MixedPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "zero polynomial");
  const std::size_t n = f.num_vars();
  if (n > kMaxSubsetVars) throw Error(ErrorCode::TooManyVariables, "subset enumeration needs n <= 16");
  std::vector<Exponents> supports;
  for (const auto& [m, c] : f.terms()) supports.push_back(m.support());
  VanishingReport rep;
  std::vector<Subset> all;
  for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
    Subset I;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ul << i)) I.push_back(i);
    all.push_back(std::move(I));
  }
  std::sort(all.begin(), all.end(), [](const Subset& a, const Subset& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  for (auto& I : all) {
    (restrict_to(f, I).is_zero() ? rep.vanishing : rep.nonvanishing).push_back(std::move(I));
  }
  return rep;
}

std::vector<TopFace> top_faces(const MixedPoly& f, const Subset& I) {
  const std::size_t n = f.num_vars();
  if (I.empty()) throw Error(ErrorCode::BadParams, "empty coordinate subset");
  for (auto i : I)
    if (i >= n) throw Error(ErrorCode::IndexOutOfRange, "subset index out of range");
  MixedPoly fI = restrict_to(f, I);
  if (fI.is_zero()) throw Error(ErrorCode::VanishingSubset, "f vanishes on this coordinate subspace");
  std::vector<LatticePoint> full = support_points(fI);
  std::vector<LatticePoint> proj;
  for (const auto& s : full) {
    LatticePoint q;
    for (auto i : I) q.push_back(s[i]);
    proj.push_back(std::move(q));
  }
  std::vector<TopFace> out;
  for (const auto& F : orthant_facets(proj)) {
    bool positive = std::all_of(F.normal.begin(), F.normal.end(), [](int x) { return x > 0; });
    if (!positive) continue;
    WeightVector P(n, 0);
    for (std::size_t a = 0; a < I.size(); ++a) P[I[a]] = F.normal[a];
    std::vector<LatticePoint> pts;
    for (auto idx : F.points) pts.push_back(full[idx]);
    out.push_back({P, face_function(fI, pts)});
  }
  std::sort(out.begin(), out.end(), [](const TopFace& a, const TopFace& b) { return a.weight < b.weight; });
  return out;
}

DegreeReport degrees(const MixedPoly& f_face, const WeightVector& P) {
  DegreeReport rep;
  if (f_face.is_zero()) return rep;
  if (P.size() != f_face.num_vars())
    throw Error(ErrorCode::DimensionMismatch, "weight length does not match variable count");
  bool first = true, r_const = true, p_const = true;
  long r0 = 0, p0 = 0;
  for (const auto& [m, c] : f_face.terms()) {
    long r = 0, p = 0;
    for (std::size_t i = 0; i < P.size(); ++i) {
      r += static_cast<long>(P[i]) * (m.nu[i] + m.mu[i]);
      p += static_cast<long>(P[i]) * (m.nu[i] - m.mu[i]);
    }
    if (first) {
      r0 = r;
      p0 = p;
      first = false;
      continue;
    }
    r_const &= r == r0;
    p_const &= p == p0;
  }
  if (r_const) rep.rdeg = r0;
  if (p_const) rep.pdeg = p0;
  rep.strongly_polar = r_const && p_const;
  rep.polar_positive = p_const && p0 > 0;
  return rep;
}

}  // namespace mixed_milnor
