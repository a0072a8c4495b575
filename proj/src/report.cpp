#include "mixed_milnor/report.hpp"

#include <cmath>

namespace mixed_milnor {

Json subset_json(const Subset& I) {
  Json a = Json::array();
  for (auto i : I) a.push_back(i + 1);
  return a;
}

Json radius_json(double r) {
  if (std::isinf(r)) return "inf";
  return r;
}

Json point_json(const ComplexPoint& p) {
  Json a = Json::array();
  for (const auto& z : p) a.push_back(Json::array({z.real(), z.imag()}));
  return a;
}

namespace {

Json points_json(const std::vector<LatticePoint>& pts) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(p);
  return a;
}

Json finite_or_null(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

Json stats_json(const SearchStats& s) {
  return Json{{"samples", s.samples}, {"min_residual", finite_or_null(s.min_residual)}, {"restarts", s.restarts}};
}

Json exact_vector(const std::vector<GaussianRational>& v) {
  Json a = Json::array();
  for (const auto& c : v) a.push_back(c.to_string());
  return a;
}

}  // namespace

Json to_json(const FaceDescriptor& face) {
  Json j;
  j["kind"] = face_kind_name(face.kind);
  j["I"] = subset_json(face.noncompact_directions);
  j["generators"] = points_json(face.generators);
  j["compact_part"] = points_json(face.compact_part);
  j["witness"] = face.weight_witness;
  j["d"] = face.d_value;
  j["dim"] = face.dim;
  return j;
}

Json to_json(const SupportReport& rep) {
  return Json{{"support", points_json(rep.support)},
              {"vertices", points_json(rep.vertices)},
              {"convenient", rep.convenient}};
}

Json to_json(const VanishingReport& rep) {
  Json v = Json::array(), nv = Json::array();
  for (const auto& I : rep.vanishing) v.push_back(subset_json(I));
  for (const auto& I : rep.nonvanishing) nv.push_back(subset_json(I));
  return Json{{"vanishing", v}, {"nonvanishing", nv}};
}

Json to_json(const NondegeneracyVerdict& v) {
  Json j;
  j["face"] = to_json(v.face);
  j["face_poly"] = to_string(v.face_poly);
  j["status"] = status_name(v.status);
  j["witness"] = v.witness ? point_json(*v.witness) : Json(nullptr);
  j["residual_stats"] = stats_json(v.residual_stats);
  return j;
}

Json to_json(const TamenessVerdict& v) {
  Json j;
  j["I"] = subset_json(v.I);
  j["status"] = status_name(v.status);
  j["radius"] = radius_json(v.certified_radius);
  if (v.witness) {
    j["witness"] = Json{{"frozen", point_json(v.witness->frozen)},
                        {"critical", point_json(v.witness->critical)},
                        {"residual", v.witness->residual}};
  } else {
    j["witness"] = nullptr;
  }
  Json faces = Json::array();
  for (const auto& ft : v.faces) {
    Json f;
    f["face"] = to_json(ft.face);
    f["face_poly"] = to_string(ft.face_poly);
    f["status"] = status_name(ft.status);
    f["radius"] = radius_json(ft.radius);
    Json crit = Json::array();
    for (const auto& c : ft.criterion) crit.push_back(Json{{"j", c.j + 1}, {"T", to_string(c.T)}});
    f["criterion"] = crit;
    f["certifying_j"] = ft.certifying_j ? Json(*ft.certifying_j + 1) : Json(nullptr);
    f["search"] = stats_json(ft.stats);
    if (ft.rho.ran)
      f["rho_probe"] = Json{{"critical_value_found", ft.rho.critical_value_found},
                            {"min_residual", finite_or_null(ft.rho.min_residual)}};
    else
      f["rho_probe"] = nullptr;
    faces.push_back(f);
  }
  j["faces"] = faces;
  return j;
}

Json to_json(const ZetaFunction& z) {
  Json factors = Json::array();
  for (const auto& f : z.factors)
    factors.push_back(Json{{"d", f.d}, {"e", f.e}, {"I", subset_json(f.I)}, {"P", f.P}, {"chi", f.chi}});
  Json merged = Json::array();
  for (auto [d, e] : z.merged()) merged.push_back(Json{{"d", d}, {"e", e}});
  ExpandedZeta ex = expand_zeta(z);
  return Json{{"factors", factors},
              {"merged", merged},
              {"product", z.product()},
              {"numerator", to_string(ex.numerator)},
              {"denominator", to_string(ex.denominator)}};
}

Json to_json(const LimitTangentResult& r) {
  Json steps = Json::array();
  for (const auto& s : r.reduction_steps) {
    if (s.swap) steps.push_back(Json{{"swap", true}});
    else steps.push_back(Json{{"lambda", s.lambda.get_str()}, {"shift", s.shift.get_str()}});
  }
  return Json{{"covector_g", point_json(r.covector_g)},
              {"covector_h", point_json(r.covector_h)},
              {"leading_g", exact_vector(r.leading_g)},
              {"leading_h", exact_vector(r.leading_h)},
              {"order_g", r.order_g.get_str()},
              {"order_h", r.order_h.get_str()},
              {"reduction_steps", steps},
              {"independent", r.independent},
              {"computation_order", r.computation_order}};
}

Json to_json(const AfArcVerdict& v) {
  return Json{{"I", subset_json(v.I)},
              {"contains_CI", v.contains_CI},
              {"status", status_name(v.status)},
              {"limit", to_json(v.limit)}};
}

Json to_json(const TransversalityScan& s) {
  return Json{{"accepted", s.accepted},
              {"attempts", s.attempts},
              {"singular", s.singular},
              {"min_residual", finite_or_null(s.min_residual)},
              {"argmin", s.accepted ? point_json(s.argmin) : Json(nullptr)}};
}

Json to_json(const OpennessProbe& p) {
  return Json{{"coverage", p.arg_coverage},
              {"sector_halfwidth", p.sector_halfwidth},
              {"nonzero_samples", p.nonzero_samples},
              {"bins", kArgBins}};
}

}  // namespace mixed_milnor
