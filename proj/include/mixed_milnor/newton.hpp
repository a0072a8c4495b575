#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mixed_milnor/mixed_poly.hpp"
#include "mixed_milnor/polytope.hpp"

namespace mixed_milnor {

using WeightVector = LatticePoint;     // non-negative, primitive
using Subset = std::vector<std::size_t>;  // sorted 0-based indices

constexpr std::size_t kMaxSupport = 64;
constexpr std::size_t kMaxSubsetVars = 16;

enum class FaceKind { Compact, NonCompactEssential, NonCompactInessential };

const char* face_kind_name(FaceKind k);

struct FaceDescriptor {
  std::vector<LatticePoint> generators;  // support points on the face, sorted
  int dim = 0;
  WeightVector weight_witness;
  long d_value = 0;
  FaceKind kind = FaceKind::Compact;
  Subset noncompact_directions;          // I(face); empty when compact
  std::vector<LatticePoint> compact_part;  // generators lying on Gamma(f)
};

struct SupportReport {
  std::vector<LatticePoint> support;
  std::vector<LatticePoint> vertices;
  bool convenient = false;
};

struct WeightedFace {
  long d_value;
  FaceDescriptor face;
  MixedPoly face_poly;
};

struct VanishingReport {
  std::vector<Subset> vanishing;
  std::vector<Subset> nonvanishing;
  bool is_vanishing(const Subset& I) const;
};

struct TopFace {
  WeightVector weight;
  MixedPoly face_poly;
};

struct DegreeReport {
  std::optional<long> rdeg;
  std::optional<long> pdeg;
  bool strongly_polar = false;
  bool polar_positive = false;
};

// Support of f as sorted distinct lattice points. Throws ZeroPolynomial / SupportTooLarge.
std::vector<LatticePoint> support_points(const MixedPoly& f);

SupportReport support_vertices(const MixedPoly& f);

// Terms of f whose support point lies in `points`.
MixedPoly face_function(const MixedPoly& f, const std::vector<LatticePoint>& points);

WeightedFace delta_of_weight(const MixedPoly& f, const WeightVector& P);

VanishingReport vanishing_subsets(const MixedPoly& f);

// Every face of Gamma_+(f) (compact and not), sorted by (dim, generators).
std::vector<FaceDescriptor> all_faces(const MixedPoly& f);

// Compact faces of Gamma_+(f), vertices included.
std::vector<FaceDescriptor> compact_faces(const MixedPoly& f);

// Non-compact faces whose direction set I is vanishing. By default only the
// maximal face for each generator set is kept; subfaces (lower-dimensional
// faces with the same I) are added when include_subfaces is set, and
// non-vanishing directions when include_inessential is set.
std::vector<FaceDescriptor> essential_noncompact_faces(const MixedPoly& f,
                                                       bool include_subfaces = false,
                                                       bool include_inessential = false);

std::vector<TopFace> top_faces(const MixedPoly& f, const Subset& I);

DegreeReport degrees(const MixedPoly& f_face, const WeightVector& P);

}  // namespace mixed_milnor
