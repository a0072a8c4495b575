#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "mixed_milnor/local_search.hpp"
#include "mixed_milnor/mixed_poly.hpp"
#include "mixed_milnor/newton.hpp"

namespace mixed_milnor {

// Scale- and phase-invariant criticality measure of f at p. With
// v = conj(df/dz), w = df/dzbar rescaled per coordinate by the gradient scale,
// a = |v|, b = |w|, c = |<v,w>|: ((a-b)^2 + (ab-c)^2) / (1+a^2+b^2)^2.
double criticality_residual(const MixedPoly& f, const ComplexPoint& p);

enum class NondegeneracyStatus { NoCriticalPointFound, CriticalPointWitness, Degenerate };
const char* status_name(NondegeneracyStatus s);

struct NondegeneracyVerdict {
  NondegeneracyStatus status = NondegeneracyStatus::NoCriticalPointFound;
  std::optional<ComplexPoint> witness;
  SearchStats residual_stats;
  FaceDescriptor face;
  MixedPoly face_poly;
};

// One verdict per compact face and per compact part of an essential face.
// Degenerate means the face function is a constant times a real-valued
// polynomial, so every torus point is critical.
std::vector<NondegeneracyVerdict> falsify_nondegeneracy(const MixedPoly& f, int budget = 64,
                                                        std::uint64_t seed = 0);

// T_j = Im(dbar_j g * conj(dbar_j h)) for j outside I(face), f_face = g + i h.
struct CriterionPoly {
  std::size_t j;  // 0-based
  MixedPoly T;
};
std::vector<CriterionPoly> tameness_witness_polys(const MixedPoly& f, const FaceDescriptor& face);

// Same, straight from a face function and its direction set.
std::vector<CriterionPoly> criterion_polys(const MixedPoly& f_face, const Subset& I);

enum class TamenessStatus { TameCertified, NotTame, Inconclusive };
const char* status_name(TamenessStatus s);

constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct TamenessWitness {
  ComplexPoint frozen;    // z_I
  ComplexPoint critical;  // z_{I^c}
  double residual = 0.0;
};

struct RhoProbe {
  bool ran = false;
  bool critical_value_found = false;
  double min_residual = 0.0;
  std::optional<ComplexPoint> point;
};

struct FaceTameness {
  FaceDescriptor face;
  MixedPoly face_poly;
  TamenessStatus status = TamenessStatus::Inconclusive;
  double radius = 0.0;
  std::vector<CriterionPoly> criterion;
  std::optional<std::size_t> certifying_j;  // set when the symbolic rule fired
  std::optional<TamenessWitness> witness;
  SearchStats stats;
  RhoProbe rho;
};

struct TamenessVerdict {
  Subset I;
  TamenessStatus status = TamenessStatus::Inconclusive;
  double certified_radius = 0.0;
  std::optional<TamenessWitness> witness;
  std::vector<FaceTameness> faces;
};

struct TamenessOptions {
  double probe_radius = 0.1;
  int budget = 64;
  std::uint64_t seed = 0;
  int shells = 4;  // radii probe_radius * 2^-s for s = shells-1 .. 0
};

TamenessVerdict local_tameness_check(const MixedPoly& f, const Subset& I, const TamenessOptions& opts = {});

struct TamenessRadii {
  std::vector<std::pair<Subset, double>> r_I;
  double r_nc = kInfinity;
  double rho_0 = kInfinity;
};

// r_nc over every vanishing subset; rho_0 = min(r_nc, r0).
TamenessRadii tameness_radii(const MixedPoly& f, double r0, const TamenessOptions& opts = {});

// Sum of same-sign c * prod |z_k|^{2m_k} terms (nonzero).
bool is_sign_definite_modulus_sum(const MixedPoly& T);

}  // namespace mixed_milnor
