#pragma once

#include <cstddef>
#include <vector>

#include "mixed_milnor/gaussian_rational.hpp"
#include "mixed_milnor/mixed_poly.hpp"

namespace mixed_milnor {

using LatticePoint = Exponents;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

// Exact Gaussian elimination helpers; rows are vectors of equal length.
std::size_t rank(RationalMatrix rows);
RationalMatrix nullspace(RationalMatrix rows, std::size_t cols);
Rational determinant(RationalMatrix m);

RationalVector to_rational(const LatticePoint& p);
// Integer multiple with gcd 1; the sign of the first nonzero entry is kept.
LatticePoint primitive(const RationalVector& v);
LatticePoint primitive(const LatticePoint& v);

long dot(const LatticePoint& a, const LatticePoint& b);

// Support points not dominated componentwise by another point, sorted.
std::vector<LatticePoint> undominated(const std::vector<LatticePoint>& pts);

// Facet of pts + R_+^k: <normal, x> >= offset on the polyhedron, with equality
// exactly on `points` (indices into the input) and the rays E_i, i in `rays`.
struct OrthantFacet {
  LatticePoint normal;
  long offset;
  std::vector<std::size_t> points;
  std::vector<std::size_t> rays;
};

// Facets of conv(pts) + R_+^k. Normals are primitive and non-negative.
std::vector<OrthantFacet> orthant_facets(const std::vector<LatticePoint>& pts);

// Affine dimension of conv(pts) (-1 when empty).
int affine_dimension(const std::vector<LatticePoint>& pts);

// k! Vol_k(conv({0} u pts)) in Z^k; 0 when the hull is lower dimensional.
mpz_class normalized_volume_with_origin(const std::vector<LatticePoint>& pts);

// Normalized volume of conv(pts) in its own ambient space (pts full dimensional).
mpz_class normalized_volume(const std::vector<LatticePoint>& pts);

}  // namespace mixed_milnor
