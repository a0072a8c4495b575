#pragma once

#include <json.hpp>

#include "mixed_milnor/constructors.hpp"
#include "mixed_milnor/curve_limits.hpp"
#include "mixed_milnor/degeneracy.hpp"
#include "mixed_milnor/newton.hpp"
#include "mixed_milnor/zeta.hpp"

namespace mixed_milnor {

using Json = nlohmann::ordered_json;

// Subsets are written 1-based; infinite radii as the string "inf".
Json subset_json(const Subset& I);
Json radius_json(double r);
Json point_json(const ComplexPoint& p);  // [[re, im], ...]

Json to_json(const FaceDescriptor& face);
Json to_json(const SupportReport& rep);
Json to_json(const VanishingReport& rep);
Json to_json(const NondegeneracyVerdict& v);
Json to_json(const TamenessVerdict& v);
Json to_json(const ZetaFunction& z);
Json to_json(const LimitTangentResult& r);
Json to_json(const AfArcVerdict& v);
Json to_json(const TransversalityScan& s);
Json to_json(const OpennessProbe& p);

}  // namespace mixed_milnor
