#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "mixed_milnor/mixed_poly.hpp"

namespace mixed_milnor {

// Mixed-criticality residual restricted to the coordinates with active[j].
// Components whose gradient scale vanishes are dropped. Zero iff
// conj(d_z f) = alpha * d_zbar f on those coordinates for some |alpha| = 1.
template <typename T>
T masked_criticality_residual(const MixedPoly& f, std::span<const std::complex<T>> p,
                              const std::vector<bool>& active);

struct SearchOptions {
  int budget = 64;
  std::uint64_t seed = 0;
  double log_box = 2.0;     // starting log-magnitudes uniform in [-log_box, log_box]
  double log_clamp = 10.0;  // iterates never leave |u| <= log_clamp
  int max_iterations = 120;
  double threshold = 1e-10;
};

struct SearchStats {
  int samples = 0;   // residual evaluations
  int restarts = 0;
  double min_residual = std::numeric_limits<double>::infinity();
};

struct SearchResult {
  std::optional<ComplexPoint> witness;
  double witness_residual = 0.0;
  SearchStats stats;
};

// Multistart minimisation of the residual over the torus in the free
// coordinates. Before each restart `prepare` may overwrite the frozen
// coordinates of the start point; it receives the restart's generator.
using FrozenSampler = std::function<void(std::mt19937_64&, ComplexPoint&)>;

SearchResult search_critical_points(const MixedPoly& f, const std::vector<bool>& free_vars,
                                    const FrozenSampler& prepare, const SearchOptions& opts);

// Generic Levenberg-Marquardt on x -> r(x) with central-difference Jacobian.
// Returns the final x; `project` is applied after every accepted step.
using ResidualFn = std::function<std::vector<double>(const std::vector<double>&)>;
std::vector<double> levenberg_marquardt(const ResidualFn& r, std::vector<double> x, int max_iterations,
                                        const std::function<void(std::vector<double>&)>& project,
                                        int* evaluations = nullptr);

}  // namespace mixed_milnor

namespace mixed_milnor {

// |t - proj(t)| where proj is the real-orthogonal projection onto
// span_R(u1, u2) in C^n = R^{2n} with <x,y> = Re sum x_j conj(y_j).
double span_residual(const std::vector<std::complex<double>>& t, const std::vector<std::complex<double>>& u1,
                     const std::vector<std::complex<double>>& u2);

}  // namespace mixed_milnor
