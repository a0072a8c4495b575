#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mixed_milnor/mixed_poly.hpp"

namespace mixed_milnor {

// z_j -> w_j^{a_j} conj(w_j)^{b_j}; requires a_j > b_j >= 0.
struct PullbackSpec {
  std::vector<int> a;
  std::vector<int> b;
};

MixedPoly pullback_cyclic(const MixedPoly& f, const PullbackSpec& spec);

// phi_s2 followed by phi_s1 on the input side: pullback(pullback(f, s1), s2)
PullbackSpec compose(const PullbackSpec& s1, const PullbackSpec& s2);

struct JoinResult {
  MixedPoly poly;
  std::vector<std::string> names;  // "f1.z1", ..., "f2.z1", ... by new index
};

JoinResult join(const MixedPoly& f1, const MixedPoly& f2);

struct CorpusEntry {
  MixedPoly poly;
  std::string provenance;
};

// fig1, tibar, tibar_a[a], parusinski, cone[m,n,a1..an], cyclic[a1..an],
// brieskorn_curve, d_n[n]
CorpusEntry corpus(std::string_view name, const std::vector<int>& params = {});
std::vector<std::string> corpus_names();

}  // namespace mixed_milnor
