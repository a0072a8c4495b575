#pragma once

#include <algorithm>
#include <climits>
#include <cmath>
#include <set>

#include "mixed_milnor/newton.hpp"
#include "test_support.hpp"

// independent oracles shared by the unit tests and the acceptance run
namespace testing_support {

using Points = std::vector<LatticePoint>;

inline Points sorted(Points p) {
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  return p;
}

// vertex iff unique minimiser of some strictly positive weight; weights
// enumerated over a box large enough for coordinates <= 3 (n=3) or <= 6 (n=2)
inline Points vertex_oracle(const Points& pts, std::size_t n) {
  // drop dominated points first: they are never unique minimisers
  Points cand;
  for (const auto& p : pts) {
    bool dominated = false;
    for (const auto& q : pts)
      if (q != p) {
        bool le = true;
        for (std::size_t i = 0; i < n; ++i) le &= q[i] <= p[i];
        dominated |= le;
      }
    if (!dominated) cand.push_back(p);
  }
  std::set<LatticePoint> found;
  const int K = n == 2 ? 80 : 40;
  LatticePoint w(n, 1);
  while (true) {
    long best = LONG_MAX;
    int count = 0;
    const LatticePoint* arg = nullptr;
    for (const auto& p : cand) {
      long v = dot(w, p);
      if (v < best) {
        best = v;
        count = 1;
        arg = &p;
      } else if (v == best) {
        ++count;
      }
    }
    if (count == 1) found.insert(*arg);
    std::size_t i = 0;
    while (i < n && ++w[i] > K) w[i++] = 1;
    if (i == n) break;
  }
  return Points(found.begin(), found.end());
}

inline Points random_support(std::mt19937_64& rng, std::size_t n, int max_coord) {
  std::uniform_int_distribution<int> c(0, max_coord), m(1, 8);
  Points pts;
  int k = m(rng);
  while (static_cast<int>(pts.size()) < k) {
    LatticePoint p(n);
    int s = 0;
    for (auto& x : p) s += (x = c(rng));
    if (s > 0) pts.push_back(p);
  }
  return sorted(pts);
}

inline MixedPoly poly_from_support(const Points& pts, std::mt19937_64& rng) {
  std::size_t n = pts.front().size();
  MixedPoly f(n);
  for (const auto& p : pts) {
    Exponents nu(n), mu(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::uniform_int_distribution<int> split(0, p[i]);
      nu[i] = split(rng);
      mu[i] = p[i] - nu[i];
    }
    f.add_term({nu, mu}, random_coeff(rng));
  }
  return f;
}

// angles of the solutions of z^a zbar^b = 1 located by scanning |f - 1| on a fine grid
inline std::vector<double> unit_roots(const MixedPoly& f) {
  const int N = 200000;
  std::vector<double> v(N);
  for (int k = 0; k < N; ++k) v[k] = std::abs(evaluate(f, ComplexPoint{std::polar(1.0, 2 * M_PI * k / N)}) - 1.0);
  std::vector<double> roots;
  for (int k = 0; k < N; ++k) {
    double prev = v[(k + N - 1) % N], next = v[(k + 1) % N];
    if (v[k] <= prev && v[k] < next && v[k] < 1e-3) roots.push_back(2 * M_PI * k / N);
  }
  return roots;
}

}  // namespace testing_support
