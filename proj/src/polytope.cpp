#include "mixed_milnor/polytope.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "mixed_milnor/error.hpp"

namespace mixed_milnor {
namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(RationalMatrix rows) {
  if (rows.empty()) return 0;
  std::size_t cols = rows[0].size();
  return rref(rows, cols).size();
}

RationalMatrix nullspace(RationalMatrix rows, std::size_t cols) {
  std::vector<std::size_t> pivots = rref(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  RationalMatrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(RationalMatrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m[p][c]) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(m[i][c]) == 0) continue;
      Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

RationalVector to_rational(const LatticePoint& p) {
  RationalVector v;
  v.reserve(p.size());
  for (int x : p) v.emplace_back(x);
  return v;
}

LatticePoint primitive(const RationalVector& v) {
  mpz_class l = 1;
  for (const auto& x : v) l = lcm(l, x.get_den());
  std::vector<mpz_class> ints;
  mpz_class g = 0;
  for (const auto& x : v) {
    mpz_class y = x.get_num() * (l / x.get_den());
    g = gcd(g, y);
    ints.push_back(y);
  }
  LatticePoint out(v.size(), 0);
  if (g == 0) return out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    mpz_class y = ints[i] / g;
    if (!y.fits_sint_p()) throw Error(ErrorCode::SupportTooLarge, "weight entry overflows int");
    out[i] = static_cast<int>(y.get_si());
  }
  return out;
}

LatticePoint primitive(const LatticePoint& v) {
  return primitive(to_rational(v));
}

long dot(const LatticePoint& a, const LatticePoint& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
  return s;
}

std::vector<LatticePoint> undominated(const std::vector<LatticePoint>& pts) {
  std::set<LatticePoint> uniq(pts.begin(), pts.end());
  std::vector<LatticePoint> u(uniq.begin(), uniq.end()), out;
  for (const auto& p : u) {
    bool dominated = false;
    for (const auto& q : u) {
      if (q == p) continue;
      bool le = true;
      for (std::size_t i = 0; i < p.size() && le; ++i) le = q[i] <= p[i];
      if (le) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(p);
  }
  return out;
}

std::vector<OrthantFacet> orthant_facets(const std::vector<LatticePoint>& pts) {
  std::vector<OrthantFacet> out;
  if (pts.empty()) return out;
  const std::size_t k = pts[0].size();
  std::vector<LatticePoint> cand = undominated(pts);
  std::set<LatticePoint> seen;

  auto consider = [&](const RationalMatrix& rows) {
    RationalMatrix ns = nullspace(rows, k);
    if (ns.size() != 1) return;
    LatticePoint p = primitive(ns[0]);
    bool has_pos = false, has_neg = false;
    for (int x : p) {
      has_pos |= x > 0;
      has_neg |= x < 0;
    }
    if (has_pos && has_neg) return;
    if (has_neg)
      for (int& x : p) x = -x;
    if (seen.count(p)) return;
    long best = dot(p, pts[0]);
    for (const auto& q : pts) best = std::min(best, dot(p, q));
    seen.insert(p);
    OrthantFacet f{p, best, {}, {}};
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (dot(p, pts[i]) == best) f.points.push_back(i);
    for (std::size_t i = 0; i < k; ++i)
      if (p[i] == 0) f.rays.push_back(i);
    // the hyperplane must be spanned by what it touches
    RationalMatrix span;
    for (std::size_t i = 1; i < f.points.size(); ++i) {
      RationalVector d(k);
      for (std::size_t c = 0; c < k; ++c) d[c] = pts[f.points[i]][c] - pts[f.points[0]][c];
      span.push_back(std::move(d));
    }
    for (auto r : f.rays) {
      RationalVector e(k, Rational(0));
      e[r] = 1;
      span.push_back(std::move(e));
    }
    if (rank(span) != k - 1) return;
    out.push_back(std::move(f));
  };

  // Choose rays R (|R| <= k-1) and k-|R| points; orient and test support.
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, std::size_t, RationalMatrix&, const LatticePoint*)> pick_points;
  pick_points = [&](std::size_t start, std::size_t need, RationalMatrix& rows, const LatticePoint* base) {
    if (need == 0) {
      consider(rows);
      return;
    }
    for (std::size_t i = start; i < cand.size(); ++i) {
      if (!base) {
        pick_points(i + 1, need - 1, rows, &cand[i]);
        continue;
      }
      RationalVector d(k);
      for (std::size_t c = 0; c < k; ++c) d[c] = cand[i][c] - (*base)[c];
      rows.push_back(std::move(d));
      if (rank(rows) == rows.size()) pick_points(i + 1, need - 1, rows, base);
      rows.pop_back();
    }
  };
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    std::size_t nrays = static_cast<std::size_t>(__builtin_popcount(mask));
    if (nrays >= k) continue;
    RationalMatrix rows;
    for (std::size_t r = 0; r < k; ++r) {
      if (!(mask & (1u << r))) continue;
      RationalVector e(k, Rational(0));
      e[r] = 1;
      rows.push_back(std::move(e));
    }
    pick_points(0, k - nrays, rows, nullptr);
  }
  std::sort(out.begin(), out.end(),
            [](const OrthantFacet& a, const OrthantFacet& b) { return a.normal < b.normal; });
  return out;
}

int affine_dimension(const std::vector<LatticePoint>& pts) {
  if (pts.empty()) return -1;
  RationalMatrix rows;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    RationalVector d(pts[0].size());
    for (std::size_t c = 0; c < pts[0].size(); ++c) d[c] = pts[i][c] - pts[0][c];
    rows.push_back(std::move(d));
  }
  return static_cast<int>(rank(rows));
}

namespace {

// Coordinates on which the affine hull of pts projects injectively.
std::vector<std::size_t> injective_coordinates(const std::vector<LatticePoint>& pts) {
  const std::size_t k = pts[0].size();
  RationalMatrix rows;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    RationalVector d(k);
    for (std::size_t c = 0; c < k; ++c) d[c] = pts[i][c] - pts[0][c];
    rows.push_back(std::move(d));
  }
  // pivot columns of the difference matrix
  return rref(rows, k);
}

std::vector<LatticePoint> project(const std::vector<LatticePoint>& pts,
                                  const std::vector<std::size_t>& coords) {
  std::vector<LatticePoint> out;
  for (const auto& p : pts) {
    LatticePoint q;
    for (auto c : coords) q.push_back(p[c]);
    out.push_back(std::move(q));
  }
  return out;
}

// Facets of a full-dimensional point set in Z^d, as index sets.
std::vector<std::vector<std::size_t>> bounded_facets(const std::vector<LatticePoint>& pts) {
  const std::size_t d = pts[0].size();
  std::set<std::vector<std::size_t>> found;
  if (d == 1) {
    std::size_t lo = 0, hi = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (pts[i][0] < pts[lo][0]) lo = i;
      if (pts[i][0] > pts[hi][0]) hi = i;
    }
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> a, b;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (pts[i][0] == pts[lo][0]) a.push_back(i);
      if (pts[i][0] == pts[hi][0]) b.push_back(i);
    }
    return {a, b};
  }
  std::vector<std::size_t> idx;
  std::function<void(std::size_t, RationalMatrix&)> rec = [&](std::size_t start, RationalMatrix& rows) {
    if (idx.size() == d) {
      RationalMatrix ns = nullspace(rows, d);
      if (ns.size() != 1) return;
      LatticePoint nrm = primitive(ns[0]);
      long base = dot(nrm, pts[idx[0]]);
      bool pos = false, neg = false;
      std::vector<std::size_t> on;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        long v = dot(nrm, pts[i]) - base;
        if (v > 0) pos = true;
        else if (v < 0) neg = true;
        else on.push_back(i);
      }
      if (pos && neg) return;
      found.insert(on);
      return;
    }
    for (std::size_t i = start; i < pts.size(); ++i) {
      if (idx.empty()) {
        idx.push_back(i);
        rec(i + 1, rows);
        idx.pop_back();
        continue;
      }
      RationalVector diff(d);
      for (std::size_t c = 0; c < d; ++c) diff[c] = pts[i][c] - pts[idx[0]][c];
      rows.push_back(std::move(diff));
      if (rank(rows) == rows.size()) {
        idx.push_back(i);
        rec(i + 1, rows);
        idx.pop_back();
      }
      rows.pop_back();
    }
  };
  RationalMatrix rows;
  rec(0, rows);
  return {found.begin(), found.end()};
}

// Pulling triangulation of conv(pts); each simplex is a list of dim+1 points.
void triangulate(const std::vector<LatticePoint>& pts, std::vector<std::vector<LatticePoint>>& out) {
  int dim = affine_dimension(pts);
  if (dim <= 0) {
    out.push_back({pts[0]});
    return;
  }
  std::vector<LatticePoint> local = project(pts, injective_coordinates(pts));
  const LatticePoint& apex = pts[0];
  for (const auto& facet : bounded_facets(local)) {
    if (std::find(facet.begin(), facet.end(), std::size_t{0}) != facet.end()) continue;
    std::vector<LatticePoint> sub;
    for (auto i : facet) sub.push_back(pts[i]);
    std::vector<std::vector<LatticePoint>> pieces;
    triangulate(sub, pieces);
    for (auto& s : pieces) {
      s.push_back(apex);
      out.push_back(std::move(s));
    }
  }
}

}  // namespace

mpz_class normalized_volume(const std::vector<LatticePoint>& pts) {
  if (pts.empty()) return 0;
  const std::size_t k = pts[0].size();
  std::set<LatticePoint> uniq(pts.begin(), pts.end());
  std::vector<LatticePoint> u(uniq.begin(), uniq.end());
  if (affine_dimension(u) < static_cast<int>(k)) return 0;
  std::vector<std::vector<LatticePoint>> simplices;
  triangulate(u, simplices);
  mpz_class total = 0;
  for (const auto& s : simplices) {
    RationalMatrix m;
    for (std::size_t i = 1; i < s.size(); ++i) {
      RationalVector row(k);
      for (std::size_t c = 0; c < k; ++c) row[c] = s[i][c] - s[0][c];
      m.push_back(std::move(row));
    }
    Rational d = determinant(m);
    total += Rational(abs(d)).get_num();
  }
  return total;
}

mpz_class normalized_volume_with_origin(const std::vector<LatticePoint>& pts) {
  if (pts.empty()) return 0;
  std::vector<LatticePoint> all = pts;
  all.emplace(all.begin(), LatticePoint(pts[0].size(), 0));
  return normalized_volume(all);
}

}  // namespace mixed_milnor
