#include "mixed_milnor/local_search.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Dense>

namespace mixed_milnor {

template <typename T>
T masked_criticality_residual(const MixedPoly& f, std::span<const std::complex<T>> p,
                              const std::vector<bool>& active) {
  std::vector<std::complex<T>> dz, dzb;
  gradients<T>(f, p, dz, dzb);
  std::vector<T> s = gradient_scale<T>(f, p);
  T a2 = 0, b2 = 0;
  std::complex<T> ip(0);
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (!active[j] || !(s[j] > 0)) continue;
    std::complex<T> v = std::conj(dz[j]) / s[j];
    std::complex<T> w = dzb[j] / s[j];
    a2 += std::norm(v);
    b2 += std::norm(w);
    ip += v * std::conj(w);
  }
  T a = std::sqrt(a2), b = std::sqrt(b2), c = std::abs(ip);
  T num = (a - b) * (a - b) + (a * b - c) * (a * b - c);
  T den = (1 + a2 + b2) * (1 + a2 + b2);
  return num / den;
}

template double masked_criticality_residual<double>(const MixedPoly&, std::span<const std::complex<double>>,
                                                    const std::vector<bool>&);
template long double masked_criticality_residual<long double>(const MixedPoly&,
                                                              std::span<const std::complex<long double>>,
                                                              const std::vector<bool>&);

std::vector<double> levenberg_marquardt(const ResidualFn& r, std::vector<double> x, int max_iterations,
                                        const std::function<void(std::vector<double>&)>& project,
                                        int* evaluations) {
  const std::size_t m = x.size();
  int evals = 0;
  auto eval = [&](const std::vector<double>& y) {
    ++evals;
    return r(y);
  };
  std::vector<double> res = eval(x);
  auto cost_of = [](const std::vector<double>& v) {
    double c = 0;
    for (double e : v) c += e * e;
    return c;
  };
  double cost = cost_of(res);
  double lambda = 1e-3;
  for (int it = 0; it < max_iterations && cost > 1e-30; ++it) {
    const std::size_t k = res.size();
    Eigen::MatrixXd J(k, m);
    for (std::size_t c = 0; c < m; ++c) {
      const double h = 1e-6 * std::max(1.0, std::abs(x[c]));
      std::vector<double> xp = x, xm = x;
      xp[c] += h;
      xm[c] -= h;
      std::vector<double> rp = eval(xp), rm = eval(xm);
      for (std::size_t i = 0; i < k; ++i) J(i, c) = (rp[i] - rm[i]) / (2 * h);
    }
    Eigen::VectorXd rv = Eigen::Map<Eigen::VectorXd>(res.data(), k);
    Eigen::MatrixXd A = J.transpose() * J;
    Eigen::VectorXd g = J.transpose() * rv;
    bool improved = false;
    for (int tries = 0; tries < 12 && !improved; ++tries) {
      Eigen::MatrixXd M = A;
      for (std::size_t c = 0; c < m; ++c) M(c, c) += lambda * (A(c, c) + 1e-12);
      Eigen::VectorXd step = M.ldlt().solve(-g);
      if (!step.allFinite()) {
        lambda *= 10;
        continue;
      }
      std::vector<double> xn = x;
      for (std::size_t c = 0; c < m; ++c) xn[c] += step(c);
      if (project) project(xn);
      std::vector<double> rn = eval(xn);
      double cn = cost_of(rn);
      if (std::isfinite(cn) && cn < cost) {
        x = std::move(xn);
        res = std::move(rn);
        improved = cost - cn > 1e-15 * cost || cn < 1e-30;
        cost = cn;
        lambda = std::max(lambda / 5, 1e-12);
        if (!improved) break;
      } else {
        lambda *= 10;
      }
    }
    if (!improved) break;
  }
  if (evaluations) *evaluations += evals;
  return x;
}

namespace {

constexpr double kTwoPi = 6.283185307179586;

struct TorusMap {
  std::vector<std::size_t> free;  // indices of free coordinates
  ComplexPoint base;

  ComplexPoint point(const std::vector<double>& x) const {
    ComplexPoint p = base;
    for (std::size_t a = 0; a < free.size(); ++a) p[free[a]] = std::polar(std::exp(x[2 * a]), x[2 * a + 1]);
    return p;
  }
};

}  // namespace

SearchResult search_critical_points(const MixedPoly& f, const std::vector<bool>& free_vars,
                                    const FrozenSampler& prepare, const SearchOptions& opts) {
  const std::size_t n = f.num_vars();
  SearchResult out;
  out.stats.min_residual = std::numeric_limits<double>::infinity();
  TorusMap map;
  for (std::size_t j = 0; j < n; ++j)
    if (free_vars[j]) map.free.push_back(j);
  const std::size_t m = map.free.size();

  for (int restart = 0; restart < opts.budget; ++restart) {
    std::mt19937_64 rng(opts.seed + static_cast<std::uint64_t>(restart));
    std::uniform_real_distribution<double> logmag(-opts.log_box, opts.log_box), angle(0.0, kTwoPi);
    map.base.assign(n, std::complex<double>(1.0, 0.0));
    if (prepare) prepare(rng, map.base);
    std::vector<double> x(2 * m + 1);
    for (std::size_t a = 0; a < m; ++a) {
      x[2 * a] = logmag(rng);
      x[2 * a + 1] = angle(rng);
    }
    x[2 * m] = angle(rng);
    ++out.stats.restarts;

    auto residual = [&](const std::vector<double>& y) {
      ComplexPoint p = map.point(y);
      GradientPair g = gradients(f, p);
      std::vector<double> s = gradient_scale<double>(f, std::span<const std::complex<double>>(p));
      std::complex<double> alpha = std::polar(1.0, y[2 * m]);
      std::vector<double> r;
      r.reserve(2 * m);
      for (std::size_t j : map.free) {
        if (!(s[j] > 0)) {
          r.push_back(0);
          r.push_back(0);
          continue;
        }
        std::complex<double> d = (std::conj(g.d_z[j]) - alpha * g.d_zbar[j]) / s[j];
        r.push_back(d.real());
        r.push_back(d.imag());
      }
      return r;
    };
    auto project = [&](std::vector<double>& y) {
      for (std::size_t a = 0; a < m; ++a) y[2 * a] = std::clamp(y[2 * a], -opts.log_clamp, opts.log_clamp);
    };
    int evals = 0;
    x = levenberg_marquardt(residual, x, opts.max_iterations, project, &evals);
    // one unregularised polish step
    x = levenberg_marquardt(residual, x, 1, project, &evals);
    out.stats.samples += evals;

    ComplexPoint p = map.point(x);
    double R = masked_criticality_residual<double>(f, std::span<const std::complex<double>>(p), free_vars);
    ++out.stats.samples;
    if (!std::isfinite(R)) continue;
    out.stats.min_residual = std::min(out.stats.min_residual, R);
    bool inside = true;
    for (std::size_t a = 0; a < m; ++a) inside &= std::abs(x[2 * a]) < opts.log_clamp;
    if (R < opts.threshold && inside) {
      std::vector<std::complex<long double>> pl(p.begin(), p.end());
      long double Rl = masked_criticality_residual<long double>(
          f, std::span<const std::complex<long double>>(pl), free_vars);
      if (Rl < opts.threshold) {
        out.witness = p;
        out.witness_residual = static_cast<double>(Rl);
        out.stats.min_residual = std::min(out.stats.min_residual, out.witness_residual);
        return out;
      }
    }
  }
  return out;
}

}  // namespace mixed_milnor

namespace mixed_milnor {

double span_residual(const std::vector<std::complex<double>>& t, const std::vector<std::complex<double>>& u1,
                     const std::vector<std::complex<double>>& u2) {
  auto re_dot = [](const std::vector<std::complex<double>>& x, const std::vector<std::complex<double>>& y) {
    double s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) s += (x[j] * std::conj(y[j])).real();
    return s;
  };
  Eigen::Matrix2d G;
  G << re_dot(u1, u1), re_dot(u1, u2), re_dot(u2, u1), re_dot(u2, u2);
  Eigen::Vector2d b(re_dot(t, u1), re_dot(t, u2));
  // pseudo-inverse handles dependent or vanishing spanning vectors
  Eigen::JacobiSVD<Eigen::Matrix2d> svd(G, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Vector2d sv = svd.singularValues();
  double tol = 1e-14 * std::max(1.0, sv(0));
  Eigen::Vector2d inv;
  for (int i = 0; i < 2; ++i) inv(i) = sv(i) > tol ? 1.0 / sv(i) : 0.0;
  Eigen::Vector2d coef = svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose() * b;
  double r2 = 0;
  for (std::size_t j = 0; j < t.size(); ++j) r2 += std::norm(t[j] - coef(0) * u1[j] - coef(1) * u2[j]);
  return std::sqrt(r2);
}

}  // namespace mixed_milnor
