#include "mixed_milnor/constructors.hpp"

#include "mixed_milnor/error.hpp"

namespace mixed_milnor {

namespace {

void check_spec(const PullbackSpec& s, std::size_t n) {
  if (s.a.size() != n || s.b.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "pullback spec length does not match variable count");
  for (std::size_t j = 0; j < n; ++j)
    if (!(s.a[j] > s.b[j] && s.b[j] >= 0))
      throw Error(ErrorCode::BadParams, "pullback spec needs a_j > b_j >= 0");
}

}  // namespace

MixedPoly pullback_cyclic(const MixedPoly& f, const PullbackSpec& spec) {
  const std::size_t n = f.num_vars();
  check_spec(spec, n);
  MixedPoly out(n);
  for (const auto& [m, c] : f.terms()) {
    MixedMonomial t{Exponents(n), Exponents(n)};
    for (std::size_t j = 0; j < n; ++j) {
      t.nu[j] = spec.a[j] * m.nu[j] + spec.b[j] * m.mu[j];
      t.mu[j] = spec.b[j] * m.nu[j] + spec.a[j] * m.mu[j];
    }
    out.add_term(t, c);
  }
  return out;
}

PullbackSpec compose(const PullbackSpec& s1, const PullbackSpec& s2) {
  if (s1.a.size() != s2.a.size()) throw Error(ErrorCode::DimensionMismatch, "spec lengths differ");
  PullbackSpec r;
  for (std::size_t j = 0; j < s1.a.size(); ++j) {
    r.a.push_back(s1.a[j] * s2.a[j] + s1.b[j] * s2.b[j]);
    r.b.push_back(s1.a[j] * s2.b[j] + s1.b[j] * s2.a[j]);
  }
  return r;
}

JoinResult join(const MixedPoly& f1, const MixedPoly& f2) {
  if (f1.is_zero() || f2.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "join needs nonzero summands");
  const std::size_t n = f1.num_vars(), m = f2.num_vars();
  JoinResult r{f1.embedded(n + m, 0) + f2.embedded(n + m, n), {}};
  for (std::size_t j = 0; j < n; ++j) r.names.push_back("f1.z" + std::to_string(j + 1));
  for (std::size_t j = 0; j < m; ++j) r.names.push_back("f2.z" + std::to_string(j + 1));
  return r;
}

namespace {

MixedPoly mono(std::size_t n, std::vector<std::pair<std::size_t, std::pair<int, int>>> parts, long c = 1) {
  Exponents nu(n, 0), mu(n, 0);
  for (auto& [k, e] : parts) {
    nu[k] += e.first;
    mu[k] += e.second;
  }
  return MixedPoly::monomial(n, nu, mu, GaussianRational(c));
}

void need(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::BadParams, what);
}

}  // namespace

std::vector<std::string> corpus_names() {
  return {"brieskorn_curve", "cone", "cyclic", "d_n", "fig1", "parusinski", "tibar", "tibar_a"};
}

CorpusEntry corpus(std::string_view name, const std::vector<int>& params) {
  if (name == "fig1") {
    need(params.empty(), "fig1 takes no parameters");
    return {mono(3, {{0, {3, 0}}}) + mono(3, {{1, {3, 0}}}) + mono(3, {{1, {1, 0}}, {2, {2, 0}}}),
            "holomorphic example with an essential non-compact face: z1^3 + z2^3 + z2*z3^2"};
  }
  if (name == "tibar" || name == "tibar_a") {
    int a = 1;
    if (name == "tibar") {
      need(params.empty(), "tibar takes no parameters");
    } else {
      need(params.size() == 1 && params[0] >= 1, "tibar_a needs one parameter a >= 1");
      a = params[0];
    }
    return {mono(2, {{0, {1, 0}}, {1, {a, 1}}}),
            name == "tibar" ? "Tibar's example z1*|z2|^2, a rotating axis"
                            : "modified Tibar example z1*z2^a*zb2"};
  }
  if (name == "parusinski") {
    need(params.empty(), "parusinski takes no parameters");
    // z1 (z2 + z3^2) zb2
    return {mono(3, {{0, {1, 0}}, {1, {1, 1}}}) + mono(3, {{0, {1, 0}}, {1, {0, 1}}, {2, {2, 0}}}),
            "Parusinski's example z1*(z2 + z3^2)*zb2"};
  }
  if (name == "cone") {
    need(params.size() >= 3, "cone needs m, n, a1..an");
    int m = params[0], n = params[1];
    need(n >= 2 && m >= 1 && m < n, "cone needs 1 <= m < n");
    need(static_cast<int>(params.size()) == n + 2, "cone needs exactly n exponents");
    MixedPoly k(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      int a = params[2 + i];
      need(a >= 1, "cone exponents must be positive");
      k += mono(n, {{static_cast<std::size_t>(i), {a, a}}}, i < m ? 1 : -1);
    }
    return {MixedPoly::variable(n, 0) * k, "cone example z1*k(z) with k = sum |zi|^2ai - sum |zj|^2aj"};
  }
  if (name == "cyclic") {
    need(params.size() >= 2, "cyclic needs at least two exponents");
    const std::size_t n = params.size();
    MixedPoly f(n);
    for (std::size_t k = 0; k < n; ++k) {
      need(params[k] >= 2, "cyclic needs every a_k >= 2");
      f += mono(n, {{k, {params[k], 0}}, {(k + 1) % n, {0, 1}}});
    }
    return {f, "cyclic polynomial z1^a1*zb2 + ... + zn^an*zb1"};
  }
  if (name == "brieskorn_curve") {
    need(params.empty(), "brieskorn_curve takes no parameters");
    MixedPoly pre = mono(2, {{0, {2, 0}}, {1, {2, 0}}});
    MixedPoly u = mono(2, {{0, {6, 3}}}) + mono(2, {{1, {4, 2}}});
    MixedPoly v = mono(2, {{0, {4, 2}}}) + mono(2, {{1, {6, 3}}});
    return {pre * u * v, "strongly polar curve z1^2 z2^2 (z1^6 zb1^3 + z2^4 zb2^2)(z1^4 zb1^2 + z2^6 zb2^3)"};
  }
  if (name == "d_n") {
    need(params.size() == 1 && params[0] >= 4, "d_n needs one parameter n >= 4");
    int n = params[0];
    return {mono(3, {{0, {2, 0}}}) + mono(3, {{1, {2, 0}}, {2, {1, 0}}}) + mono(3, {{2, {n - 1, 0}}}),
            "D_n singularity z1^2 + z2^2*z3 + z3^(n-1)"};
  }
  throw Error(ErrorCode::UnknownName, "unknown corpus entry '" + std::string(name) + "'");
}

}  // namespace mixed_milnor
