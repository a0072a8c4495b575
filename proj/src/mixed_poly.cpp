#include "mixed_milnor/mixed_poly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "mixed_milnor/error.hpp"

namespace mixed_milnor {

Exponents MixedMonomial::support() const {
  Exponents s(nu.size());
  for (std::size_t k = 0; k < nu.size(); ++k) s[k] = nu[k] + mu[k];
  return s;
}

int MixedMonomial::total_degree() const {
  return std::accumulate(nu.begin(), nu.end(), 0) + std::accumulate(mu.begin(), mu.end(), 0);
}

bool MonomialOrder::operator()(const MixedMonomial& a, const MixedMonomial& b) const {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  Exponents sa = a.support(), sb = b.support();
  if (sa != sb) return sa > sb;
  if (a.nu != b.nu) return a.nu > b.nu;
  return false;
}

MixedPoly::MixedPoly(std::size_t n) : n_(n) {
  if (n == 0) throw Error(ErrorCode::DimensionMismatch, "polynomial needs at least one variable");
}

MixedPoly MixedPoly::constant(std::size_t n, const GaussianRational& c) {
  MixedPoly p(n);
  p.add_term({Exponents(n, 0), Exponents(n, 0)}, c);
  return p;
}

MixedPoly MixedPoly::variable(std::size_t n, std::size_t j) {
  if (j >= n) throw Error(ErrorCode::IndexOutOfRange, "variable index out of range");
  Exponents nu(n, 0);
  nu[j] = 1;
  return monomial(n, nu, Exponents(n, 0));
}

MixedPoly MixedPoly::conj_variable(std::size_t n, std::size_t j) {
  if (j >= n) throw Error(ErrorCode::IndexOutOfRange, "variable index out of range");
  Exponents mu(n, 0);
  mu[j] = 1;
  return monomial(n, Exponents(n, 0), mu);
}

MixedPoly MixedPoly::monomial(std::size_t n, Exponents nu, Exponents mu,
                              const GaussianRational& c) {
  MixedPoly p(n);
  p.add_term({std::move(nu), std::move(mu)}, c);
  return p;
}

void MixedPoly::add_term(const MixedMonomial& m, const GaussianRational& c) {
  if (m.nu.size() != n_ || m.mu.size() != n_)
    throw Error(ErrorCode::DimensionMismatch, "monomial length does not match variable count");
  for (std::size_t k = 0; k < n_; ++k)
    if (m.nu[k] < 0 || m.mu[k] < 0)
      throw Error(ErrorCode::DimensionMismatch, "negative exponent");
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

bool MixedPoly::is_real_valued() const { return conjugate(*this) == *this; }

bool MixedPoly::is_holomorphic() const {
  for (const auto& [m, c] : terms_)
    for (int e : m.mu)
      if (e != 0) return false;
  return true;
}

int MixedPoly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

const GaussianRational* MixedPoly::coefficient(const MixedMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? nullptr : &it->second;
}

MixedPoly MixedPoly::embedded(std::size_t m, std::size_t offset) const {
  if (m < n_ + offset) throw Error(ErrorCode::DimensionMismatch, "cannot embed into fewer variables");
  MixedPoly out(m);
  for (const auto& [mono, c] : terms_) {
    MixedMonomial e{Exponents(m, 0), Exponents(m, 0)};
    std::copy(mono.nu.begin(), mono.nu.end(), e.nu.begin() + offset);
    std::copy(mono.mu.begin(), mono.mu.end(), e.mu.begin() + offset);
    out.terms_.emplace(std::move(e), c);
  }
  return out;
}

MixedPoly& MixedPoly::operator+=(const MixedPoly& o) {
  if (o.n_ != n_) throw Error(ErrorCode::DimensionMismatch, "variable counts differ");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MixedPoly& MixedPoly::operator-=(const MixedPoly& o) {
  if (o.n_ != n_) throw Error(ErrorCode::DimensionMismatch, "variable counts differ");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MixedPoly& MixedPoly::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MixedPoly MixedPoly::operator-() const {
  MixedPoly r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

MixedPoly operator*(const MixedPoly& a, const MixedPoly& b) {
  if (a.n_ != b.n_) throw Error(ErrorCode::DimensionMismatch, "variable counts differ");
  MixedPoly r(a.n_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      MixedMonomial m{ma.nu, ma.mu};
      for (std::size_t k = 0; k < a.n_; ++k) {
        m.nu[k] += mb.nu[k];
        m.mu[k] += mb.mu[k];
      }
      r.add_term(m, ca * cb);
    }
  return r;
}

MixedPoly MixedPoly::pow(unsigned e) const {
  MixedPoly result = constant(n_, GaussianRational(1));
  MixedPoly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

MixedPoly conjugate(const MixedPoly& f) {
  MixedPoly r(f.num_vars());
  for (const auto& [m, c] : f.terms()) r.add_term({m.mu, m.nu}, c.conj());
  return r;
}

RealImagParts real_imag_parts(const MixedPoly& f) {
  MixedPoly cf = conjugate(f);
  GaussianRational half(Rational(1, 2));
  GaussianRational minus_half_i(Rational(0), Rational(-1, 2));  // 1/(2i)
  return {(f + cf) * half, (f - cf) * minus_half_i};
}

MixedPoly restrict_to(const MixedPoly& f, std::span<const std::size_t> subset) {
  std::vector<bool> keep(f.num_vars(), false);
  for (std::size_t k : subset) {
    if (k >= f.num_vars()) throw Error(ErrorCode::IndexOutOfRange, "subset index out of range");
    keep[k] = true;
  }
  MixedPoly r(f.num_vars());
  for (const auto& [m, c] : f.terms()) {
    bool ok = true;
    for (std::size_t k = 0; k < f.num_vars() && ok; ++k)
      if (!keep[k] && (m.nu[k] != 0 || m.mu[k] != 0)) ok = false;
    if (ok) r.add_term(m, c);
  }
  return r;
}

MixedPoly wirtinger(const MixedPoly& f, std::size_t j, WirtingerKind kind) {
  if (j >= f.num_vars()) throw Error(ErrorCode::IndexOutOfRange, "derivative index out of range");
  MixedPoly r(f.num_vars());
  for (const auto& [m, c] : f.terms()) {
    MixedMonomial d = m;
    int& e = kind == WirtingerKind::Z ? d.nu[j] : d.mu[j];
    if (e == 0) continue;
    GaussianRational k(static_cast<long>(e));
    --e;
    r.add_term(d, c * k);
  }
  return r;
}

std::vector<MixedPoly> wirtinger_gradient(const MixedPoly& f, WirtingerKind kind) {
  std::vector<MixedPoly> g;
  g.reserve(f.num_vars());
  for (std::size_t j = 0; j < f.num_vars(); ++j) g.push_back(wirtinger(f, j, kind));
  return g;
}

MixedPoly imaginary_part(const MixedPoly& q) {
  return (q - conjugate(q)) * GaussianRational(Rational(0), Rational(-1, 2));
}

void require_finite(std::span<const std::complex<double>> p) {
  for (const auto& z : p)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw Error(ErrorCode::BadRequest, "point has non-finite coordinates");
}

namespace {

template <typename T>
std::complex<T> ipow(std::complex<T> z, int e) {
  std::complex<T> r(1);
  while (e > 0) {
    if (e & 1) r *= z;
    e >>= 1;
    if (e) z *= z;
  }
  return r;
}

template <typename T>
T ipow(T x, int e) {
  T r(1);
  while (e > 0) {
    if (e & 1) r *= x;
    e >>= 1;
    if (e) x *= x;
  }
  return r;
}

template <typename T>
std::complex<T> monomial_value(const Exponents& nu, const Exponents& mu,
                               std::span<const std::complex<T>> p) {
  std::complex<T> v(1);
  for (std::size_t k = 0; k < nu.size(); ++k) {
    if (nu[k]) v *= ipow(p[k], nu[k]);
    if (mu[k]) v *= ipow(std::conj(p[k]), mu[k]);
  }
  return v;
}

void check_dim(const MixedPoly& f, std::size_t m) {
  if (m != f.num_vars()) throw Error(ErrorCode::DimensionMismatch, "point dimension does not match polynomial");
}

}  // namespace

template <typename T>
std::complex<T> evaluate(const MixedPoly& f, std::span<const std::complex<T>> p) {
  check_dim(f, p.size());
  std::complex<T> s(0);
  for (const auto& [m, c] : f.terms()) s += c.template to_complex_as<T>() * monomial_value<T>(m.nu, m.mu, p);
  return s;
}

template <typename T>
void gradients(const MixedPoly& f, std::span<const std::complex<T>> p,
               std::vector<std::complex<T>>& d_z, std::vector<std::complex<T>>& d_zbar) {
  check_dim(f, p.size());
  const std::size_t n = f.num_vars();
  d_z.assign(n, std::complex<T>(0));
  d_zbar.assign(n, std::complex<T>(0));
  for (const auto& [m, c] : f.terms()) {
    std::complex<T> cc = c.template to_complex_as<T>();
    for (std::size_t j = 0; j < n; ++j) {
      if (m.nu[j]) {
        Exponents nu = m.nu;
        --nu[j];
        d_z[j] += cc * static_cast<T>(m.nu[j]) * monomial_value<T>(nu, m.mu, p);
      }
      if (m.mu[j]) {
        Exponents mu = m.mu;
        --mu[j];
        d_zbar[j] += cc * static_cast<T>(m.mu[j]) * monomial_value<T>(m.nu, mu, p);
      }
    }
  }
}

template <typename T>
std::vector<T> gradient_scale(const MixedPoly& f, std::span<const std::complex<T>> p) {
  check_dim(f, p.size());
  const std::size_t n = f.num_vars();
  std::vector<T> abs_p(n);
  for (std::size_t k = 0; k < n; ++k) abs_p[k] = std::abs(p[k]);
  std::vector<T> s(n, T(0));
  for (const auto& [m, c] : f.terms()) {
    T ac = std::abs(c.template to_complex_as<T>());
    Exponents e = m.support();
    for (std::size_t j = 0; j < n; ++j) {
      if (!e[j]) continue;
      T v = ac * static_cast<T>(e[j]);
      for (std::size_t k = 0; k < n; ++k) v *= ipow(abs_p[k], k == j ? e[k] - 1 : e[k]);
      s[j] += v;
    }
  }
  return s;
}

template std::complex<double> evaluate<double>(const MixedPoly&, std::span<const std::complex<double>>);
template std::complex<long double> evaluate<long double>(const MixedPoly&,
                                                         std::span<const std::complex<long double>>);
template void gradients<double>(const MixedPoly&, std::span<const std::complex<double>>,
                                std::vector<std::complex<double>>&, std::vector<std::complex<double>>&);
template void gradients<long double>(const MixedPoly&, std::span<const std::complex<long double>>,
                                     std::vector<std::complex<long double>>&,
                                     std::vector<std::complex<long double>>&);
template std::vector<double> gradient_scale<double>(const MixedPoly&, std::span<const std::complex<double>>);
template std::vector<long double> gradient_scale<long double>(const MixedPoly&,
                                                              std::span<const std::complex<long double>>);

GradientPair gradients(const MixedPoly& f, const ComplexPoint& p) {
  GradientPair g;
  gradients<double>(f, std::span<const std::complex<double>>(p), g.d_z, g.d_zbar);
  return g;
}

namespace {

std::string monomial_text(const MixedMonomial& m) {
  std::string out;
  auto append = [&out](const std::string& piece) {
    if (!out.empty()) out += '*';
    out += piece;
  };
  for (std::size_t k = 0; k < m.nu.size(); ++k) {
    std::string idx = std::to_string(k + 1);
    int a = m.nu[k], b = m.mu[k];
    if (a == b && a > 0) {
      append("|z" + idx + "|^" + std::to_string(2 * a));
      continue;
    }
    if (a > 0) append("z" + idx + (a > 1 ? "^" + std::to_string(a) : ""));
    if (b > 0) append("zb" + idx + (b > 1 ? "^" + std::to_string(b) : ""));
  }
  return out;
}

}  // namespace

std::string to_string(const MixedPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    std::string mono = monomial_text(m);
    std::string coef;
    bool negative = false;
    if (c.is_real() || sgn(c.re()) == 0) {
      const Rational& r = c.is_real() ? c.re() : c.im();
      negative = sgn(r) < 0;
      Rational a = abs(r);
      std::string unit = c.is_real() ? "" : "i";
      if (a == 1 && (!mono.empty() || !unit.empty())) {
        coef = unit;
      } else {
        coef = a.get_str() + unit;
      }
    } else {
      coef = c.to_string();
    }
    std::string term;
    if (coef.empty()) {
      term = mono;
    } else if (mono.empty()) {
      term = coef;
    } else {
      term = coef + "*" + mono;
    }
    if (first) {
      out = (negative ? "-" : "") + term;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

}  // namespace mixed_milnor
