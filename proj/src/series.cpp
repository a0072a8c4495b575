#include "mixed_milnor/series.hpp"

#include <algorithm>

namespace mixed_milnor {

Series Series::constant(const GaussianRational& c) { return monomial(0, c); }

Series Series::monomial(long e, const GaussianRational& c) {
  Series s;
  s.add_term(e, c);
  return s;
}

long Series::order() const {
  if (c_.empty()) return known_ == kExact ? kExact : known_ + 1;
  return c_.begin()->first;
}

GaussianRational Series::coefficient(long e) const {
  auto it = c_.find(e);
  return it == c_.end() ? GaussianRational() : it->second;
}

void Series::add_term(long e, const GaussianRational& c) {
  if (e > known_ || c.is_zero()) return;
  auto it = c_.find(e);
  if (it == c_.end()) {
    c_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) c_.erase(it);
}

Series& Series::truncate(long cap) {
  c_.erase(c_.upper_bound(cap), c_.end());
  known_ = std::min(known_, cap);
  return *this;
}

Series Series::conj() const {
  Series r(known_);
  for (const auto& [e, c] : c_) r.c_.emplace(e, c.conj());
  return r;
}

Series Series::shifted(long by) const {
  Series r(known_ == kExact ? kExact : known_ + by);
  for (const auto& [e, c] : c_) r.c_.emplace(e + by, c);
  return r;
}

Series& Series::operator+=(const Series& o) {
  long k = std::min(known_, o.known_);
  known_ = k;
  c_.erase(c_.upper_bound(k), c_.end());
  for (const auto& [e, c] : o.c_) add_term(e, c);
  return *this;
}

Series& Series::operator-=(const Series& o) {
  long k = std::min(known_, o.known_);
  known_ = k;
  c_.erase(c_.upper_bound(k), c_.end());
  for (const auto& [e, c] : o.c_) add_term(e, -c);
  return *this;
}

Series& Series::operator*=(const GaussianRational& k) {
  if (k.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& [e, c] : c_) c *= k;
  return *this;
}

Series Series::multiply(const Series& a, const Series& b, long cap) {
  // coefficients up to min(Ka + ord b, Kb + ord a) are determined
  auto bound = [](long k, long ord) {
    if (k == kExact) return kExact;
    if (ord == kExact) return kExact;
    return k + ord;
  };
  long known = std::min({bound(a.known_, b.order()), bound(b.known_, a.order()), cap});
  if ((a.c_.empty() && a.known_ == kExact) || (b.c_.empty() && b.known_ == kExact)) return Series();
  Series r(known);
  for (const auto& [ea, ca] : a.c_)
    for (const auto& [eb, cb] : b.c_) {
      if (ea + eb > known) break;
      r.add_term(ea + eb, ca * cb);
    }
  return r;
}

std::string Series::to_string(long denominator) const {
  auto exp_text = [denominator](long e) {
    Rational q(e, denominator);
    q.canonicalize();
    std::string s = q.get_str();
    return q.get_den() == 1 ? s : "(" + s + ")";
  };
  std::string out;
  for (const auto& [e, c] : c_) {
    std::string coef = c.to_string();
    std::string term;
    if (e == 0) {
      term = coef;
    } else {
      std::string tp = e == denominator ? "t" : "t^" + exp_text(e);
      if (c == GaussianRational(1)) term = tp;
      else if (c == GaussianRational(-1)) term = "-" + tp;
      else term = coef + "*" + tp;
    }
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  if (out.empty()) out = "0";
  if (known_ != kExact) out += " + O(t^" + exp_text(known_ + 1) + ")";
  return out;
}

}  // namespace mixed_milnor
