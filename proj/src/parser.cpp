#include "mixed_milnor/parser.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "mixed_milnor/error.hpp"

namespace mixed_milnor {
namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t n) : s_(text), n_(n) {}

  MixedPoly parse() {
    MixedPoly p = expr();
    skip_ws();
    if (pos_ != s_.size()) throw SyntaxError(pos_, "'+', '-', '*' or end of input");
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  int peek() {
    skip_ws();
    return pos_ < s_.size() ? static_cast<unsigned char>(s_[pos_]) : -1;
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!accept(c)) throw SyntaxError(pos_, what);
  }

  // digits only, no sign
  mpz_class natural(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError(pos_, what);
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  // variable indices are read without skipping whitespace after the 'z'
  std::size_t index() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError(pos_, "variable index");
    mpz_class v(std::string(s_.substr(start, pos_ - start)));
    if (v < 1 || v > 64) throw Error(ErrorCode::IndexOutOfRange, "variable index must be in 1..64");
    return v.get_ui();
  }

  unsigned exponent() {
    std::size_t at = pos_;
    mpz_class e = natural("exponent");
    if (e > 1024) throw SyntaxError(at, "exponent at most 1024");
    return static_cast<unsigned>(e.get_ui());
  }

  MixedPoly expr() {
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    MixedPoly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  bool starts_factor() {
    int c = peek();
    return c == '(' || c == 'z' || c == '|' || c == 'i' || (c >= '0' && c <= '9');
  }

  MixedPoly term() {
    MixedPoly acc = factor();
    for (;;) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  MixedPoly factor() {
    bool modulus = false;
    MixedPoly base = atom(modulus);
    bool raised = false;
    while (accept('^')) {
      std::size_t at = pos_;
      unsigned e = exponent();
      if (modulus && !raised) {
        if (e % 2 != 0)
          throw Error(ErrorCode::OddModulusExponent,
                      "|z_k| needs an even exponent (position " + std::to_string(at) + ")");
        e /= 2;
      }
      raised = true;
      base = base.pow(e);
    }
    if (modulus && !raised)
      throw Error(ErrorCode::OddModulusExponent,
                  "|z_k| needs an even exponent (position " + std::to_string(pos_) + ")");
    return base;
  }

  MixedPoly atom(bool& modulus) {
    int c = peek();
    if (c == '(') {
      ++pos_;
      MixedPoly inner = expr();
      expect(')', "')'");
      return inner;
    }
    if (c == 'z') {
      ++pos_;
      bool bar = false;
      if (pos_ < s_.size() && s_[pos_] == 'b') {
        bar = true;
        ++pos_;
      }
      std::size_t k = index() - 1;
      return bar ? MixedPoly::conj_variable(n_, k) : MixedPoly::variable(n_, k);
    }
    if (c == '|') {
      ++pos_;
      expect('z', "'z' after '|'");
      std::size_t k = index() - 1;
      expect('|', "closing '|'");
      modulus = true;
      return MixedPoly::variable(n_, k) * MixedPoly::conj_variable(n_, k);
    }
    if (c == 'i') {
      ++pos_;
      return MixedPoly::constant(n_, GaussianRational::i());
    }
    if (c >= '0' && c <= '9') {
      Rational q(natural("integer"));
      if (accept('/')) {
        std::size_t at = pos_;
        mpz_class den = natural("denominator");
        if (den == 0) throw SyntaxError(at, "nonzero denominator");
        q = Rational(q.get_num(), den);
        q.canonicalize();
      }
      GaussianRational v(q);
      if (accept('i')) v = GaussianRational(Rational(0), q);
      return MixedPoly::constant(n_, v);
    }
    throw SyntaxError(pos_, "coefficient, variable or '('");
  }

  std::string_view s_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

// Largest k in any 'z<k>' or 'zb<k>' token; 0 when none.
std::size_t scan_max_index(std::string_view s) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != 'z') continue;
    std::size_t j = i + 1;
    if (j < s.size() && s[j] == 'b') ++j;
    std::size_t v = 0, start = j;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])) && j - start < 4)
      v = v * 10 + static_cast<std::size_t>(s[j++] - '0');
    if (j > start && v <= 64) best = std::max(best, v);
  }
  return best;
}

}  // namespace

MixedPoly parse_poly(std::string_view text, std::size_t n_hint) {
  std::size_t n = std::max<std::size_t>({n_hint, scan_max_index(text), 1});
  return Parser(text, n).parse();
}

}  // namespace mixed_milnor
