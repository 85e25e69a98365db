#include "lvoa/state_expr.hpp"

#include <cctype>

namespace lvoa {

ParseError::ParseError(const std::string& msg, std::size_t pos)
    : std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + msg), pos_(pos) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const ScreeningLattices& sl) : s_(text), sl_(sl), n_(sl.rank()) {}

  FieldElement state() {
    FieldElement e = expr();
    expect_end();
    return e;
  }

  Momentum momentum_only() {
    Momentum m = momentum();
    expect_end();
    return m;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++i_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  void expect_end() {
    skip();
    if (i_ != s_.size()) fail("unexpected trailing input");
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, i_); }

  bool at_digit() {
    skip();
    return i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]));
  }
  bool at_alpha() {
    skip();
    return i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]));
  }

  Integer integer() {
    skip();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected a number");
    return Integer(std::string(s_.substr(start, i_ - start)));
  }

  // p or p/q; a '/' not followed by a digit is left for the caller.
  Rational rational() {
    std::size_t start = i_;
    Integer num = integer();
    std::size_t save = i_;
    if (accept('/')) {
      if (at_digit()) {
        Integer den = integer();
        if (den == 0) {
          i_ = start;
          fail("zero denominator");
        }
        Rational q(num, den);
        q.canonicalize();
        return q;
      }
      i_ = save;
    }
    return Rational(num);
  }

  std::string identifier() {
    skip();
    std::size_t start = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
    if (start == i_) fail("expected a symbol");
    return std::string(s_.substr(start, i_ - start));
  }

  std::size_t index_suffix(const std::string& id, std::size_t start) {
    std::string digits = id.substr(1);
    for (char c : digits)
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        i_ = start;
        fail("unknown symbol '" + id + "'");
      }
    std::size_t k = std::stoul(digits);
    if (k < 1 || k > n_) {
      i_ = start;
      fail("symbol '" + id + "' out of range for rank " + std::to_string(n_));
    }
    return k - 1;
  }

  Momentum symbol() {
    skip();
    std::size_t start = i_;
    std::string id = identifier();
    Momentum m;
    if (id == "a") {
      if (n_ != 1) {
        i_ = start;
        fail("symbol 'a' needs rank one; use a1..a" + std::to_string(n_));
      }
      m = unit_vector(1, 0);
    } else if (id == "Q") {
      m = sl_.Q;
    } else if (id.size() > 1 && id[0] == 'a') {
      m = unit_vector(n_, index_suffix(id, start));
    } else if (id.size() > 1 && id[0] == 'l') {
      m = sl_.basis_dual[index_suffix(id, start)];
    } else {
      i_ = start;
      fail("unknown symbol '" + id + "'");
    }
    std::size_t save = i_;
    if (accept('/')) {
      std::size_t at = i_;
      if (!at_alpha() || identifier() != "sqrtp") {
        i_ = at;
        fail("expected 'sqrtp' after '/'");
      }
    } else {
      i_ = save;
    }
    return m;
  }

  Momentum mterm() {
    Rational c = 1;
    if (at_digit()) {
      c = rational();
      if (!accept('*')) {
        if (at_alpha() || peek('(')) fail("expected '*' between coefficient and symbol");
        return constant_check(c);
      }
    }
    if (accept('(')) {
      Momentum inner = momentum();
      expect(')');
      return c * inner;
    }
    return c * symbol();
  }

  // A bare number is only meaningful as the zero momentum.
  Momentum constant_check(const Rational& c) {
    if (c != 0) fail("bare number in a momentum; only 0 is allowed");
    return zeros(n_);
  }

  Momentum momentum() {
    Momentum m = zeros(n_);
    int sign = 1;
    if (accept('-')) sign = -1;
    else accept('+');
    m = m + Rational(sign) * mterm();
    while (true) {
      if (accept('+')) m = m + mterm();
      else if (accept('-')) m = m - mterm();
      else break;
    }
    return m;
  }

  FieldElement factor() {
    if (accept('-')) return -factor();
    if (accept('(')) {
      FieldElement e = expr();
      expect(')');
      return e;
    }
    if (at_digit()) return FieldElement::scalar(n_, rational());
    std::size_t start = i_;
    std::string id = identifier();
    if (id == "exp") {
      expect('[');
      Momentum m = momentum();
      expect(']');
      return FieldElement::exp(m);
    }
    if (id == "d") {
      int order = 1;
      if (accept('^')) {
        std::size_t at = i_;
        Integer k = integer();
        if (k < 1 || k > 64) {
          i_ = at;
          fail("derivative order must be between 1 and 64");
        }
        order = static_cast<int>(k.get_si());
      }
      std::size_t at = i_;
      if (identifier() != "phi") {
        i_ = at;
        fail("expected 'phi'");
      }
      expect('[');
      Momentum m = momentum();
      expect(']');
      return FieldElement::dphi(order, m);
    }
    i_ = start;
    fail("unknown token '" + id + "'");
  }

  FieldElement term() {
    FieldElement t = factor();
    while (accept('*')) t = t * factor();
    return t;
  }

  FieldElement expr() {
    FieldElement e(n_);
    if (accept('-')) e -= term();
    else {
      accept('+');
      e += term();
    }
    while (true) {
      if (accept('+')) e += term();
      else if (accept('-')) e -= term();
      else break;
    }
    return e;
  }

  std::string_view s_;
  const ScreeningLattices& sl_;
  std::size_t n_;
  std::size_t i_ = 0;
};

}  // namespace

FieldElement parse_state(std::string_view text, const ScreeningLattices& sl) { return Parser(text, sl).state(); }

Momentum parse_momentum(std::string_view text, const ScreeningLattices& sl) {
  return Parser(text, sl).momentum_only();
}

}  // namespace lvoa
