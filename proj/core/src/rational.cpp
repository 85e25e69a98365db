#include "lvoa/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace lvoa {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const RVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

Rational parse_rational(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string s(text.substr(b, e - b));
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  auto check_digits = [&](const std::string& part, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i >= part.size()) throw std::invalid_argument("malformed rational literal '" + s + "'");
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i])))
        throw std::invalid_argument("malformed rational literal '" + s + "'");
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  check_digits(num, true);
  check_digits(den, false);
  if (num[0] == '+') num = num.substr(1);
  Integer n(num), d(den);
  if (d == 0) throw std::invalid_argument("rational literal with zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

long to_long(const Rational& q) {
  if (!is_integer(q) || !q.get_num().fits_slong_p())
    throw std::domain_error("value " + to_string(q) + " is not a machine integer");
  return q.get_num().get_si();
}

Rational factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return Rational(r);
}

Integer lcm_of(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

RVec zeros(std::size_t n) { return RVec(n, Rational(0)); }

RVec unit_vector(std::size_t n, std::size_t i) {
  RVec v = zeros(n);
  v.at(i) = 1;
  return v;
}

RVec operator+(const RVec& a, const RVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  RVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RVec operator-(const RVec& a, const RVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  RVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RVec operator-(const RVec& a) {
  RVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

RVec operator*(const Rational& s, const RVec& a) {
  RVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

bool is_zero(const RVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool is_integral(const RVec& v) {
  for (const auto& x : v)
    if (!is_integer(x)) return false;
  return true;
}

bool lex_less(const RVec& a, const RVec& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

RVec to_rvec(const IVec& v) {
  RVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i];
  return r;
}

RMat to_rmat(const IMat& m) {
  RMat r;
  r.reserve(m.size());
  for (const auto& row : m) r.push_back(to_rvec(row));
  return r;
}

}  // namespace lvoa
