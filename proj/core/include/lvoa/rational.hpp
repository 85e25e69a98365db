#ifndef LVOA_RATIONAL_HPP
#define LVOA_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace lvoa {

using Integer = mpz_class;
using Rational = mpq_class;
using RVec = std::vector<Rational>;
using RMat = std::vector<RVec>;
using IVec = std::vector<long>;
using IMat = std::vector<IVec>;

Rational make_rational(long num, long den = 1);

// Renders as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const RVec& v);

// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);
Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);
long to_long(const Rational& q);  // throws unless q is an integer fitting in long
Rational factorial(unsigned n);
Integer lcm_of(const Integer& a, const Integer& b);

RVec zeros(std::size_t n);
RVec unit_vector(std::size_t n, std::size_t i);
RVec operator+(const RVec& a, const RVec& b);
RVec operator-(const RVec& a, const RVec& b);
RVec operator-(const RVec& a);
RVec operator*(const Rational& s, const RVec& a);
bool is_zero(const RVec& v);
bool is_integral(const RVec& v);

// Lexicographic order, used for canonical sorting of momenta.
bool lex_less(const RVec& a, const RVec& b);

struct RVecLess {
  bool operator()(const RVec& a, const RVec& b) const { return lex_less(a, b); }
};

RVec to_rvec(const IVec& v);
RMat to_rmat(const IMat& m);

}  // namespace lvoa

#endif  // LVOA_RATIONAL_HPP
