#ifndef LVOA_FREEFIELD_HPP
#define LVOA_FREEFIELD_HPP

// Differential polynomials times exponentials, u e^{phi_lambda}, as a graded
// commutative Hopf algebra with a Laurent-valued pairing.
//
// A monomial is a multiset of factors d^m phi_{e_i}, where e_i = alpha_i / sqrt(p)
// is the ambient basis. The degree of d^m phi is m.

#include "lvoa/lattice.hpp"

#include <complex>
#include <map>
#include <string>

namespace lvoa {

struct Factor {
  int index = 0;  // ambient basis vector e_index (0-based)
  int order = 1;  // number of derivatives, >= 1
  auto operator<=>(const Factor&) const = default;
};

using Monomial = std::vector<Factor>;  // sorted multiset

int degree(const Monomial& u);

struct TermKey {
  Momentum momentum;
  Monomial monomial;

  bool operator<(const TermKey& o) const;
  bool operator==(const TermKey& o) const { return momentum == o.momentum && monomial == o.monomial; }
};

class FieldElement {
 public:
  using TermMap = std::map<TermKey, Rational>;

  explicit FieldElement(std::size_t rank = 0) : rank_(rank) {}

  static FieldElement exp(const Momentum& lambda);
  static FieldElement vacuum(std::size_t rank);
  static FieldElement scalar(std::size_t rank, const Rational& c);
  // d^order phi_beta, expanded over the ambient basis.
  static FieldElement dphi(int order, const Momentum& beta);
  static FieldElement term(const TermKey& key, const Rational& c = 1);

  std::size_t rank() const { return rank_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const TermKey& key) const;

  void add_term(const TermKey& key, const Rational& c);

  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const Rational& c);
  bool operator==(const FieldElement& o) const { return rank_ == o.rank_ && terms_ == o.terms_; }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  // Distinct momenta occurring, sorted.
  std::vector<Momentum> momenta() const;
  // Throws unless all terms carry the same momentum.
  const Momentum& single_momentum() const;

 private:
  std::size_t rank_;
  TermMap terms_;
};

FieldElement operator+(FieldElement a, const FieldElement& b);
FieldElement operator-(FieldElement a, const FieldElement& b);
FieldElement operator-(FieldElement a);
FieldElement operator*(const Rational& c, FieldElement a);

Monomial merge(const Monomial& a, const Monomial& b);
TermKey multiply_keys(const TermKey& a, const TermKey& b);
FieldElement multiply(const FieldElement& a, const FieldElement& b);
FieldElement operator*(const FieldElement& a, const FieldElement& b);

FieldElement derive(const FieldElement& a);
FieldElement derive(const FieldElement& a, int times);

// Formal sum of tensors x (1) y.
struct TensorElement {
  std::map<std::pair<TermKey, TermKey>, Rational> terms;

  void add(const TermKey& a, const TermKey& b, const Rational& c);
  bool operator==(const TensorElement& o) const { return terms == o.terms; }
};

TensorElement coproduct(const FieldElement& a);
TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b);

// Scalar tiers: exact rational, exact rational times e^{i pi r}, or complex double.
class Scalar {
 public:
  enum class Tier { Rational, Phase, Complex };

  Scalar() = default;
  Scalar(const Rational& q) : q_(q) {}  // NOLINT(google-explicit-constructor)
  static Scalar phase(const Rational& q, const Rational& r);
  static Scalar complex(std::complex<double> c);

  Tier tier() const { return tier_; }
  const Rational& magnitude() const { return q_; }
  const Rational& phase_exponent() const { return r_; }
  std::complex<double> to_complex() const;
  bool is_zero() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  bool operator==(const Scalar& o) const;

 private:
  void normalize();

  Tier tier_ = Tier::Rational;
  Rational q_ = 0;
  Rational r_ = 0;  // phase exponent in [0, 1), sign absorbed into q_
  std::complex<double> c_{};
};

class FracLaurent {
 public:
  void add(const Rational& exponent, const Scalar& c);
  const std::map<Rational, Scalar>& coefficients() const { return coeffs_; }
  Scalar coefficient(const Rational& exponent) const;
  bool operator==(const FracLaurent& o) const { return coeffs_ == o.coeffs_; }
  FracLaurent d_dz() const;
  FracLaurent operator-() const;

 private:
  std::map<Rational, Scalar> coeffs_;
};

std::string to_string(const FracLaurent& f);

// Single-term pairing <u e^alpha, v e^beta> = weight * z^{(alpha,beta) - |u| - |v|}.
struct PairingTerm {
  Rational exponent;
  Rational weight;
};
PairingTerm pair_terms(const Ambient& amb, const TermKey& a, const TermKey& b);

FracLaurent pair(const Ambient& amb, const FieldElement& a, const FieldElement& b);

// Canonical text form, e.g. "-1/2 * d^2 phi[a1] * d phi[a2] * exp[1/2*a1 + a2]".
std::string to_string(const FieldElement& a);
std::string momentum_to_string(const Momentum& m);
std::string monomial_to_string(const Monomial& u, std::size_t rank);

}  // namespace lvoa

#endif  // LVOA_FREEFIELD_HPP
