#ifndef LVOA_VERTEXOP_HPP
#define LVOA_VERTEXOP_HPP

// Vertex operators Y(a)b = sum_k <a2, b2> b1 z^k/k! d^k a1 and their modes.
// Mode m is the z^m coefficient, so L_n = Y(T)_{-2-n} and resY = Y_{-1}.

#include "lvoa/freefield.hpp"

#include <complex>
#include <map>
#include <memory>

namespace lvoa {

struct StateSeries {
  std::size_t rank = 0;
  Rational m_min;
  Rational m_max;
  std::map<Rational, FieldElement> coeffs;  // nonzero coefficients inside the window

  // Zero below m_min; throws std::out_of_range above m_max.
  FieldElement coefficient(const Rational& m) const;
};

// Lowest z-exponent that can occur in Y(a)b.
Rational min_exponent(const Ambient& amb, const FieldElement& a, const FieldElement& b);

StateSeries vertex_op(const Ambient& amb, const FieldElement& a, const FieldElement& b, const Rational& m_max);

// Y(a)_m with a fixed, memoized per basis term of the argument.
class ModeOperator {
 public:
  ModeOperator(const Ambient& amb, FieldElement a, Rational m);

  FieldElement operator()(const FieldElement& b) const;
  const FieldElement& on_term(const TermKey& b) const;
  const Rational& mode() const { return m_; }

 private:
  const FieldElement& derivative_of(const TermKey& a_part, int k) const;

  Ambient amb_;
  FieldElement a_;
  Rational m_;
  mutable std::map<TermKey, FieldElement> cache_;
  mutable std::map<std::pair<TermKey, int>, FieldElement> derivatives_;
};

// Exact for every rational m.
FieldElement mode_op(const Ambient& amb, const FieldElement& a, const Rational& m, const FieldElement& b);

// Integer case: Y(a)_{-1} b. Throws std::domain_error if some pairing exponent is fractional.
FieldElement residue_int(const Ambient& amb, const FieldElement& a, const FieldElement& b);

// Fractional case, truncated after K modes per exponent class. Floating point.
struct FracResidue {
  std::size_t rank = 0;
  std::map<TermKey, std::complex<double>> terms;
  int truncation = 0;
  std::vector<Rational> modes;  // modes summed over
  // Output components of N0-degree below this bound are complete; higher ones are truncated.
  int complete_below_degree = 0;
};

FracResidue residue_frac(const Ambient& amb, const FieldElement& a, const FieldElement& b, int K);

// res z^m as a complex number.
std::complex<double> residue_of_power(const Rational& m);

}  // namespace lvoa

#endif  // LVOA_VERTEXOP_HPP
