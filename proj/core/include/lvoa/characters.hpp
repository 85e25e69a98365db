#ifndef LVOA_CHARACTERS_HPP
#define LVOA_CHARACTERS_HPP

// Truncated q-series in t with a rational offset and a step 1/s between exponents.

#include "lvoa/lattice.hpp"

#include <string>

namespace lvoa {

class QSeries {
 public:
  QSeries() = default;
  // coeffs[j] multiplies t^{offset + j/step}; all exponents below offset + coeffs.size()/step are known.
  QSeries(Rational offset, int step, std::vector<Rational> coeffs);

  const Rational& offset() const { return offset_; }
  int step() const { return step_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  // First exponent that is no longer known.
  Rational precision() const;

  // Coefficient of t^e; zero off the grid, throws std::out_of_range beyond precision.
  Rational coefficient(const Rational& e) const;
  // Coefficients at offset + j for j = 0..n-1 (integer steps only).
  std::vector<Rational> integer_coeffs(std::size_t n) const;

  // Same series on a finer grid.
  QSeries refined(int step) const;
  QSeries shifted(const Rational& by) const;
  QSeries truncated(std::size_t n) const;

  bool operator==(const QSeries& o) const;

 private:
  Rational offset_ = 0;
  int step_ = 1;
  std::vector<Rational> coeffs_;
};

QSeries operator+(const QSeries& a, const QSeries& b);
QSeries operator-(const QSeries& a, const QSeries& b);
QSeries operator*(const Rational& c, const QSeries& a);
QSeries operator*(const QSeries& a, const QSeries& b);

std::string to_string(const QSeries& q);

// Coefficients of prod_k (1 - t^k)^{-rank}, k = 0..order.
std::vector<Integer> colored_partition_counts(int rank, int order);

// t^{-rank/24} prod (1 - t^k)^{-rank}, known through t^{offset + order}.
QSeries eta_inverse_power(int rank, int order);

// sum over nu in (coset - shift) of t^{(nu, nu)/2}, known through offset + order.
QSeries theta_coset(const ScreeningLattices& sl, const Coset& coset, const Momentum& shift, int order);

// t^{-c/24} sum_h dim V_h t^h = theta_{coset - Q} / eta^rank, order+1 integer layers.
QSeries graded_dim_module(const ScreeningLattices& sl, const Coset& coset, int order);

struct SFCharacters {
  QSeries ns_plus, ns_minus, r_plus, r_minus;
  QSeries chi1, chi2, chi3, chi4;
};

// Characters of n pairs of symplectic fermions, each known through `order` integer steps.
SFCharacters sf_characters(int n, int order);

struct CharacterMatchRow {
  std::string module;
  std::string character;  // "chi1" .. "chi4"
  Rational offset;
  std::vector<Rational> computed;
  std::vector<Rational> expected;
  bool match = false;
};

struct CharacterMatchReport {
  int n = 0;
  std::vector<CharacterMatchRow> rows;
  bool ok() const;
};

// B_n, l = 4: kernel dimensions of Blue/Green against chi1/chi2, graded dimensions of
// Center/Steinberg against chi3/chi4, and 2^{n-1} chi_{ns,+} against the Blue module.
CharacterMatchReport kernel_char_match(int n, int order);

}  // namespace lvoa

#endif  // LVOA_CHARACTERS_HPP
