#include "lvoa/vertexop.hpp"

#include <functional>
#include <numbers>
#include <set>
#include <stdexcept>

namespace lvoa {

namespace {

using Group = std::pair<Factor, int>;

std::vector<Group> group(const Monomial& u) {
  std::vector<Group> g;
  for (const auto& f : u) {
    if (!g.empty() && g.back().first == f) ++g.back().second;
    else g.emplace_back(f, 1);
  }
  return g;
}

Integer binomial(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

struct Split {
  Monomial first;   // stays in the product
  Monomial second;  // enters the pairing
  Integer multiplicity;
};

// Every sub-multiset `second` of u, with its binomial multiplicity. Factors flagged by
// counts_against_budget may send at most `budget` copies to `second` (negative: no cap).
void enumerate_splits(const std::vector<Group>& g, std::size_t i, Split& cur, int budget,
                      const std::function<bool(const Factor&)>& counts_against_budget,
                      const std::function<void(const Split&)>& visit) {
  if (i == g.size()) {
    visit(cur);
    return;
  }
  const auto& [f, n] = g[i];
  bool costly = counts_against_budget && counts_against_budget(f);
  for (int s = 0; s <= n; ++s) {
    if (costly && budget >= 0 && s > budget) break;
    Split next = cur;
    next.first.insert(next.first.end(), static_cast<std::size_t>(n - s), f);
    next.second.insert(next.second.end(), static_cast<std::size_t>(s), f);
    next.multiplicity *= binomial(n, s);
    enumerate_splits(g, i + 1, next, costly && budget >= 0 ? budget - s : budget, counts_against_budget, visit);
  }
}

std::set<Rational> exponent_classes(const Ambient& amb, const FieldElement& a, const FieldElement& b) {
  std::set<Rational> classes;
  for (const auto& ma : a.momenta())
    for (const auto& mb : b.momenta()) {
      Rational e = amb.pair(ma, mb);
      classes.insert(e - Rational(floor_of(e)));
    }
  return classes;
}

}  // namespace

FieldElement StateSeries::coefficient(const Rational& m) const {
  if (m < m_min) return FieldElement(rank);
  if (m > m_max)
    throw std::out_of_range("mode " + to_string(m) + " outside computed window [" + to_string(m_min) + ", " +
                            to_string(m_max) + "]");
  auto it = coeffs.find(m);
  return it == coeffs.end() ? FieldElement(rank) : it->second;
}

Rational min_exponent(const Ambient& amb, const FieldElement& a, const FieldElement& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  bool first = true;
  Rational lo;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      Rational e = amb.pair(ka.momentum, kb.momentum) - degree(ka.monomial) - degree(kb.monomial);
      if (first || e < lo) lo = e;
      first = false;
    }
  return lo;
}

ModeOperator::ModeOperator(const Ambient& amb, FieldElement a, Rational m)
    : amb_(amb), a_(std::move(a)), m_(std::move(m)) {}

const FieldElement& ModeOperator::derivative_of(const TermKey& a_part, int k) const {
  auto key = std::make_pair(a_part, k);
  auto it = derivatives_.find(key);
  if (it != derivatives_.end()) return it->second;
  FieldElement d = k == 0 ? FieldElement::term(a_part) : derive(derivative_of(a_part, k - 1));
  return derivatives_.emplace(key, std::move(d)).first->second;
}

const FieldElement& ModeOperator::on_term(const TermKey& kb) const {
  auto it = cache_.find(kb);
  if (it != cache_.end()) return it->second;
  const std::size_t n = amb_.rank();
  FieldElement out(n);
  std::vector<Group> gb = group(kb.monomial);
  for (const auto& [ka, ca] : a_.terms()) {
    Rational ab = amb_.pair(ka.momentum, kb.momentum);
    // Factors d^n phi_{e_j} with (alpha, e_j) = 0 cannot contract with e^alpha,
    // so at most |a2| of them may enter the pairing.
    std::vector<bool> inert(n);
    for (std::size_t j = 0; j < n; ++j) inert[j] = amb_.pair(ka.momentum, unit_vector(n, j)) == 0;
    auto is_inert = [&](const Factor& f) { return static_cast<bool>(inert[static_cast<std::size_t>(f.index)]); };

    Split root_a{{}, {}, 1};
    enumerate_splits(group(ka.monomial), 0, root_a, -1, nullptr, [&](const Split& sa) {
      Split root_b{{}, {}, 1};
      int budget = static_cast<int>(sa.second.size());
      enumerate_splits(gb, 0, root_b, budget, is_inert, [&](const Split& sb) {
        Rational e = ab - degree(sa.second) - degree(sb.second);
        Rational k = m_ - e;
        if (!is_integer(k) || k < 0) return;
        PairingTerm pt = pair_terms(amb_, TermKey{ka.momentum, sa.second}, TermKey{kb.momentum, sb.second});
        if (pt.weight == 0) return;
        long kk = to_long(k);
        Rational coeff = ca * pt.weight * Rational(sa.multiplicity * sb.multiplicity) / factorial(kk);
        const FieldElement& dk = derivative_of(TermKey{ka.momentum, sa.first}, static_cast<int>(kk));
        TermKey b1{kb.momentum, sb.first};
        for (const auto& [kd, cd] : dk.terms()) out.add_term(multiply_keys(b1, kd), coeff * cd);
      });
    });
  }
  return cache_.emplace(kb, std::move(out)).first->second;
}

FieldElement ModeOperator::operator()(const FieldElement& b) const {
  if (b.rank() != amb_.rank()) throw std::invalid_argument("mode operator: lattice mismatch");
  FieldElement out(b.rank());
  for (const auto& [kb, cb] : b.terms()) {
    const FieldElement& img = on_term(kb);
    for (const auto& [k, c] : img.terms()) out.add_term(k, cb * c);
  }
  return out;
}

FieldElement mode_op(const Ambient& amb, const FieldElement& a, const Rational& m, const FieldElement& b) {
  return ModeOperator(amb, a, m)(b);
}

StateSeries vertex_op(const Ambient& amb, const FieldElement& a, const FieldElement& b, const Rational& m_max) {
  StateSeries s;
  s.rank = b.rank();
  s.m_min = min_exponent(amb, a, b);
  s.m_max = m_max;
  for (const Rational& cls : exponent_classes(amb, a, b)) {
    Rational start = s.m_min + cls - (s.m_min - Rational(floor_of(s.m_min)));
    if (start < s.m_min) start += 1;
    for (Rational m = start; m <= m_max; m += 1) {
      FieldElement c = mode_op(amb, a, m, b);
      if (!c.is_zero()) s.coeffs.emplace(m, std::move(c));
    }
  }
  return s;
}

FieldElement residue_int(const Ambient& amb, const FieldElement& a, const FieldElement& b) {
  for (const auto& ma : a.momenta())
    for (const auto& mb : b.momenta())
      if (!is_integer(amb.pair(ma, mb)))
        throw std::domain_error("fractional pairing " + to_string(amb.pair(ma, mb)) +
                                " in the integer residue; use the fractional residue with a truncation");
  return mode_op(amb, a, Rational(-1), b);
}

std::complex<double> residue_of_power(const Rational& m) {
  if (is_integer(m)) return m == -1 ? 1.0 : 0.0;
  const double x = Rational(m + 1).get_d();
  const std::complex<double> two_pi_i(0.0, 2.0 * std::numbers::pi);
  return (std::exp(two_pi_i * x) - 1.0) / (two_pi_i * x);
}

FracResidue residue_frac(const Ambient& amb, const FieldElement& a, const FieldElement& b, int K) {
  if (K <= 0) throw std::invalid_argument("truncation must be positive");
  FracResidue r;
  r.rank = b.rank();
  r.truncation = K;
  bool first = true;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      Rational e0 = amb.pair(ka.momentum, kb.momentum) - degree(ka.monomial) - degree(kb.monomial);
      Rational last = e0 + (K - 1);
      // Output degree of mode m is |u| + |v| + m - (alpha, beta).
      Rational bound = last + degree(ka.monomial) + degree(kb.monomial) - amb.pair(ka.momentum, kb.momentum) + 1;
      int b_int = static_cast<int>(floor_of(bound).get_si());
      if (first || b_int < r.complete_below_degree) r.complete_below_degree = b_int;
      first = false;
      FieldElement single_a = FieldElement::term(ka, ca);
      FieldElement single_b = FieldElement::term(kb, cb);
      for (int j = 0; j < K; ++j) {
        Rational m = e0 + j;
        std::complex<double> res = residue_of_power(m);
        if (res == std::complex<double>{}) continue;
        r.modes.push_back(m);
        FieldElement img = mode_op(amb, single_a, m, single_b);
        for (const auto& [k, c] : img.terms()) r.terms[k] += res * c.get_d();
      }
    }
  return r;
}

}  // namespace lvoa
