#include "lvoa/virasoro.hpp"

#include "doctest.h"
#include "support/fixtures.hpp"

#include <cmath>
#include <numbers>

using namespace lvoa;

namespace {

TermKey key_of(const FieldElement& v) { return v.terms().begin()->first; }

FieldElement random_key_state(std::mt19937& rng, const ScreeningLattices& sl, const Coset& c) {
  FieldElement v(sl.rank());
  v.add_term(TermKey{test::random_coset_point(rng, c, 1), test::random_monomial(rng, sl.rank(), 2)}, 1);
  return v;
}

}  // namespace

TEST_CASE("vacuum acts as the identity") {
  std::mt19937 rng(test::kSeed + 30);
  const auto& sl = test::b2();
  for (int i = 0; i < 20; ++i) {
    FieldElement b = test::random_state(rng, named_coset(sl, "green"), 2);
    StateSeries s = vertex_op(sl.amb, FieldElement::vacuum(2), b, 3);
    CHECK(s.coefficient(0) == b);
    for (const auto& [m, c] : s.coeffs)
      if (m != 0) CHECK(c.is_zero());
  }
}

TEST_CASE("symplectic fermion OPE, one pair") {
  const auto& sl = test::a1();
  Momentum e = {1};
  FieldElement psi = FieldElement::exp(-e);
  FieldElement psi_star = derive(FieldElement::exp(e));
  StateSeries s = vertex_op(sl.amb, psi, psi_star, 1);
  CHECK(s.m_min == -2);
  CHECK(s.coefficient(-2) == FieldElement::vacuum(1));
  CHECK(s.coefficient(-1).is_zero());
  CHECK(mode_op(sl.amb, psi, -2, psi_star) == FieldElement::vacuum(1));
  CHECK_THROWS_AS(s.coefficient(5), std::out_of_range);
}

TEST_CASE("symplectic fermion OPE, B2 orthogonal short roots") {
  const auto& sl = test::b2();
  std::vector<Momentum> f = {{0, 1}, {1, 1}};
  REQUIRE(sl.amb.pair(f[0], f[1]) == 0);
  for (std::size_t j = 0; j < 2; ++j) {
    REQUIRE(sl.amb.norm(f[j]) == 1);
    for (std::size_t k = 0; k < 2; ++k) {
      FieldElement psi = FieldElement::exp(-f[j]);
      FieldElement psi_star = derive(FieldElement::exp(f[k]));
      StateSeries s = vertex_op(sl.amb, psi, psi_star, 0);
      StateSeries t = vertex_op(sl.amb, psi_star, psi, 0);
      CAPTURE(j);
      CAPTURE(k);
      if (j == k) {
        CHECK(s.coefficient(-2) == FieldElement::vacuum(2));
        CHECK(s.coefficient(-1).is_zero());
      } else {
        for (int m = -3; m <= -1; ++m) {
          CHECK(s.coefficient(m).is_zero());
          CHECK(t.coefficient(m).is_zero());
        }
      }
    }
  }
}

TEST_CASE("Y(d phi_alpha) residue gives the lattice grading") {
  std::mt19937 rng(test::kSeed + 31);
  const auto& sl = test::b2();
  auto reps = quotient_group(sl.basis_dual, sl.basis_long).coset_reps;
  for (int i = 0; i < test::kPropertyInstances; ++i) {
    Momentum alpha = {test::uniform(rng, -2, 2), test::uniform(rng, -2, 2)};
    Coset c = make_coset(sl, reps[static_cast<std::size_t>(i) % reps.size()]);
    FieldElement b = test::random_state(rng, c, 2);
    FieldElement expected(2);
    for (const auto& [k, coeff] : b.terms()) expected.add_term(k, coeff * sl.amb.pair(alpha, k.momentum));
    FieldElement a = FieldElement::dphi(1, alpha);
    CHECK(mode_op(sl.amb, a, -1, b) == expected);
    CHECK(residue_int(sl.amb, a, b) == expected);
  }
}

TEST_CASE("Y(T)_{-1} is the derivation on exponentials") {
  const auto& sl = test::b2();
  FieldElement T = stress_tensor(sl).element;
  for (Momentum lambda : std::vector<Momentum>{{0, 0}, {1, 2}, {make_rational(1, 2), 1}, {-1, 3}})
    CHECK(mode_op(sl.amb, T, -1, FieldElement::exp(lambda)) == FieldElement::dphi(1, lambda) * FieldElement::exp(lambda));
}

TEST_CASE("mode operators shift L0 by h(a) + m") {
  std::mt19937 rng(test::kSeed + 32);
  const auto& sl = test::b2();
  Coset root = named_coset(sl, "blue");
  auto reps = quotient_group(sl.basis_dual, sl.basis_long).coset_reps;
  for (int i = 0; i < test::kPropertyInstances; ++i) {
    // a from the long lattice coset guarantees integer pairings with every module
    FieldElement a = random_key_state(rng, sl, root);
    FieldElement b = random_key_state(rng, sl, make_coset(sl, reps[static_cast<std::size_t>(i) % reps.size()]));
    Rational ha = l0_eigenvalue(sl, key_of(a));
    Rational hb = l0_eigenvalue(sl, key_of(b));
    Rational m0 = min_exponent(sl.amb, a, b);
    for (int j = 0; j < 3; ++j) {
      Rational m = m0 + j;
      FieldElement out = mode_op(sl.amb, a, m, b);
      for (const auto& [k, c] : out.terms()) CHECK(l0_eigenvalue(sl, k) == ha + hb + m);
    }
    if (is_integer(m0)) CHECK(residue_int(sl.amb, a, b) == mode_op(sl.amb, a, -1, b));
  }
}

TEST_CASE("residues of powers of z") {
  CHECK(residue_of_power(-1) == std::complex<double>(1, 0));
  for (int m : {-3, -2, 0, 1, 4}) CHECK(residue_of_power(m) == std::complex<double>(0, 0));
  auto r = residue_of_power(make_rational(-1, 2));
  CHECK(std::abs(r - std::complex<double>(0, 2 / std::numbers::pi)) < 1e-12);
}

TEST_CASE("integer residue refuses fractional pairings") {
  const auto& sl = test::a1();
  CHECK_THROWS_AS(residue_int(sl.amb, FieldElement::exp({-1}), FieldElement::exp({make_rational(1, 2)})),
                  std::domain_error);
}

TEST_CASE("fractional residue of the short screening on the Center groundstate") {
  const auto& sl = test::a1();
  const int K = 6;
  FracResidue r = residue_frac(sl.amb, FieldElement::exp({-1}), FieldElement::exp({make_rational(1, 2)}), K);
  CHECK(r.truncation == K);
  // k-th summand (e^{2 pi i (k+1/2)} - 1) / (2 pi i (k+1/2)) e^{a/2} d^k/k! e^{-a}
  auto weight = [](int k) { return std::complex<double>(0, 1 / (std::numbers::pi * (k + 0.5))); };
  TermKey k0{{make_rational(-1, 2)}, {}};
  TermKey k1{{make_rational(-1, 2)}, {Factor{0, 1}}};
  TermKey k2_second{{make_rational(-1, 2)}, {Factor{0, 2}}};
  REQUIRE(r.terms.count(k0));
  REQUIRE(r.terms.count(k1));
  CHECK(std::abs(r.terms.at(k0) - weight(0)) < 1e-12);
  CHECK(std::abs(r.terms.at(k1) + weight(1)) < 1e-12);
  // d^2/2 e^{-a} = (-d^2 phi + d phi d phi) / 2 e^{-a}
  REQUIRE(r.terms.count(k2_second));
  CHECK(std::abs(r.terms.at(k2_second) + 0.5 * weight(2)) < 1e-12);
  CHECK(r.complete_below_degree == K);
}
