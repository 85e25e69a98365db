#include "lvoa/linalg.hpp"
#include "lvoa/screening.hpp"

#include "doctest.h"
#include "support/fixtures.hpp"

using namespace lvoa;

namespace {

std::vector<FieldElement> vacuum_layers(const ScreeningLattices& sl, int max_level) {
  std::vector<FieldElement> out;
  Coset blue = named_coset(sl, "blue");
  for (int h = 0; h <= max_level; ++h)
    for (auto& v : layer_basis(sl, blue, h).basis()) out.push_back(std::move(v));
  return out;
}

}  // namespace

TEST_CASE("central charges and the stress tensor") {
  CHECK(stress_tensor(test::a1()).c == -2);
  CHECK(stress_tensor(test::b2()).c == -4);
  for (int n = 2; n <= 4; ++n) CHECK(stress_tensor(test::bn(n)).c == -2 * n);

  ScreeningLattices free = test::a1();
  free.Q = zeros(1);
  free.central_charge = 1;
  StressTensor st = stress_tensor(free);
  CHECK(st.c == 1);
  CHECK(st.element == make_rational(1, 2) * FieldElement::dphi(1, {1}) * FieldElement::dphi(1, {1}));

  for (const auto* sl : {&test::a1(), &test::b2()}) {
    StressTensor t = stress_tensor(*sl);
    for (const auto& [k, c] : t.element.terms()) {
      CHECK(degree(k.monomial) == 2);
      CHECK(is_zero(k.momentum));
    }
    VirasoroAction vir(t);
    CHECK(vir.L(0, t.element) == Rational(2) * t.element);
    CHECK(vir.L(-2, FieldElement::vacuum(sl->rank())) == t.element);
  }
}

TEST_CASE("stress tensor does not depend on the basis") {
  std::mt19937 rng(test::kSeed + 40);
  auto b3 = test::bn(3);
  int done = 0;
  while (done < test::kPropertyInstances) {
    const ScreeningLattices& sl = done % 2 ? test::b2() : b3;
    const std::size_t n = sl.rank();
    RMat basis(n, RVec(n));
    for (auto& row : basis)
      for (auto& x : row) x = test::small_rational(rng, 3, 2);
    if (determinant(basis) == 0) continue;
    CHECK(stress_tensor(sl, basis).element == stress_tensor(sl).element);
    ++done;
  }
}

TEST_CASE("L_n on the vacuum") {
  for (const auto* sl : {&test::a1(), &test::b2()}) {
    VirasoroAction vir(stress_tensor(*sl));
    FieldElement vac = FieldElement::vacuum(sl->rank());
    for (long n : {-1L, 1L, 2L, 3L}) CHECK(vir.L(n, vac).is_zero());
    CHECK(vir.L(0, vac).is_zero());
  }
}

TEST_CASE("L0 from the mode operator agrees with the eigenvalue formula") {
  for (const auto* sl : {&test::a1(), &test::b2()}) {
    VirasoroAction vir(stress_tensor(*sl));
    for (const auto& name : module_names()) {
      Coset c = named_coset(*sl, name);
      Rational h0 = groundstates(*sl, c).h;
      for (int level = 0; level <= 3; ++level) {
        GradedLayer layer = layer_basis(*sl, c, h0 + level);
        for (const auto& k : layer.keys) {
          FieldElement v = FieldElement::term(k);
          CHECK(l0_eigenvalue(*sl, k) == h0 + level);
          CHECK(vir.L(0, v) == (h0 + level) * v);
        }
      }
    }
  }
  const auto& a1 = test::a1();
  FieldElement x = FieldElement::dphi(1, {1}) * FieldElement::exp({1});
  CHECK(VirasoroAction(stress_tensor(a1)).L(0, x) == x);
}

TEST_CASE("Virasoro bracket on A1 vacuum layers up to level 5") {
  VirasoroAction vir(stress_tensor(test::a1()));
  auto states = vacuum_layers(test::a1(), 5);
  for (long m = -3; m <= 3; ++m)
    for (long n = -3; n <= 3; ++n) {
      auto rep = commutator_check(vir, m, n, states);
      CAPTURE(m);
      CAPTURE(n);
      CHECK(rep.ok);
      CHECK(rep.states_checked == states.size());
    }
}

TEST_CASE("Virasoro bracket on B2 vacuum layers up to level 3") {
  VirasoroAction vir(stress_tensor(test::b2()));
  auto states = vacuum_layers(test::b2(), 3);
  for (long m = -3; m <= 3; ++m)
    for (long n = -3; n <= 3; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      CHECK(commutator_check(vir, m, n, states).ok);
    }
}

TEST_CASE("commutator check reports a counterexample for a wrong central charge") {
  StressTensor st = stress_tensor(test::a1());
  st.c = 5;
  VirasoroAction vir(st);
  auto rep = commutator_check(vir, 2, -2, {FieldElement::vacuum(1)});
  CHECK_FALSE(rep.ok);
  REQUIRE(rep.counterexample.has_value());
  CHECK(*rep.counterexample == FieldElement::vacuum(1));
}

TEST_CASE("L_{-1} equals the derivation on random states") {
  std::mt19937 rng(test::kSeed + 41);
  VirasoroAction a1(stress_tensor(test::a1())), b2(stress_tensor(test::b2()));
  for (int i = 0; i < test::kPropertyInstances; ++i) {
    bool rank2 = i % 2;
    const auto& sl = rank2 ? test::b2() : test::a1();
    auto reps = quotient_group(sl.basis_dual, sl.basis_long).coset_reps;
    Coset c = make_coset(sl, reps[static_cast<std::size_t>(i / 2) % reps.size()]);
    FieldElement v = test::random_state(rng, c, sl.rank());
    CHECK((rank2 ? b2 : a1).L(-1, v) == derive(v));
  }
}
