#include "lvoa/characters.hpp"
#include "lvoa/screening.hpp"

#include "doctest.h"
#include "support/fixtures.hpp"

using namespace lvoa;

namespace {

// Partition numbers from Euler's pentagonal recurrence.
std::vector<Integer> pentagonal_partitions(int order) {
  std::vector<Integer> p(static_cast<std::size_t>(order) + 1);
  p[0] = 1;
  for (int n = 1; n <= order; ++n) {
    Integer s = 0;
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      int sign = (k % 2) ? 1 : -1;
      s += sign * p[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) s += sign * p[static_cast<std::size_t>(n - g2)];
    }
    p[static_cast<std::size_t>(n)] = s;
  }
  return p;
}

using Poly = std::vector<long>;  // plain integer power series in q, truncated to a fixed length

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly c(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < c.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// prod_{m >= 1} (1 + sign q^{step_m})^power with exponents on the grid of q.
Poly fermion_poly(std::size_t len, int power, int sign, bool half_integer) {
  Poly out(len, 0);
  out[0] = 1;
  for (std::size_t e = 1; e < len; ++e) {
    // in the half-integer sector the exponents are m - 1/2, i.e. odd on the doubled grid
    if (half_integer && e % 2 == 0) continue;
    Poly f(len, 0);
    f[0] = 1;
    f[e] = sign;
    for (int i = 0; i < power; ++i) out = poly_mul(out, f);
  }
  return out;
}

std::vector<Rational> to_rationals(const Poly& p, std::size_t n) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(Rational(p[i]));
  return out;
}

}  // namespace

TEST_CASE("eta inverse powers") {
  QSeries e0 = eta_inverse_power(0, 5);
  CHECK(e0.offset() == 0);
  CHECK(e0.integer_coeffs(6) == std::vector<Rational>{1, 0, 0, 0, 0, 0});

  const int order = 40;
  auto p = pentagonal_partitions(order);
  QSeries e1 = eta_inverse_power(1, order);
  CHECK(e1.offset() == make_rational(-1, 24));
  for (int n = 0; n <= order; ++n) CHECK(e1.integer_coeffs(order + 1)[static_cast<std::size_t>(n)] == Rational(p[static_cast<std::size_t>(n)]));

  for (int rank = 2; rank <= 4; ++rank) {
    auto counts = colored_partition_counts(rank, 20);
    auto lower = colored_partition_counts(rank - 1, 20);
    for (int n = 0; n <= 20; ++n) {
      Integer conv = 0;
      for (int k = 0; k <= n; ++k) conv += lower[static_cast<std::size_t>(k)] * p[static_cast<std::size_t>(n - k)];
      CHECK(counts[static_cast<std::size_t>(n)] == conv);
    }
  }
}

TEST_CASE("q-series arithmetic and precision") {
  QSeries a(make_rational(1, 3), 1, {1, 2, 3});
  QSeries b(make_rational(-1, 3), 2, {1, 0, 1, 0, 1, 0});
  CHECK(a.precision() == make_rational(10, 3));
  CHECK(b.precision() == make_rational(8, 3));
  CHECK(a.coefficient(make_rational(4, 3)) == 2);
  CHECK(a.coefficient(make_rational(5, 6)) == 0);
  CHECK_THROWS_AS(a.coefficient(make_rational(13, 3)), std::out_of_range);
  QSeries ab = a * b;
  CHECK(ab.offset() == 0);
  CHECK(ab.precision() == std::min(a.offset() + b.precision(), b.offset() + a.precision()));
  CHECK(ab.coefficient(0) == 1);
  CHECK(ab.coefficient(1) == 3);
  QSeries s = a + a;
  CHECK(s == Rational(2) * a);
  CHECK((a - a).coefficient(make_rational(7, 3)) == 0);
  CHECK(a.refined(3).coefficient(make_rational(7, 3)) == 3);
  CHECK(a.shifted(1).offset() == make_rational(4, 3));
}

TEST_CASE("theta function of 2Z by brute force") {
  const auto& sl = test::a1();
  QSeries th = theta_coset(sl, named_coset(sl, "blue"), zeros(1), 50);
  for (int e = 0; e <= 50; ++e) {
    int count = 0;
    for (int k = -10; k <= 10; ++k)
      if (2 * k * k == e) ++count;
    CHECK(th.coefficient(e) == count);
  }
  QSeries centered = theta_coset(sl, named_coset(sl, "center"), sl.Q, 4);
  CHECK(centered.offset() == 0);
  CHECK(centered.coefficient(0) == 1);
}

TEST_CASE("theta function of B2 cosets by brute force") {
  const auto& sl = test::b2();
  for (const auto& name : module_names()) {
    Coset c = named_coset(sl, name);
    QSeries th = theta_coset(sl, c, sl.Q, 4);
    std::map<Rational, long> brute;
    for (int a = -12; a <= 12; ++a)
      for (int b = -12; b <= 12; ++b) {
        Momentum nu = c.rep() - sl.Q + Rational(a) * sl.basis_long[0] + Rational(b) * sl.basis_long[1];
        Rational e = sl.amb.norm(nu) / 2;
        if (e < th.precision()) brute[e] += 1;
      }
    CAPTURE(name);
    for (const auto& [e, n] : brute) CHECK(th.coefficient(e) == n);
    Rational total = 0, brute_total = 0;
    for (const auto& x : th.coeffs()) total += x;
    for (const auto& [e, n] : brute) brute_total += n;
    CHECK(total == brute_total);
  }
}

TEST_CASE("theta functions do not depend on the coset representative") {
  std::mt19937 rng(test::kSeed + 60);
  auto b3 = test::bn(3);
  for (int i = 0; i < test::kPropertyInstances; ++i) {
    const ScreeningLattices& sl = i % 3 == 0 ? test::a1() : (i % 3 == 1 ? test::b2() : b3);
    const auto& name = module_names()[static_cast<std::size_t>(i) % 4];
    Coset base = named_coset(sl, name);
    Coset moved = make_coset(sl, test::random_coset_point(rng, base, 3));
    CHECK(theta_coset(sl, base, sl.Q, 3) == theta_coset(sl, moved, sl.Q, 3));
  }
}

TEST_CASE("Jacobi triple product: A1 vacuum equals the one-pair NS character to order 20") {
  const auto& sl = test::a1();
  QSeries vac = graded_dim_module(sl, named_coset(sl, "blue"), 20);
  SFCharacters sf = sf_characters(1, 20);
  CHECK(vac.offset() == sf.ns_plus.offset());
  CHECK(vac.integer_coeffs(21) == sf.ns_plus.integer_coeffs(21));
  CHECK(sf.chi1.offset() == make_rational(1, 12));
  CHECK(sf.chi1.coefficient(make_rational(1, 12)) == 1);
}

TEST_CASE("symplectic fermion characters against direct products") {
  for (int n = 1; n <= 3; ++n) {
    const int order = 10;
    SFCharacters sf = sf_characters(n, order);
    CAPTURE(n);
    CHECK(sf.ns_plus.offset() == make_rational(n, 12));
    CHECK(sf.r_plus.offset() == make_rational(-n, 24));
    CHECK(sf.r_plus.step() == 2);
    std::size_t len = order + 1;
    CHECK(sf.ns_plus.integer_coeffs(len) == to_rationals(fermion_poly(len, 2 * n, 1, false), len));
    CHECK(sf.ns_minus.integer_coeffs(len) == to_rationals(fermion_poly(len, 2 * n, -1, false), len));
    std::size_t half_len = 2 * len;
    Poly rp = fermion_poly(half_len, 2 * n, 1, true), rm = fermion_poly(half_len, 2 * n, -1, true);
    for (std::size_t j = 0; j < half_len; ++j) {
      Rational e = sf.r_plus.offset() + make_rational(static_cast<long>(j), 2);
      CHECK(sf.r_plus.coefficient(e) == rp[j]);
      CHECK(sf.r_minus.coefficient(e) == rm[j]);
    }
    CHECK(sf.chi1 + sf.chi2 == sf.ns_plus);
    CHECK(sf.chi3 + sf.chi4 == sf.r_plus);
    CHECK(sf.chi1 - sf.chi2 == sf.ns_minus);
  }
}

TEST_CASE("two pairs: leading coefficients") {
  SFCharacters sf = sf_characters(2, 10);
  Rational o = make_rational(1, 6);
  CHECK(sf.ns_plus.offset() == o);
  CHECK(sf.ns_plus.coefficient(o) == 1);
  CHECK(sf.ns_plus.coefficient(o + 1) == 4);
  CHECK(sf.ns_plus.coefficient(o + 2) == 10);
  CHECK(sf.ns_minus.coefficient(o + 1) == -4);
  CHECK(sf.ns_minus.coefficient(o + 2) == 2);  // 6 from (1-t)^4, -4 from (1-t^2)^4
  Rational r = make_rational(-1, 12);
  CHECK(sf.r_plus.offset() == r);
  std::vector<long> plus = {1, 4, 6, 8, 17};  // t^2 coefficient: 4 + 12 + 1
  for (std::size_t j = 0; j < plus.size(); ++j) {
    Rational e = r + make_rational(static_cast<long>(j), 2);
    CHECK(sf.r_plus.coefficient(e) == plus[j]);
    CHECK(sf.r_minus.coefficient(e) == (j % 2 ? -plus[j] : plus[j]));
  }
}

TEST_CASE("graded dimensions agree with layer bases to order 6") {
  for (const auto* sl : {&test::a1(), &test::b2()}) {
    for (const auto& name : module_names()) {
      Coset c = named_coset(*sl, name);
      QSeries g = graded_dim_module(*sl, c, 6);
      Rational h0 = groundstates(*sl, c).h;
      CHECK(g.offset() == h0 - sl->central_charge / 24);
      auto coeffs = g.integer_coeffs(7);
      for (int j = 0; j <= 6; ++j) {
        CAPTURE(name);
        CAPTURE(j);
        CHECK(coeffs[static_cast<std::size_t>(j)] == Rational(static_cast<long>(layer_basis(*sl, c, h0 + j).dim())));
      }
    }
  }
}

TEST_CASE("B2 module series") {
  const auto& sl = test::b2();
  QSeries center = graded_dim_module(sl, named_coset(sl, "center"), 2);
  CHECK(center.offset() == make_rational(1, 6) - make_rational(1, 4));
  CHECK(center.integer_coeffs(2) == std::vector<Rational>{1, 6});
  QSeries st = graded_dim_module(sl, named_coset(sl, "steinberg"), 2);
  CHECK(st.offset() == make_rational(1, 6) + make_rational(1, 4));
  CHECK(st.integer_coeffs(2) == std::vector<Rational>{4, 8});

  CharacterMatchReport rep = kernel_char_match(2, 2);
  CHECK(rep.ok());
  std::map<std::string, std::vector<Rational>> first_two;
  for (const auto& row : rep.rows) {
    CAPTURE(row.module);
    CAPTURE(row.character);
    CHECK(row.match);
    if (row.character.rfind("chi", 0) == 0)
      first_two[row.module] = std::vector<Rational>(row.computed.begin(), row.computed.begin() + 2);
  }
  CHECK(first_two["blue"] == std::vector<Rational>{1, 0});
  CHECK(first_two["green"] == std::vector<Rational>{0, 4});
}

TEST_CASE("B3 kernel dimensions match the three-pair characters") {
  CharacterMatchReport rep = kernel_char_match(3, 1);
  CHECK(rep.ok());
}
