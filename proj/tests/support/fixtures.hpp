#ifndef LVOA_TESTS_FIXTURES_HPP
#define LVOA_TESTS_FIXTURES_HPP

#include "lvoa/screening.hpp"

#include <random>

namespace lvoa::test {

inline constexpr std::uint32_t kSeed = 20240611u;
inline constexpr int kPropertyInstances = 120;

inline const ScreeningLattices& a1() {
  static const ScreeningLattices sl = build_screening_lattices(build_root_system('A', 1), 4);
  return sl;
}

inline const ScreeningLattices& b2() {
  static const ScreeningLattices sl = build_screening_lattices(build_root_system('B', 2), 4);
  return sl;
}

inline ScreeningLattices bn(int n) { return build_screening_lattices(build_root_system('B', n), 4); }

inline int uniform(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Rational small_rational(std::mt19937& rng, int num_range = 5, int max_den = 4) {
  return make_rational(uniform(rng, -num_range, num_range), uniform(rng, 1, max_den));
}

// Random point of the coset within a few lattice steps of its canonical representative.
inline Momentum random_coset_point(std::mt19937& rng, const Coset& c, int spread = 2) {
  Momentum v = c.canonical_rep();
  for (const auto& b : c.lattice_basis()) v = v + Rational(uniform(rng, -spread, spread)) * b;
  return v;
}

inline Monomial random_monomial(std::mt19937& rng, std::size_t rank, int max_degree) {
  Monomial u;
  int budget = uniform(rng, 0, max_degree);
  while (budget > 0) {
    int order = uniform(rng, 1, budget);
    u.push_back(Factor{uniform(rng, 0, static_cast<int>(rank) - 1), order});
    budget -= order;
  }
  std::sort(u.begin(), u.end());
  return u;
}

// Random combination of basis terms u e^mu with mu in the coset.
inline FieldElement random_state(std::mt19937& rng, const Coset& c, std::size_t rank, int max_terms = 3,
                                 int max_degree = 3, int spread = 1) {
  FieldElement v(rank);
  int terms = uniform(rng, 1, max_terms);
  for (int t = 0; t < terms; ++t) {
    Rational coeff = make_rational(uniform(rng, 1, 6), uniform(rng, 1, 3)) * (uniform(rng, 0, 1) ? 1 : -1);
    v.add_term(TermKey{random_coset_point(rng, c, spread), random_monomial(rng, rank, max_degree)}, coeff);
  }
  return v;
}

// Random state of a fixed L0 layer.
inline FieldElement random_layer_state(std::mt19937& rng, const GradedLayer& layer, std::size_t rank, int max_terms = 3) {
  FieldElement v(rank);
  if (layer.keys.empty()) return v;
  int terms = uniform(rng, 1, max_terms);
  for (int t = 0; t < terms; ++t) {
    const TermKey& k = layer.keys[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(layer.keys.size()) - 1))];
    v.add_term(k, make_rational(uniform(rng, -5, 5), uniform(rng, 1, 3)));
  }
  return v;
}

}  // namespace lvoa::test

#endif  // LVOA_TESTS_FIXTURES_HPP
