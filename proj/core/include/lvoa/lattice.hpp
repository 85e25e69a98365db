#ifndef LVOA_LATTICE_HPP
#define LVOA_LATTICE_HPP

// Rescaled screening lattices. Every momentum is stored in the ambient basis
// {alpha_i / sqrt(p)}, where the pairing is u^T G v with G = gram / p.

#include "lvoa/rootdata.hpp"

#include <functional>
#include <string>

namespace lvoa {

using Momentum = RVec;

struct Ambient {
  RMat G;

  std::size_t rank() const { return G.size(); }
  Rational pair(const Momentum& u, const Momentum& v) const;
  Rational norm(const Momentum& u) const { return pair(u, u); }
};

struct ScreeningLattices {
  RootSystem rs;
  int ell = 0;
  int p = 0;
  Ambient amb;
  std::vector<Momentum> basis_short;  // -alpha_i / sqrt(p)
  std::vector<Momentum> basis_long;   // alpha_i^vee sqrt(p)
  std::vector<Momentum> basis_dual;   // lambda_i / sqrt(p)
  Momentum Q;
  Rational central_charge;

  std::size_t rank() const { return amb.rank(); }
  Rational h(const Momentum& lambda) const;  // conformal dimension of e^{phi_lambda}
  RMat long_matrix() const { return basis_long; }
  RMat dual_matrix() const { return basis_dual; }
  RMat short_matrix() const { return basis_short; }
};

ScreeningLattices build_screening_lattices(const RootSystem& rs, int ell);

Momentum q_vector(const RootSystem& rs, int p);
Rational central_charge(const ScreeningLattices& sl);
Rational conformal_dim(const ScreeningLattices& sl, const Momentum& lambda);

// Membership of v in the integer span of a full-rank row basis.
bool in_lattice(const RMat& basis, const Momentum& v);

class Coset {
 public:
  Coset(Momentum rep, RMat lattice_basis);

  const Momentum& rep() const { return rep_; }
  const Momentum& canonical_rep() const { return canonical_; }
  const RMat& lattice_basis() const { return basis_; }
  bool contains(const Momentum& v) const;
  bool operator==(const Coset& other) const;

 private:
  Momentum rep_;
  RMat basis_;
  Momentum canonical_;
};

// Representative of v + L reduced modulo the Hermite normal form of L.
Momentum reduce_mod_lattice(const RMat& basis, const Momentum& v);

struct QuotientGroup {
  std::vector<long> invariant_factors;  // only factors > 1, in divisibility order
  std::vector<Momentum> coset_reps;
  long order() const { return static_cast<long>(coset_reps.size()); }
  bool cyclic() const { return invariant_factors.size() <= 1; }
};

QuotientGroup quotient_group(const RMat& fine, const RMat& coarse);

long num_simples(const RootSystem& rs, int ell);

// Calls visit(v) for every v = rep + integer combination of `basis` with
// (v - center, v - center) <= radius2. Exact and complete (Fincke-Pohst with rational bounds).
void enumerate_lattice_points(const Ambient& amb, const RMat& basis, const Momentum& rep,
                              const Momentum& center, const Rational& radius2,
                              const std::function<void(const Momentum&)>& visit);

struct Groundstates {
  std::vector<Momentum> states;  // lexicographically sorted
  Rational h;
};

Groundstates groundstates(const ScreeningLattices& sl, const Coset& coset);

// Phase exponent r in [0, 2) with F = e^{i pi r}.
Rational quadratic_form_F(const ScreeningLattices& sl, const Coset& coset);

Coset make_coset(const ScreeningLattices& sl, const Momentum& rep);

// Named module cosets for the l = 4 examples: "blue", "center", "green", "steinberg".
// Representatives: 0, Q, the last simple root alpha_n / sqrt(p), Q + alpha_n / sqrt(p).
Coset named_coset(const ScreeningLattices& sl, const std::string& name);
const std::vector<std::string>& module_names();

}  // namespace lvoa

#endif  // LVOA_LATTICE_HPP
