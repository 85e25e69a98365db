#ifndef LVOA_SCREENING_HPP
#define LVOA_SCREENING_HPP

#include "lvoa/virasoro.hpp"

#include <optional>
#include <string>

namespace lvoa {

// q_ij = e^{i pi r_ij} with r_ij = (alpha_i-, alpha_j-).
struct BraidingMatrix {
  RMat r;
};

BraidingMatrix braiding_matrix(const ScreeningLattices& sl);

// Z_alpha = Y(e^alpha)_{-1}. Requires integer pairings with every momentum of `state`.
FieldElement apply_screening(const Ambient& amb, const Momentum& alpha, const FieldElement& state);

// Memoized screening operator.
class Screening {
 public:
  Screening(const Ambient& amb, Momentum alpha);
  FieldElement operator()(const FieldElement& state) const;
  const Momentum& momentum() const { return alpha_; }

 private:
  Ambient amb_;
  Momentum alpha_;
  ModeOperator op_;
};

// Screening momenta for the kernel: -alpha_i/sqrt(p) in the generic case, otherwise
// the negated simple roots of the short-root subsystem (highest height first).
std::vector<Momentum> short_screening_set(const ScreeningLattices& sl);

// Power k of the screening s = -alpha_i/sqrt(p) realizing the Weyl reflection on the coset:
// max over groundstates mu of |2 (mu - Q, s) / (s, s)|.
int weyl_power_exponent(const ScreeningLattices& sl, const Coset& coset, int i);
int weyl_power_exponent(const ScreeningLattices& sl, const Coset& coset, const Momentum& s);
// Residue class of k modulo l/(alpha_i, alpha_i) predicted from (lambda, alpha_i):
// k = (2 (lambda sqrt(p), alpha_i) - l) / (alpha_i, alpha_i) + 1.
long weyl_power_congruence(const ScreeningLattices& sl, const Momentum& lambda, int i);

struct GradedLayer {
  Rational h;
  std::vector<TermKey> keys;  // basis u e^{mu}, sorted
  std::size_t dim() const { return keys.size(); }
  std::vector<FieldElement> basis() const;
};

// Monomials of total order `level` in `rank` colors (colored partitions).
std::vector<Monomial> colored_partitions(std::size_t rank, int level);

GradedLayer layer_basis(const ScreeningLattices& sl, const Coset& coset, const Rational& h);

// True when every screening has integer pairing with the whole coset.
bool integer_pairing(const ScreeningLattices& sl, const Coset& coset, const Momentum& s);

struct KernelRow {
  Rational h;
  std::size_t dim = 0;
  std::vector<std::size_t> kernel_dims;  // one per screening
  std::vector<std::string> methods;      // "exact", "weyl-power k=0" or "nichols k=<k>"
  std::size_t intersection_dim = 0;
  std::vector<FieldElement> intersection_basis;
};

struct KernelReport {
  std::string module;
  std::vector<Momentum> screenings;
  std::vector<KernelRow> rows;
};

// Exact nullspaces where the screening pairs integrally with the coset. Otherwise the
// screening acts through its Weyl power k: k = 0 gives the identity, k >= 2 on an odd
// screening gives Z^k = 0.
KernelRow kernel_layer(const ScreeningLattices& sl, const Coset& coset, const std::vector<Momentum>& screenings,
                       const Rational& h);

// Layers h_min, h_min + 1, ..., h_min + max_level.
KernelReport kernel_report(const ScreeningLattices& sl, const Coset& coset, const std::vector<Momentum>& screenings,
                           int max_level, const std::string& module = "");

struct RelationCheck {
  std::string relation;  // e.g. "Z1^2" or "[Z1,Z2]" or "{Z1,Z2}"
  std::size_t states_checked = 0;
  bool ok = true;
  std::optional<FieldElement> counterexample;
};

struct NicholsReport {
  std::vector<RelationCheck> relations;
  bool ok() const;
};

// Z_i^2 = 0 for odd (s_i, s_i); [Z_i, Z_j]_{+-} = 0 for integer (s_i, s_j), anticommutator when odd.
NicholsReport nichols_check(const ScreeningLattices& sl, const std::vector<Momentum>& screenings,
                            const std::vector<Coset>& cosets, int max_level);

struct LongScreeningReport {
  bool vacuum_killed = true;           // Z_{alpha_i+}(e^0) = 0
  bool stress_tensor_killed = true;    // Z_{alpha_i+}(T) = 0
  std::vector<FieldElement> triplet;   // W-, W0, W+ (rank one only)
  bool triplet_closes = false;         // Z^3 W- = 0
  bool triplet_in_kernel = false;      // short screenings kill W-, W0, W+
  // Commutators of long screenings on the vacuum module, recorded but not asserted.
  std::vector<std::string> commutator_notes;
};

LongScreeningReport long_screening_suite(const ScreeningLattices& sl);

struct GradingValues {
  Rational k_phase;      // K = e^{i pi k_phase}, k_phase in [0, 2)
  Rational h_displayed;  // (alpha_i^vee, lambda/sqrt(p)) d
  Rational h_residue;    // resY(d phi_{-alpha_i^vee sqrt(p) d/p}) eigenvalue
};

GradingValues grading_ops(const ScreeningLattices& sl, int i, const FieldElement& state, int d = 1);

}  // namespace lvoa

#endif  // LVOA_SCREENING_HPP
