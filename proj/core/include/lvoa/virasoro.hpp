#ifndef LVOA_VIRASORO_HPP
#define LVOA_VIRASORO_HPP

#include "lvoa/vertexop.hpp"

#include <memory>
#include <optional>

namespace lvoa {

struct StressTensor {
  FieldElement element;
  Momentum Q;
  Rational c;
  Ambient amb;
};

// T = 1/2 sum_i d phi_{b_i} d phi_{b_i^*} + d^2 phi_Q for the ambient basis.
StressTensor stress_tensor(const ScreeningLattices& sl);
// Same, built from an arbitrary basis of the ambient space (rows) and its dual basis.
StressTensor stress_tensor(const ScreeningLattices& sl, const RMat& basis);

// L_n = Y(T)_{-2-n}.
FieldElement virasoro_mode(const StressTensor& st, long n, const FieldElement& b);

// Memoizing family of L_n operators.
class VirasoroAction {
 public:
  explicit VirasoroAction(StressTensor st) : st_(std::move(st)) {}
  FieldElement L(long n, const FieldElement& b) const;
  const StressTensor& stress() const { return st_; }

 private:
  StressTensor st_;
  mutable std::map<long, std::unique_ptr<ModeOperator>> modes_;
};

// L0 eigenvalue (beta,beta)/2 - (beta,Q) + |u| of a basis term.
Rational l0_eigenvalue(const ScreeningLattices& sl, const TermKey& key);

struct CommutatorReport {
  long m = 0;
  long n = 0;
  std::size_t states_checked = 0;
  bool ok = true;
  std::optional<FieldElement> counterexample;
};

// [L_m, L_n] v = (m - n) L_{m+n} v + c/12 (m^3 - m) delta_{m+n,0} v for every v in `states`.
CommutatorReport commutator_check(const VirasoroAction& vir, long m, long n, const std::vector<FieldElement>& states);

}  // namespace lvoa

#endif  // LVOA_VIRASORO_HPP
