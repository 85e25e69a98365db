#include "lvoa/virasoro.hpp"

#include "lvoa/linalg.hpp"

#include <stdexcept>

namespace lvoa {

StressTensor stress_tensor(const ScreeningLattices& sl) { return stress_tensor(sl, identity_matrix(sl.rank())); }

StressTensor stress_tensor(const ScreeningLattices& sl, const RMat& basis) {
  const std::size_t n = sl.rank();
  if (basis.size() != n) throw std::invalid_argument("stress tensor basis has wrong size");
  RMat gram = matmul(matmul(basis, sl.amb.G), transpose(basis));
  RMat dual = matmul(inverse(gram), basis);
  StressTensor st{FieldElement(n), sl.Q, sl.central_charge, sl.amb};
  for (std::size_t i = 0; i < n; ++i)
    st.element += make_rational(1, 2) * (FieldElement::dphi(1, basis[i]) * FieldElement::dphi(1, dual[i]));
  if (!is_zero(sl.Q)) st.element += FieldElement::dphi(2, sl.Q);
  return st;
}

FieldElement virasoro_mode(const StressTensor& st, long n, const FieldElement& b) {
  return mode_op(st.amb, st.element, Rational(-2 - n), b);
}

FieldElement VirasoroAction::L(long n, const FieldElement& b) const {
  auto it = modes_.find(n);
  if (it == modes_.end())
    it = modes_.emplace(n, std::make_unique<ModeOperator>(st_.amb, st_.element, Rational(-2 - n))).first;
  return (*it->second)(b);
}

Rational l0_eigenvalue(const ScreeningLattices& sl, const TermKey& key) {
  return sl.h(key.momentum) + degree(key.monomial);
}

CommutatorReport commutator_check(const VirasoroAction& vir, long m, long n, const std::vector<FieldElement>& states) {
  CommutatorReport rep;
  rep.m = m;
  rep.n = n;
  const Rational& c = vir.stress().c;
  for (const auto& v : states) {
    FieldElement lhs = vir.L(m, vir.L(n, v)) - vir.L(n, vir.L(m, v));
    FieldElement rhs = Rational(m - n) * vir.L(m + n, v);
    if (m + n == 0) rhs += (c / 12 * Rational(m * m * m - m)) * v;
    ++rep.states_checked;
    if (lhs != rhs) {
      rep.ok = false;
      rep.counterexample = v;
      return rep;
    }
  }
  return rep;
}

}  // namespace lvoa
