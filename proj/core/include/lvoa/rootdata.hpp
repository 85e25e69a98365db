#ifndef LVOA_ROOTDATA_HPP
#define LVOA_ROOTDATA_HPP

// Finite-type root systems. Short roots have norm 2; long roots norm 4 (6 for G2).
// cartan(i,j) = 2(a_i,a_j)/(a_j,a_j), so gram(i,j) = d_j * cartan(i,j).

#include "lvoa/rational.hpp"

#include <string>

namespace lvoa {

struct RootSystem {
  char series = 'A';
  int rank = 0;
  IMat cartan;
  IMat gram;
  IVec d;  // d_i = (a_i, a_i) / 2
  std::vector<IVec> positive_roots;  // simple-root coordinates, sorted by height
  RVec rho;
  RVec rho_dual;
  RMat fund_weights;  // row i is lambda_i in the simple-root basis
  long fundamental_group_order = 1;

  std::string label() const;  // e.g. "B2"
  long norm(const IVec& root) const;
  Rational pairing(const RVec& u, const RVec& v) const;  // (u, v) in simple-root coordinates
  std::vector<IVec> short_positive_roots() const;
  std::vector<IVec> long_positive_roots() const;
  long short_norm() const;
  long long_norm() const;
  bool simply_laced() const { return short_norm() == long_norm(); }
};

// Accepts A_n (n>=1), B_n (n>=1, B1 = A1), C_n (n>=2), D_n (n>=3), F4, G2.
RootSystem build_root_system(char series, int rank);

// Parses labels such as "B2", "b3", "G2".
RootSystem root_system_from_label(const std::string& label);

// Builds every derived quantity from a Gram matrix of simple roots.
RootSystem root_system_from_gram(char series, const IMat& gram);

std::vector<IVec> positive_roots(const RootSystem& rs);

struct WeylVectors {
  RVec rho;
  RVec rho_dual;
};
WeylVectors weyl_vectors(const RootSystem& rs);

RMat fundamental_weights(const RootSystem& rs);

// Coroot system rescaled so that its short roots have norm 2; cartan is transposed.
RootSystem dual_root_system(const RootSystem& rs);

}  // namespace lvoa

#endif  // LVOA_ROOTDATA_HPP
