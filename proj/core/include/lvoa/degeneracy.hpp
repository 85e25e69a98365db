#ifndef LVOA_DEGENERACY_HPP
#define LVOA_DEGENERACY_HPP

#include "lvoa/rootdata.hpp"

#include <optional>
#include <string>

namespace lvoa {

// l_alpha = ord(q^{(alpha, alpha)}) = l / gcd(l, (alpha, alpha)), one entry per simple root.
std::vector<long> divided_power_orders(const RootSystem& rs, int ell);

// Simple system of the short roots: the short positive roots that are not a sum of two others.
// Rows are simple-root coordinates of the ambient system, highest height first.
std::vector<IVec> short_simple_roots(const RootSystem& rs);

// Label of a simply-laced Cartan matrix, components joined with " x " and powers folded:
// "A1^3", "A3", "D4", "A1^2 x A2". Small D-types are renamed (D2 = A1^2, D3 = A3).
std::string simply_laced_label(const IMat& cartan);

// Series letter swapped for the dual system: B <-> C; A, D, E, F4, G2 map to themselves.
std::string dual_label(const RootSystem& rs);

struct Classification {
  std::string category;  // "trivial", "generic", "duality", "degenerate", "exotic"
  std::string g0;        // "0" in the trivial case
  std::string gell;
  std::vector<long> orders;
  bool computed = true;  // false for the exotic case
  std::string note;
};

Classification classify(const RootSystem& rs, int ell);

struct ClassificationRow {
  std::string algebra;
  int ell = 0;
  std::string expected_category;
  std::string expected_g0;
  std::string expected_gell;
  Classification computed;
  bool match = false;
};

// Representative (g, l) instances for every row of the degeneracy table.
std::vector<ClassificationRow> classification_table();

struct DegeneracyReport {
  std::string g;
  int ell = 0;
  std::string g0;
  std::string gell;
  std::vector<long> orders;

  long num_simples = 0;        // formula |Lambda_W / Lambda_R| prod l / (alpha_i, alpha_i)
  long num_simples_snf = 0;    // order of (Lambda+)* / Lambda+ by Smith normal form
  std::string num_simples_table;  // e.g. "2*2"

  std::string g0_table_label;  // label as printed in the extension table, e.g. "A1^3 l=2"
  long num_simples_g0 = 0;      // det(p Gram) of the short simple roots
  long num_simples_g0_snf = 0;  // order of the dual quotient of p * (short simple roots)
  std::string num_simples_g0_table;

  long dim_X = 0;                  // sqrt(num_simples_g0 / num_simples)
  long dim_X_index = 0;            // [Lambda+_g : Lambda+_g0] by Smith normal form
  bool dim_X_square_ratio = false;  // the ratio is a perfect square

  Rational central_charge;        // rank - 12 (Q, Q)
  Rational central_charge_table;  // closed form from the extension table
  std::string central_charge_formula;
  std::string global_symmetry;

  std::vector<std::string> discrepancies;
  bool consistent() const;
};

// Supported pairs: (B_n, 4), (C_n, 4), (F4, 4), (G2, 6). Others throw std::invalid_argument.
DegeneracyReport extension_report(const RootSystem& rs, int ell);

}  // namespace lvoa

#endif  // LVOA_DEGENERACY_HPP
