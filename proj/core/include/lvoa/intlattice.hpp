#ifndef LVOA_INTLATTICE_HPP
#define LVOA_INTLATTICE_HPP

// Integer row-lattice normal forms.

#include "lvoa/rational.hpp"

namespace lvoa {

using ZVec = std::vector<Integer>;
using ZMat = std::vector<ZVec>;

ZMat to_zmat(const RMat& m);  // throws unless every entry is integral

// Row-style Hermite normal form of the lattice spanned by the rows.
// Zero rows are dropped; pivots are positive and entries above a pivot lie in [0, pivot).
ZMat hermite_normal_form(ZMat rows);

// Nonzero invariant factors d_1 | d_2 | ... of the Smith normal form.
ZVec smith_invariants(ZMat m);

}  // namespace lvoa

#endif  // LVOA_INTLATTICE_HPP
