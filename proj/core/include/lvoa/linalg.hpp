#ifndef LVOA_LINALG_HPP
#define LVOA_LINALG_HPP

// Exact dense linear algebra over the rationals.

#include "lvoa/rational.hpp"

namespace lvoa {

RMat identity_matrix(std::size_t n);
RMat transpose(const RMat& a);
RMat matmul(const RMat& a, const RMat& b);
RVec mat_vec(const RMat& a, const RVec& x);
RVec vec_mat(const RVec& x, const RMat& a);

Rational determinant(RMat a);
RMat inverse(const RMat& a);  // throws std::domain_error when singular

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(RMat& a);
std::size_t rank_of(RMat a);

// Basis of {x : a x = 0}; `cols` gives the column count when a has no rows.
RMat nullspace(const RMat& a, std::size_t cols);

// Coordinates x with x * rows = v, for a square invertible row basis.
RVec coordinates_in_basis(const RMat& rows, const RVec& v);

}  // namespace lvoa

#endif  // LVOA_LINALG_HPP
