#include "lvoa/linalg.hpp"

#include <stdexcept>

namespace lvoa {

RMat identity_matrix(std::size_t n) {
  RMat m(n, zeros(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RMat transpose(const RMat& a) {
  if (a.empty()) return {};
  RMat t(a[0].size(), zeros(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

RMat matmul(const RMat& a, const RMat& b) {
  if (a.empty()) return {};
  std::size_t inner = b.size();
  if (a[0].size() != inner) throw std::invalid_argument("matmul: shape mismatch");
  std::size_t cols = inner ? b[0].size() : 0;
  RMat c(a.size(), zeros(cols));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

RVec mat_vec(const RMat& a, const RVec& x) {
  RVec y = zeros(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != x.size()) throw std::invalid_argument("mat_vec: shape mismatch");
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  }
  return y;
}

RVec vec_mat(const RVec& x, const RMat& a) {
  if (a.size() != x.size()) throw std::invalid_argument("vec_mat: shape mismatch");
  RVec y = zeros(a.empty() ? 0 : a[0].size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) y[j] += x[i] * a[i][j];
  }
  return y;
}

Rational determinant(RMat a) {
  std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

std::vector<std::size_t> rref(RMat& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  std::size_t rows = a.size(), cols = a[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    Rational inv = 1 / a[r][c];
    for (std::size_t k = c; k < cols; ++k) a[r][k] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t k = c; k < cols; ++k)
        if (a[r][k] != 0) a[i][k] -= f * a[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank_of(RMat a) { return rref(a).size(); }

RMat nullspace(const RMat& a, std::size_t cols) {
  RMat m = a;
  for (const auto& row : m)
    if (row.size() != cols) throw std::invalid_argument("nullspace: ragged matrix");
  auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  RMat basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RVec v = zeros(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

RMat inverse(const RMat& a) {
  std::size_t n = a.size();
  RMat aug(n, zeros(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("inverse: matrix not square");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots.back() >= n) throw std::domain_error("inverse: singular matrix");
  RMat inv(n, zeros(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

RVec coordinates_in_basis(const RMat& rows, const RVec& v) {
  return vec_mat(v, inverse(rows));
}

}  // namespace lvoa
