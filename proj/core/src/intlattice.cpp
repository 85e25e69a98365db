#include "lvoa/intlattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace lvoa {

namespace {

Integer fdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void row_axpy(ZVec& dst, const Integer& f, const ZVec& src) {
  for (std::size_t k = 0; k < dst.size(); ++k) dst[k] -= f * src[k];
}

}  // namespace

ZMat to_zmat(const RMat& m) {
  ZMat z;
  z.reserve(m.size());
  for (const auto& row : m) {
    ZVec r;
    r.reserve(row.size());
    for (const auto& x : row) {
      if (!is_integer(x)) throw std::domain_error("matrix entry " + to_string(x) + " is not integral");
      r.push_back(x.get_num());
    }
    z.push_back(std::move(r));
  }
  return z;
}

ZMat hermite_normal_form(ZMat a) {
  if (a.empty()) return a;
  std::size_t rows = a.size(), cols = a[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Euclid on column c among rows r..end until a single nonzero entry remains.
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (a[i][c] != 0 && (best == rows || abs(a[i][c]) < abs(a[best][c]))) best = i;
      if (best == rows) break;
      std::swap(a[r], a[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (a[i][c] == 0) continue;
        row_axpy(a[i], fdiv(a[i][c], a[r][c]), a[r]);
        if (a[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (a[r][c] == 0) continue;
    if (a[r][c] < 0)
      for (auto& x : a[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) row_axpy(a[i], fdiv(a[i][c], a[r][c]), a[r]);
    ++r;
  }
  a.resize(r);
  return a;
}

ZVec smith_invariants(ZMat a) {
  if (a.empty()) return {};
  std::size_t rows = a.size(), cols = a[0].size();
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Choose the smallest nonzero entry of the trailing block as pivot.
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    std::swap(a[t], a[pi]);
    for (auto& row : a) std::swap(row[t], row[pj]);
    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      if (a[i][t] == 0) continue;
      row_axpy(a[i], fdiv(a[i][t], a[t][t]), a[t]);
      if (a[i][t] != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (a[t][j] == 0) continue;
      Integer f = fdiv(a[t][j], a[t][t]);
      for (std::size_t i = 0; i < rows; ++i) a[i][j] -= f * a[i][t];
      if (a[t][j] != 0) clean = false;
    }
    if (!clean) continue;
    // Enforce divisibility of the remaining block by the pivot.
    bool divides = true;
    for (std::size_t i = t + 1; i < rows && divides; ++i)
      for (std::size_t j = t + 1; j < cols; ++j)
        if (a[i][j] % a[t][t] != 0) {
          for (std::size_t k = 0; k < cols; ++k) a[t][k] += a[i][k];
          divides = false;
          break;
        }
    if (!divides) continue;
    ++t;
  }
  ZVec d;
  for (std::size_t i = 0; i < t; ++i) d.push_back(abs(a[i][i]));
  return d;
}

}  // namespace lvoa
