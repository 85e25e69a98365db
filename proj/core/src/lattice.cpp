#include "lvoa/lattice.hpp"

#include "lvoa/intlattice.hpp"
#include "lvoa/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace lvoa {

Rational Ambient::pair(const Momentum& u, const Momentum& v) const {
  if (u.size() != G.size() || v.size() != G.size()) throw std::invalid_argument("momentum rank mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < G.size(); ++j)
      if (G[i][j] != 0 && v[j] != 0) s += u[i] * G[i][j] * v[j];
  }
  return s;
}

Rational ScreeningLattices::h(const Momentum& lambda) const {
  return amb.norm(lambda) / 2 - amb.pair(lambda, Q);
}

Momentum q_vector(const RootSystem& rs, int p) {
  Momentum q(rs.rank);
  for (int i = 0; i < rs.rank; ++i) q[i] = p * rs.rho_dual[i] - rs.rho[i];
  return q;
}

Rational central_charge(const ScreeningLattices& sl) {
  return Rational(static_cast<long>(sl.rank())) - 12 * sl.amb.norm(sl.Q);
}

Rational conformal_dim(const ScreeningLattices& sl, const Momentum& lambda) { return sl.h(lambda); }

bool in_lattice(const RMat& basis, const Momentum& v) {
  return is_integral(coordinates_in_basis(basis, v));
}

namespace {

void require_contains(const RMat& fine, const RMat& coarse, const char* what) {
  for (const auto& b : coarse)
    if (!in_lattice(fine, b)) throw std::logic_error(std::string("lattice containment fails: ") + what);
}

Integer common_denominator(const RMat& m) {
  Integer d = 1;
  for (const auto& row : m)
    for (const auto& x : row) d = lcm_of(d, x.get_den());
  return d;
}

}  // namespace

ScreeningLattices build_screening_lattices(const RootSystem& rs, int ell) {
  if (ell <= 0 || ell % 2 != 0)
    throw std::invalid_argument("ell must be a positive even integer, got " + std::to_string(ell));
  for (int i = 0; i < rs.rank; ++i)
    if (ell % rs.gram[i][i] != 0)
      throw std::invalid_argument("(alpha_" + std::to_string(i + 1) + ", alpha_" + std::to_string(i + 1) +
                                  ") = " + std::to_string(rs.gram[i][i]) + " does not divide ell = " +
                                  std::to_string(ell));
  ScreeningLattices sl;
  sl.rs = rs;
  sl.ell = ell;
  sl.p = ell / 2;
  const int n = rs.rank;
  sl.amb.G.assign(n, zeros(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) sl.amb.G[i][j] = Rational(rs.gram[i][j]) / sl.p;
  for (int i = 0; i < n; ++i) {
    sl.basis_short.push_back(-unit_vector(n, i));
    sl.basis_long.push_back(Rational(ell / rs.gram[i][i]) * unit_vector(n, i));
    sl.basis_dual.push_back(rs.fund_weights[i]);
  }
  sl.Q = q_vector(rs, sl.p);
  sl.central_charge = central_charge(sl);

  for (int i = 0; i < n; ++i) {
    if (sl.h(sl.basis_short[i]) != 1 || sl.h(sl.basis_long[i]) != 1)
      throw std::logic_error("screening momenta do not have conformal dimension 1");
    for (int j = 0; j < n; ++j) {
      Rational g = sl.amb.pair(sl.basis_long[i], sl.basis_long[j]);
      if (!is_integer(g) || (i == j && g.get_num() % 2 != 0))
        throw std::logic_error("long screening lattice is not even");
    }
  }
  require_contains(sl.basis_short, sl.basis_long, "long in short");
  require_contains(sl.basis_dual, sl.basis_short, "short in dual");
  return sl;
}

Momentum reduce_mod_lattice(const RMat& basis, const Momentum& v) {
  Integer den = common_denominator(basis);
  RMat scaled = basis;
  for (auto& row : scaled)
    for (auto& x : row) x *= den;
  ZMat h = hermite_normal_form(to_zmat(scaled));
  const std::size_t n = v.size();
  if (h.size() != n) throw std::invalid_argument("lattice basis is not of full rank");
  RVec w = Rational(den) * v;
  for (std::size_t i = 0; i < n; ++i) {
    Rational pivot(h[i][i]);
    Integer q = floor_of(w[i] / pivot);
    if (q == 0) continue;
    for (std::size_t k = 0; k < n; ++k) w[k] -= Rational(q * h[i][k]);
  }
  Rational inv_den = 1 / Rational(den);
  return inv_den * w;
}

Coset::Coset(Momentum rep, RMat lattice_basis)
    : rep_(std::move(rep)), basis_(std::move(lattice_basis)), canonical_(reduce_mod_lattice(basis_, rep_)) {}

bool Coset::contains(const Momentum& v) const { return reduce_mod_lattice(basis_, v) == canonical_; }

bool Coset::operator==(const Coset& other) const {
  if (canonical_ != other.canonical_) return false;
  for (const auto& b : other.basis_)
    if (!in_lattice(basis_, b)) return false;
  for (const auto& b : basis_)
    if (!in_lattice(other.basis_, b)) return false;
  return true;
}

QuotientGroup quotient_group(const RMat& fine, const RMat& coarse) {
  RMat inv = inverse(fine);
  RMat m = matmul(coarse, inv);
  if (!std::all_of(m.begin(), m.end(), [](const RVec& r) { return is_integral(r); }))
    throw std::invalid_argument("quotient_group: coarse lattice is not contained in the fine lattice");
  ZMat zm = to_zmat(m);
  QuotientGroup qg;
  for (const auto& d : smith_invariants(zm))
    if (d > 1) qg.invariant_factors.push_back(d.get_si());
  ZMat h = hermite_normal_form(zm);
  const std::size_t n = fine.size();
  if (h.size() != n) throw std::invalid_argument("quotient_group: coarse lattice is not of full rank");
  std::vector<long> bounds(n), x(n, 0);
  for (std::size_t i = 0; i < n; ++i) bounds[i] = h[i][i].get_si();
  while (true) {
    RVec coords(n);
    for (std::size_t i = 0; i < n; ++i) coords[i] = x[i];
    qg.coset_reps.push_back(vec_mat(coords, fine));
    std::size_t k = 0;
    while (k < n && ++x[k] == bounds[k]) x[k++] = 0;
    if (k == n) break;
  }
  return qg;
}

long num_simples(const RootSystem& rs, int ell) {
  long count = rs.fundamental_group_order;
  for (int i = 0; i < rs.rank; ++i) {
    if (ell % rs.gram[i][i] != 0) throw std::invalid_argument("num_simples: divisibility fails");
    count *= ell / rs.gram[i][i];
  }
  return count;
}

void enumerate_lattice_points(const Ambient& amb, const RMat& basis, const Momentum& rep,
                              const Momentum& center, const Rational& radius2,
                              const std::function<void(const Momentum&)>& visit) {
  const std::size_t n = basis.size();
  if (radius2 < 0) return;
  RMat a = matmul(matmul(basis, amb.G), transpose(basis));
  // Quadratic supplement: q(u) = sum_i a_ii (u_i + sum_{j>i} a_ij u_j)^2.
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i][i] <= 0) throw std::invalid_argument("lattice Gram matrix is not positive definite");
    for (std::size_t j = i + 1; j < n; ++j) {
      a[j][i] = a[i][j];
      a[i][j] /= a[i][i];
    }
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = k; l < n; ++l) a[k][l] -= a[k][i] * a[i][l];
  }
  RVec y = coordinates_in_basis(basis, rep - center);
  std::vector<Integer> x(n);
  RVec u(n);
  std::function<void(long, const Rational&)> rec = [&](long i, const Rational& rem) {
    if (i < 0) {
      Momentum v = rep;
      for (std::size_t j = 0; j < n; ++j)
        if (x[j] != 0)
          for (std::size_t k = 0; k < v.size(); ++k) v[k] += Rational(x[j]) * basis[j][k];
      visit(v);
      return;
    }
    Rational s = y[i];
    for (std::size_t j = i + 1; j < n; ++j) s += a[i][j] * u[j];
    Integer x0 = floor_of(-s + Rational(1, 2));
    for (int dir = 0; dir < 2; ++dir) {
      Integer xi = dir == 0 ? x0 : x0 - 1;
      while (true) {
        Rational t = Rational(xi) + s;
        Rational term = a[i][i] * t * t;
        if (term > rem) break;
        x[i] = xi;
        u[i] = Rational(xi) + y[i];
        rec(i - 1, rem - term);
        if (dir == 0) ++xi;
        else --xi;
      }
    }
  };
  rec(static_cast<long>(n) - 1, radius2);
}

Groundstates groundstates(const ScreeningLattices& sl, const Coset& coset) {
  const Momentum& start = coset.canonical_rep();
  Rational r2 = sl.amb.norm(start - sl.Q);
  Groundstates gs;
  bool first = true;
  enumerate_lattice_points(sl.amb, coset.lattice_basis(), start, sl.Q, r2, [&](const Momentum& v) {
    Rational h = sl.h(v);
    if (first || h < gs.h) {
      gs.h = h;
      gs.states.clear();
      first = false;
    }
    if (h == gs.h) gs.states.push_back(v);
  });
  std::sort(gs.states.begin(), gs.states.end(), RVecLess{});
  return gs;
}

Rational quadratic_form_F(const ScreeningLattices& sl, const Coset& coset) {
  Rational r = 2 * sl.h(coset.rep());
  Integer k = floor_of(r / 2);
  return r - 2 * Rational(k);
}

Coset make_coset(const ScreeningLattices& sl, const Momentum& rep) {
  if (rep.size() != sl.rank()) throw std::invalid_argument("coset representative has wrong rank");
  if (!in_lattice(sl.basis_dual, rep))
    throw std::invalid_argument("representative " + to_string(rep) + " is not in the dual lattice");
  return Coset(rep, sl.basis_long);
}

const std::vector<std::string>& module_names() {
  static const std::vector<std::string> names = {"blue", "center", "green", "steinberg"};
  return names;
}

Coset named_coset(const ScreeningLattices& sl, const std::string& name) {
  Momentum last = unit_vector(sl.rank(), sl.rank() - 1);
  if (name == "blue") return make_coset(sl, zeros(sl.rank()));
  if (name == "center") return make_coset(sl, sl.Q);
  if (name == "green") return make_coset(sl, last);
  if (name == "steinberg") return make_coset(sl, sl.Q + last);
  throw std::invalid_argument("unknown module name '" + name + "' (expected blue, center, green or steinberg)");
}

}  // namespace lvoa
