#include "lvoa/screening.hpp"

#include "lvoa/linalg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace lvoa {

BraidingMatrix braiding_matrix(const ScreeningLattices& sl) {
  const std::size_t n = sl.rank();
  BraidingMatrix b{RMat(n, zeros(n))};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b.r[i][j] = sl.amb.pair(sl.basis_short[i], sl.basis_short[j]);
  return b;
}

FieldElement apply_screening(const Ambient& amb, const Momentum& alpha, const FieldElement& state) {
  return residue_int(amb, FieldElement::exp(alpha), state);
}

Screening::Screening(const Ambient& amb, Momentum alpha)
    : amb_(amb), alpha_(std::move(alpha)), op_(amb, FieldElement::exp(alpha_), Rational(-1)) {}

FieldElement Screening::operator()(const FieldElement& state) const {
  for (const auto& m : state.momenta())
    if (!is_integer(amb_.pair(alpha_, m)))
      throw std::domain_error("screening " + to_string(alpha_) + " has fractional pairing with momentum " +
                              to_string(m) + "; use the fractional residue");
  return op_(state);
}

// ---------------------------------------------------------------------------

std::vector<Momentum> short_screening_set(const ScreeningLattices& sl) {
  const RootSystem& rs = sl.rs;
  const std::size_t n = sl.rank();
  bool degenerate = false;
  for (std::size_t i = 0; i < n; ++i) {
    Rational r = sl.amb.norm(sl.basis_short[i]);
    if (is_integer(r) && r.get_num() % 2 == 0) degenerate = true;
  }
  if (!degenerate) return sl.basis_short;

  std::vector<IVec> shorts = rs.short_positive_roots();
  std::vector<IVec> simple;
  for (const auto& r : shorts) {
    bool decomposable = false;
    for (const auto& a : shorts) {
      IVec rest(r.size());
      for (std::size_t k = 0; k < r.size(); ++k) rest[k] = r[k] - a[k];
      if (std::find(shorts.begin(), shorts.end(), rest) != shorts.end()) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple.push_back(r);
  }
  auto height = [](const IVec& v) { return std::accumulate(v.begin(), v.end(), 0L); };
  std::stable_sort(simple.begin(), simple.end(), [&](const IVec& a, const IVec& b) {
    if (height(a) != height(b)) return height(a) > height(b);
    return a > b;
  });
  std::vector<Momentum> out;
  for (const auto& r : simple) out.push_back(-to_rvec(r));
  return out;
}

int weyl_power_exponent(const ScreeningLattices& sl, const Coset& coset, const Momentum& s) {
  Groundstates gs = groundstates(sl, coset);
  Rational ss = sl.amb.norm(s);
  Rational best = 0;
  for (const auto& mu : gs.states) {
    Rational v = abs(Rational(2 * sl.amb.pair(mu - sl.Q, s) / ss));
    if (v > best) best = v;
  }
  if (!is_integer(best)) throw std::domain_error("Weyl power is not an integer for screening " + to_string(s));
  return static_cast<int>(to_long(best));
}

int weyl_power_exponent(const ScreeningLattices& sl, const Coset& coset, int i) {
  if (i < 0 || static_cast<std::size_t>(i) >= sl.rank()) throw std::out_of_range("simple root index out of range");
  return weyl_power_exponent(sl, coset, sl.basis_short[static_cast<std::size_t>(i)]);
}

long weyl_power_congruence(const ScreeningLattices& sl, const Momentum& lambda, int i) {
  const long norm = sl.rs.gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
  const long modulus = sl.ell / norm;
  Rational pairing = sl.p * sl.amb.pair(lambda, unit_vector(sl.rank(), static_cast<std::size_t>(i)));
  Rational k = (2 * pairing - sl.ell) / norm + 1;
  if (!is_integer(k)) throw std::domain_error("Weyl power congruence is fractional");
  long r = to_long(k) % modulus;
  return r < 0 ? r + modulus : r;
}

// ---------------------------------------------------------------------------

std::vector<FieldElement> GradedLayer::basis() const {
  std::vector<FieldElement> out;
  out.reserve(keys.size());
  for (const auto& k : keys) out.push_back(FieldElement::term(k));
  return out;
}

std::vector<Monomial> colored_partitions(std::size_t rank, int level) {
  std::vector<Monomial> out;
  if (level < 0) return out;
  std::vector<Factor> factors;
  for (int order = 1; order <= level; ++order)
    for (int idx = 0; idx < static_cast<int>(rank); ++idx) factors.push_back(Factor{idx, order});
  std::sort(factors.begin(), factors.end());
  Monomial cur;
  // Factors are emitted in nondecreasing order so each multiset appears once.
  std::function<void(int, std::size_t)> rec = [&](int remaining, std::size_t first) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = first; i < factors.size(); ++i) {
      if (factors[i].order > remaining) continue;
      cur.push_back(factors[i]);
      rec(remaining - factors[i].order, i);
      cur.pop_back();
    }
  };
  rec(level, 0);
  std::sort(out.begin(), out.end());
  return out;
}

GradedLayer layer_basis(const ScreeningLattices& sl, const Coset& coset, const Rational& h) {
  GradedLayer layer;
  layer.h = h;
  Rational r2 = 2 * h + sl.amb.norm(sl.Q);
  std::vector<Momentum> points;
  enumerate_lattice_points(sl.amb, coset.lattice_basis(), coset.canonical_rep(), sl.Q, r2,
                           [&](const Momentum& mu) { points.push_back(mu); });
  for (const auto& mu : points) {
    Rational gap = h - sl.h(mu);
    if (!is_integer(gap) || gap < 0) continue;
    for (auto& u : colored_partitions(sl.rank(), static_cast<int>(to_long(gap))))
      layer.keys.push_back(TermKey{mu, std::move(u)});
  }
  std::sort(layer.keys.begin(), layer.keys.end());
  return layer;
}

bool integer_pairing(const ScreeningLattices& sl, const Coset& coset, const Momentum& s) {
  if (!is_integer(sl.amb.pair(s, coset.rep()))) return false;
  for (const auto& b : coset.lattice_basis())
    if (!is_integer(sl.amb.pair(s, b))) return false;
  return true;
}

namespace {

// Matrix of `op` on the layer basis; rows indexed by the output terms that occur.
RMat screening_matrix(const Screening& op, const GradedLayer& layer) {
  std::map<TermKey, std::size_t> row_of;
  std::vector<FieldElement> images;
  images.reserve(layer.dim());
  for (const auto& k : layer.keys) {
    images.push_back(op(FieldElement::term(k)));
    for (const auto& [t, c] : images.back().terms()) row_of.emplace(t, 0);
  }
  std::size_t idx = 0;
  for (auto& [t, r] : row_of) r = idx++;
  RMat m(row_of.size(), zeros(layer.dim()));
  for (std::size_t col = 0; col < images.size(); ++col)
    for (const auto& [t, c] : images[col].terms()) m[row_of[t]][col] = c;
  return m;
}

FieldElement combine(const GradedLayer& layer, const RVec& coords, std::size_t rank) {
  FieldElement out(rank);
  for (std::size_t i = 0; i < coords.size(); ++i) out.add_term(layer.keys[i], coords[i]);
  return out;
}

}  // namespace

KernelRow kernel_layer(const ScreeningLattices& sl, const Coset& coset, const std::vector<Momentum>& screenings,
                       const Rational& h) {
  GradedLayer layer = layer_basis(sl, coset, h);
  KernelRow row;
  row.h = h;
  row.dim = layer.dim();
  RMat stacked;
  bool annihilated = false;
  for (const auto& s : screenings) {
    if (integer_pairing(sl, coset, s)) {
      Screening op(sl.amb, s);
      RMat m = screening_matrix(op, layer);
      row.kernel_dims.push_back(nullspace(m, layer.dim()).size());
      row.methods.push_back("exact");
      stacked.insert(stacked.end(), m.begin(), m.end());
      continue;
    }
    // Fractional pairing: the coset is acted on by the power Z^k instead of Z.
    int k = weyl_power_exponent(sl, coset, s);
    Rational nn = sl.amb.norm(s);
    if (k == 0) {
      row.kernel_dims.push_back(0);
      row.methods.push_back("weyl-power k=0");
      annihilated = true;
    } else if (k >= 2 && is_integer(nn) && nn.get_num() % 2 != 0) {
      row.kernel_dims.push_back(layer.dim());
      row.methods.push_back("nichols k=" + std::to_string(k));
    } else {
      throw std::domain_error("screening " + to_string(s) + " has fractional pairing with the coset of " +
                              to_string(coset.rep()) + " and Weyl power " + std::to_string(k) +
                              "; no exact kernel path");
    }
  }
  if (annihilated) {
    row.intersection_dim = 0;
    return row;
  }
  RMat ker = nullspace(stacked, layer.dim());
  row.intersection_dim = ker.size();
  for (const auto& v : ker) row.intersection_basis.push_back(combine(layer, v, sl.rank()));
  return row;
}

KernelReport kernel_report(const ScreeningLattices& sl, const Coset& coset, const std::vector<Momentum>& screenings,
                           int max_level, const std::string& module) {
  KernelReport rep;
  rep.module = module;
  rep.screenings = screenings;
  Rational h0 = groundstates(sl, coset).h;
  for (int j = 0; j <= max_level; ++j) rep.rows.push_back(kernel_layer(sl, coset, screenings, h0 + j));
  return rep;
}

// ---------------------------------------------------------------------------

bool NicholsReport::ok() const {
  return std::all_of(relations.begin(), relations.end(), [](const RelationCheck& r) { return r.ok; });
}

NicholsReport nichols_check(const ScreeningLattices& sl, const std::vector<Momentum>& screenings,
                            const std::vector<Coset>& cosets, int max_level) {
  std::vector<Screening> ops;
  for (const auto& s : screenings) ops.emplace_back(sl.amb, s);
  std::vector<FieldElement> states;
  for (const auto& c : cosets) {
    Rational h0 = groundstates(sl, c).h;
    for (int j = 0; j <= max_level; ++j)
      for (auto& b : layer_basis(sl, c, h0 + j).basis()) states.push_back(std::move(b));
  }
  NicholsReport rep;
  auto run = [&](RelationCheck rc, const std::function<FieldElement(const FieldElement&)>& rel) {
    for (const auto& v : states) {
      ++rc.states_checked;
      FieldElement out = rel(v);
      if (!out.is_zero()) {
        rc.ok = false;
        rc.counterexample = v;
        break;
      }
    }
    rep.relations.push_back(std::move(rc));
  };
  for (std::size_t i = 0; i < ops.size(); ++i) {
    Rational nn = sl.amb.norm(screenings[i]);
    if (is_integer(nn) && nn.get_num() % 2 != 0) {
      RelationCheck rc;
      rc.relation = "Z" + std::to_string(i + 1) + "^2";
      run(rc, [&](const FieldElement& v) { return ops[i](ops[i](v)); });
    }
  }
  for (std::size_t i = 0; i < ops.size(); ++i)
    for (std::size_t j = i + 1; j < ops.size(); ++j) {
      Rational r = sl.amb.pair(screenings[i], screenings[j]);
      if (!is_integer(r)) continue;
      bool anti = r.get_num() % 2 != 0;
      RelationCheck rc;
      std::string inner = "Z" + std::to_string(i + 1) + ",Z" + std::to_string(j + 1);
      rc.relation = anti ? "{" + inner + "}" : "[" + inner + "]";
      run(rc, [&](const FieldElement& v) {
        FieldElement a = ops[i](ops[j](v));
        FieldElement b = ops[j](ops[i](v));
        return anti ? a + b : a - b;
      });
    }
  return rep;
}

// ---------------------------------------------------------------------------

LongScreeningReport long_screening_suite(const ScreeningLattices& sl) {
  LongScreeningReport rep;
  const std::size_t n = sl.rank();
  StressTensor st = stress_tensor(sl);
  std::vector<Screening> longs;
  for (const auto& b : sl.basis_long) longs.emplace_back(sl.amb, b);
  for (const auto& z : longs) {
    if (!z(FieldElement::vacuum(n)).is_zero()) rep.vacuum_killed = false;
    if (!z(st.element).is_zero()) rep.stress_tensor_killed = false;
  }
  if (n == 1) {
    const Screening& z = longs[0];
    FieldElement w = FieldElement::exp(Momentum{Rational(-sl.p)});
    for (int k = 0; k < 3; ++k) {
      rep.triplet.push_back(w);
      w = z(w);
    }
    rep.triplet_closes = w.is_zero();
    rep.triplet_in_kernel = true;
    for (const auto& s : short_screening_set(sl)) {
      Screening zs(sl.amb, s);
      for (const auto& t : rep.triplet)
        if (!zs(t).is_zero()) rep.triplet_in_kernel = false;
    }
  }
  Coset vac = make_coset(sl, zeros(n));
  std::vector<FieldElement> states;
  for (int j = 0; j <= 1; ++j)
    for (auto& b : layer_basis(sl, vac, Rational(j)).basis()) states.push_back(std::move(b));
  for (std::size_t i = 0; i < longs.size(); ++i)
    for (std::size_t j = i + 1; j < longs.size(); ++j) {
      std::size_t nonzero = 0;
      for (const auto& v : states)
        if (!(longs[i](longs[j](v)) - longs[j](longs[i](v))).is_zero()) ++nonzero;
      rep.commutator_notes.push_back("[Z" + std::to_string(i + 1) + "+, Z" + std::to_string(j + 1) +
                                     "+] nonzero on " + std::to_string(nonzero) + " of " +
                                     std::to_string(states.size()) + " vacuum states with h <= 1");
    }
  return rep;
}

GradingValues grading_ops(const ScreeningLattices& sl, int i, const FieldElement& state, int d) {
  if (i < 0 || static_cast<std::size_t>(i) >= sl.rank()) throw std::out_of_range("simple root index out of range");
  const Momentum& lambda = state.single_momentum();
  const std::size_t n = sl.rank();
  const std::size_t ii = static_cast<std::size_t>(i);
  auto eigen = [&](const Momentum& x) -> Rational {
    FieldElement img = residue_int(sl.amb, FieldElement::dphi(1, x), state);
    const auto& [key, c] = *state.terms().begin();
    return img.coefficient(key) / c;
  };
  GradingValues g;
  Rational r = eigen(unit_vector(n, ii));
  g.k_phase = r - 2 * Rational(floor_of(r / 2));
  // alpha_i^vee / sqrt(p) = (2 / (alpha_i, alpha_i)) e_i in ambient coordinates.
  Rational coroot_scale = make_rational(2, sl.rs.gram[ii][ii]);
  g.h_displayed = coroot_scale * sl.amb.pair(unit_vector(n, ii), lambda) * d;
  g.h_residue = eigen(Rational(-d) / sl.p * sl.basis_long[ii]);
  return g;
}

}  // namespace lvoa
