#include "lvoa/degeneracy.hpp"

#include "lvoa/intlattice.hpp"
#include "lvoa/lattice.hpp"
#include "lvoa/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace lvoa {

std::vector<long> divided_power_orders(const RootSystem& rs, int ell) {
  if (ell <= 0) throw std::invalid_argument("l must be positive");
  std::vector<long> out;
  for (int i = 0; i < rs.rank; ++i) out.push_back(ell / std::gcd(static_cast<long>(ell), rs.gram[i][i]));
  return out;
}

std::vector<IVec> short_simple_roots(const RootSystem& rs) {
  std::vector<IVec> shorts = rs.short_positive_roots();
  std::set<IVec> pool(shorts.begin(), shorts.end());
  std::vector<IVec> simple;
  for (const auto& r : shorts) {
    bool decomposable = false;
    for (const auto& a : shorts) {
      IVec b(r.size());
      for (std::size_t k = 0; k < r.size(); ++k) b[k] = r[k] - a[k];
      if (pool.count(b)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple.push_back(r);
  }
  auto height = [](const IVec& v) { return std::accumulate(v.begin(), v.end(), 0L); };
  std::stable_sort(simple.begin(), simple.end(), [&](const IVec& a, const IVec& b) { return height(a) > height(b); });
  return simple;
}

namespace {

// Type of one connected simply-laced Dynkin diagram given its adjacency lists.
std::string component_label(const std::vector<std::vector<int>>& adj, const std::vector<int>& nodes) {
  const int n = static_cast<int>(nodes.size());
  int branch = -1;
  for (int v : nodes)
    if (adj[static_cast<std::size_t>(v)].size() > 2) {
      if (adj[static_cast<std::size_t>(v)].size() > 3 || branch >= 0)
        throw std::invalid_argument("Cartan matrix is not of finite type");
      branch = v;
    }
  if (branch < 0) return "A" + std::to_string(n);
  std::vector<int> arms;
  for (int start : adj[static_cast<std::size_t>(branch)]) {
    int len = 1, prev = branch, cur = start;
    while (true) {
      int next = -1;
      for (int w : adj[static_cast<std::size_t>(cur)])
        if (w != prev) next = w;
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(n);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) return "E" + std::to_string(n);
  throw std::invalid_argument("Cartan matrix is not of finite type");
}

}  // namespace

std::string simply_laced_label(const IMat& cartan) {
  const std::size_t n = cartan.size();
  std::vector<std::vector<int>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (cartan[i][j] == -1) adj[i].push_back(static_cast<int>(j));
      else if (cartan[i][j] != 0) throw std::invalid_argument("Cartan matrix is not simply laced");
    }
  std::vector<bool> seen(n, false);
  std::map<std::string, int> counts;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> nodes, stack{static_cast<int>(s)};
    seen[s] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      nodes.push_back(v);
      for (int w : adj[static_cast<std::size_t>(v)])
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          stack.push_back(w);
        }
    }
    std::string lab = component_label(adj, nodes);
    if (lab == "D2") counts["A1"] += 2;
    else if (lab == "D3") ++counts["A3"];
    else ++counts[lab];
  }
  std::string out;
  for (const auto& [lab, k] : counts) {
    if (!out.empty()) out += " x ";
    out += lab;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

std::string dual_label(const RootSystem& rs) {
  if (rs.series == 'B' && rs.rank >= 2) return "C" + std::to_string(rs.rank);
  if (rs.series == 'C') return "B" + std::to_string(rs.rank);
  return rs.label();
}

namespace {

std::string short_subsystem_label(const RootSystem& rs) {
  std::vector<IVec> simple = short_simple_roots(rs);
  IMat cartan(simple.size(), IVec(simple.size()));
  for (std::size_t i = 0; i < simple.size(); ++i)
    for (std::size_t j = 0; j < simple.size(); ++j) {
      RVec a = to_rvec(simple[i]), b = to_rvec(simple[j]);
      cartan[i][j] = to_long(2 * rs.pairing(a, b) / rs.pairing(b, b));
    }
  return simply_laced_label(cartan);
}

}  // namespace

Classification classify(const RootSystem& rs, int ell) {
  Classification c;
  c.orders = divided_power_orders(rs, ell);
  if (ell <= 2) {
    c.category = "trivial";
    c.g0 = "0";
    c.gell = rs.label();
    return c;
  }
  if (rs.series == 'G' && ell == 4) {
    c.category = "exotic";
    c.g0 = "A3";
    c.gell = "G2";
    c.computed = false;
    c.note = "exotic, out of computational scope";
    return c;
  }
  long short_order = 0, long_order = 0;
  for (int i = 0; i < rs.rank; ++i) {
    if (rs.gram[i][i] == rs.short_norm()) short_order = c.orders[static_cast<std::size_t>(i)];
    else long_order = c.orders[static_cast<std::size_t>(i)];
  }
  if (rs.simply_laced() || long_order == short_order) {
    c.category = "generic";
    c.g0 = c.gell = rs.label();
  } else if (long_order == 1) {
    c.category = "degenerate";
    c.g0 = short_subsystem_label(rs);
    c.gell = dual_label(rs);
  } else {
    c.category = "duality";
    c.g0 = rs.label();
    c.gell = dual_label(rs);
  }
  return c;
}

std::vector<ClassificationRow> classification_table() {
  struct Case {
    char series;
    int rank;
    int ell;
    const char* category;
    std::string g0;
    std::string gell;
  };
  const std::vector<Case> cases = {
      {'A', 2, 1, "trivial", "0", "A2"},        {'B', 3, 2, "trivial", "0", "B3"},
      {'G', 2, 2, "trivial", "0", "G2"},        {'A', 3, 3, "generic", "A3", "A3"},
      {'D', 4, 4, "generic", "D4", "D4"},       {'A', 1, 6, "generic", "A1", "A1"},
      {'B', 2, 6, "generic", "B2", "B2"},       {'B', 3, 5, "generic", "B3", "B3"},
      {'C', 3, 6, "generic", "C3", "C3"},       {'F', 4, 3, "generic", "F4", "F4"},
      {'F', 4, 10, "generic", "F4", "F4"},      {'G', 2, 5, "generic", "G2", "G2"},
      {'G', 2, 8, "generic", "G2", "G2"},       {'B', 2, 8, "duality", "B2", "C2"},
      {'B', 3, 12, "duality", "B3", "C3"},      {'C', 3, 8, "duality", "C3", "B3"},
      {'F', 4, 8, "duality", "F4", "F4"},       {'G', 2, 9, "duality", "G2", "G2"},
      {'G', 2, 12, "duality", "G2", "G2"},      {'B', 2, 4, "degenerate", "A1^2", "C2"},
      {'B', 3, 4, "degenerate", "A1^3", "C3"},  {'B', 4, 4, "degenerate", "A1^4", "C4"},
      {'C', 3, 4, "degenerate", "A3", "B3"},    {'C', 4, 4, "degenerate", "D4", "B4"},
      {'F', 4, 4, "degenerate", "D4", "F4"},    {'G', 2, 3, "degenerate", "A2", "G2"},
      {'G', 2, 6, "degenerate", "A2", "G2"},    {'G', 2, 4, "exotic", "A3", "G2"},
  };
  std::vector<ClassificationRow> rows;
  for (const auto& cs : cases) {
    RootSystem rs = build_root_system(cs.series, cs.rank);
    ClassificationRow row;
    row.algebra = rs.label();
    row.ell = cs.ell;
    row.expected_category = cs.category;
    row.expected_g0 = cs.g0;
    row.expected_gell = cs.gell;
    row.computed = classify(rs, cs.ell);
    row.match = row.computed.category == row.expected_category && row.computed.g0 == row.expected_g0 &&
                row.computed.gell == row.expected_gell;
    rows.push_back(std::move(row));
  }
  return rows;
}

bool DegeneracyReport::consistent() const { return discrepancies.empty(); }

namespace {

long isqrt_exact(long v, bool& exact) {
  long r = 0;
  while ((r + 1) * (r + 1) <= v) ++r;
  exact = r * r == v;
  return r;
}

std::string power_string(long base, long exp) {
  if (exp == 1) return std::to_string(base);
  return std::to_string(base) + "^" + std::to_string(exp);
}

}  // namespace

DegeneracyReport extension_report(const RootSystem& rs, int ell) {
  const int n = rs.rank;
  const bool supported = ((rs.series == 'B' || rs.series == 'C') && ell == 4 && n >= 2) ||
                         (rs.series == 'F' && ell == 4) || (rs.series == 'G' && ell == 6);
  if (!supported)
    throw std::invalid_argument("extension table covers (Bn,4), (Cn,4), (F4,4), (G2,6); got (" + rs.label() + "," +
                                std::to_string(ell) + ")");

  DegeneracyReport r;
  r.g = rs.label();
  r.ell = ell;
  Classification cl = classify(rs, ell);
  r.g0 = cl.g0;
  r.gell = cl.gell;
  r.orders = cl.orders;
  r.global_symmetry = dual_label(rs);

  ScreeningLattices sl = build_screening_lattices(rs, ell);
  const int p = sl.p;
  r.num_simples = num_simples(rs, ell);
  r.num_simples_snf = quotient_group(sl.basis_dual, sl.basis_long).order();

  // Short simple roots of g scaled into the long lattice: sqrt(p) beta = p * (simple-root coordinates).
  std::vector<IVec> shorts = short_simple_roots(rs);
  RMat b0;
  for (const auto& s : shorts) b0.push_back(Rational(p) * to_rvec(s));
  RMat gram0 = matmul(matmul(b0, sl.amb.G), transpose(b0));
  r.num_simples_g0 = to_long(determinant(gram0));
  RMat dual0 = matmul(inverse(gram0), b0);
  r.num_simples_g0_snf = quotient_group(dual0, b0).order();

  bool exact = false;
  if (r.num_simples_g0 % r.num_simples == 0) r.dim_X = isqrt_exact(r.num_simples_g0 / r.num_simples, exact);
  r.dim_X_square_ratio = exact;

  ZMat coords;
  for (const auto& row : b0) {
    RVec c = coordinates_in_basis(sl.basis_long, row);
    ZVec z;
    for (const auto& x : c) {
      if (!is_integer(x)) throw std::logic_error("short root lattice is not contained in the long lattice");
      z.push_back(x.get_num());
    }
    coords.push_back(z);
  }
  Integer index = 1;
  for (const auto& f : smith_invariants(coords)) index *= f;
  r.dim_X_index = index.get_si();

  r.central_charge = sl.central_charge;
  switch (rs.series) {
    case 'B':
      r.central_charge_table = -2 * n;
      r.central_charge_formula = "-2n";
      r.num_simples_table = "2*2";
      r.g0_table_label = "A1^" + std::to_string(n) + " l=2";
      r.num_simples_g0_table = power_string(2, n) + "*" + power_string(2, n);
      break;
    case 'C':
      r.central_charge_table = 3 * n * n - 2 * n * n * n;
      r.central_charge_formula = "3n^2-2n^3";
      r.num_simples_table = "2*" + power_string(2, n - 1);
      r.g0_table_label = "D" + std::to_string(n) + " l=2";
      r.num_simples_g0_table = "4*" + power_string(2, n);
      break;
    case 'F':
      r.central_charge_table = -80;
      r.central_charge_formula = "-80";
      r.num_simples_table = "1*2^2";
      r.g0_table_label = "D4 l=2";
      r.num_simples_g0_table = "4*2^4";
      break;
    default:
      r.central_charge_table = -30;
      r.central_charge_formula = "-30";
      r.num_simples_table = "1*3";
      r.g0_table_label = "A2 l=6";
      r.num_simples_g0_table = "3*3^2";
      break;
  }

  if (r.num_simples != r.num_simples_snf)
    r.discrepancies.push_back("#simples: formula " + std::to_string(r.num_simples) + " vs quotient " +
                              std::to_string(r.num_simples_snf));
  if (r.num_simples_g0 != r.num_simples_g0_snf)
    r.discrepancies.push_back("#simples of g0: determinant " + std::to_string(r.num_simples_g0) + " vs quotient " +
                              std::to_string(r.num_simples_g0_snf));
  if (!r.dim_X_square_ratio || r.dim_X != r.dim_X_index)
    r.discrepancies.push_back("dim X: square-root ratio " + std::to_string(r.dim_X) + " vs lattice index " +
                              std::to_string(r.dim_X_index));
  if (r.central_charge != r.central_charge_table)
    r.discrepancies.push_back("central charge: lattice " + to_string(r.central_charge) + " vs table " +
                              r.central_charge_formula + " = " + to_string(r.central_charge_table));
  return r;
}

}  // namespace lvoa
