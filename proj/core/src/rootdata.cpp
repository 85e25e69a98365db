#include "lvoa/rootdata.hpp"

#include "lvoa/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>

namespace lvoa {

namespace {

IMat chain_gram(const IVec& norms, const IVec& bonds) {
  std::size_t n = norms.size();
  IMat g(n, IVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) g[i][i] = norms[i];
  for (std::size_t i = 0; i + 1 < n; ++i) g[i][i + 1] = g[i + 1][i] = bonds[i];
  return g;
}

IMat gram_for(char series, int n) {
  switch (series) {
    case 'A':
      return chain_gram(IVec(n, 2), IVec(std::max(n - 1, 0), -1));
    case 'B': {
      IVec norms(n, 4);
      norms[n - 1] = 2;
      return chain_gram(norms, IVec(n - 1, -2));
    }
    case 'C': {
      IVec norms(n, 2);
      norms[n - 1] = 4;
      IVec bonds(n - 1, -1);
      bonds[n - 2] = -2;
      return chain_gram(norms, bonds);
    }
    case 'D': {
      IMat g = chain_gram(IVec(n, 2), IVec(n - 1, -1));
      g[n - 2][n - 1] = g[n - 1][n - 2] = 0;
      g[n - 3][n - 1] = g[n - 1][n - 3] = -1;
      return g;
    }
    case 'F':
      return chain_gram({4, 4, 2, 2}, {-2, -2, -1});
    case 'G':
      return chain_gram({2, 6}, {-3});
    default:
      break;
  }
  throw std::invalid_argument(std::string("unknown root system series '") + series + "'");
}

long height(const IVec& r) { return std::accumulate(r.begin(), r.end(), 0L); }

}  // namespace

std::string RootSystem::label() const { return std::string(1, series) + std::to_string(rank); }

long RootSystem::norm(const IVec& root) const {
  long s = 0;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) s += root[i] * gram[i][j] * root[j];
  return s;
}

Rational RootSystem::pairing(const RVec& u, const RVec& v) const {
  Rational s = 0;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      if (gram[i][j] != 0) s += u[i] * gram[i][j] * v[j];
  return s;
}

long RootSystem::short_norm() const {
  long m = gram[0][0];
  for (int i = 0; i < rank; ++i) m = std::min(m, gram[i][i]);
  return m;
}

long RootSystem::long_norm() const {
  long m = gram[0][0];
  for (int i = 0; i < rank; ++i) m = std::max(m, gram[i][i]);
  return m;
}

std::vector<IVec> RootSystem::short_positive_roots() const {
  std::vector<IVec> out;
  for (const auto& r : positive_roots)
    if (norm(r) == short_norm()) out.push_back(r);
  return out;
}

std::vector<IVec> RootSystem::long_positive_roots() const {
  std::vector<IVec> out;
  for (const auto& r : positive_roots)
    if (norm(r) == long_norm()) out.push_back(r);
  return out;
}

std::vector<IVec> positive_roots(const RootSystem& rs) {
  const int n = rs.rank;
  std::set<IVec> known;
  std::vector<IVec> layer;
  for (int i = 0; i < n; ++i) {
    IVec e(n, 0);
    e[i] = 1;
    known.insert(e);
    layer.push_back(e);
  }
  auto pair_with_simple = [&](const IVec& r, int i) {
    long s = 0;
    for (int k = 0; k < n; ++k) s += r[k] * rs.gram[k][i];
    return s;
  };
  // Height induction via alpha_i-strings: beta + alpha_i is a root iff q > 0,
  // where r - q = <beta, alpha_i^vee> and r counts steps down inside the set.
  while (!layer.empty()) {
    std::vector<IVec> next;
    for (const auto& beta : layer) {
      for (int i = 0; i < n; ++i) {
        IVec down = beta;
        long r = 0;
        while (true) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++r;
        }
        long q = r - 2 * pair_with_simple(beta, i) / rs.gram[i][i];
        if (q <= 0) continue;
        IVec up = beta;
        up[i] += 1;
        if (known.insert(up).second) next.push_back(up);
      }
    }
    layer = std::move(next);
  }
  std::vector<IVec> out(known.begin(), known.end());
  std::stable_sort(out.begin(), out.end(), [](const IVec& a, const IVec& b) {
    if (height(a) != height(b)) return height(a) < height(b);
    return a > b;
  });
  return out;
}

WeylVectors weyl_vectors(const RootSystem& rs) {
  WeylVectors w{zeros(rs.rank), zeros(rs.rank)};
  for (const auto& beta : rs.positive_roots) {
    Rational scale = make_rational(2, rs.norm(beta));
    for (int i = 0; i < rs.rank; ++i) {
      w.rho[i] += make_rational(beta[i], 2);
      w.rho_dual[i] += scale * beta[i] / 2;
    }
  }
  return w;
}

RMat fundamental_weights(const RootSystem& rs) {
  RMat ginv = inverse(to_rmat(rs.gram));
  RMat w(rs.rank, zeros(rs.rank));
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) w[i][j] = rs.d[i] * ginv[i][j];
  return w;
}

RootSystem root_system_from_gram(char series, const IMat& gram) {
  RootSystem rs;
  rs.series = series;
  rs.rank = static_cast<int>(gram.size());
  if (rs.rank == 0) throw std::invalid_argument("root system of rank 0");
  rs.gram = gram;
  rs.d.resize(rs.rank);
  rs.cartan.assign(rs.rank, IVec(rs.rank, 0));
  for (int i = 0; i < rs.rank; ++i) {
    if (gram[i].size() != gram.size() || gram[i][i] <= 0 || gram[i][i] % 2 != 0)
      throw std::invalid_argument("invalid Gram matrix for a root system");
    rs.d[i] = gram[i][i] / 2;
  }
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) {
      if (gram[i][j] != gram[j][i]) throw std::invalid_argument("Gram matrix not symmetric");
      if ((2 * gram[i][j]) % gram[j][j] != 0) throw std::invalid_argument("Gram matrix is not of Cartan type");
      rs.cartan[i][j] = 2 * gram[i][j] / gram[j][j];
    }
  if (determinant(to_rmat(gram)) <= 0) throw std::invalid_argument("Gram matrix is not positive definite");
  rs.positive_roots = positive_roots(rs);
  auto w = weyl_vectors(rs);
  rs.rho = w.rho;
  rs.rho_dual = w.rho_dual;
  rs.fund_weights = fundamental_weights(rs);
  rs.fundamental_group_order = to_long(determinant(to_rmat(rs.cartan)));
  return rs;
}

RootSystem build_root_system(char series, int rank) {
  series = static_cast<char>(std::toupper(static_cast<unsigned char>(series)));
  bool ok = false;
  switch (series) {
    case 'A': ok = rank >= 1; break;
    case 'B': ok = rank >= 1; break;
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 3; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: break;
  }
  if (!ok)
    throw std::invalid_argument("invalid finite type " + std::string(1, series) + std::to_string(rank));
  if (series == 'B' && rank == 1) series = 'A';
  return root_system_from_gram(series, gram_for(series, rank));
}

RootSystem root_system_from_label(const std::string& label) {
  if (label.size() < 2 || !std::isalpha(static_cast<unsigned char>(label[0])))
    throw std::invalid_argument("malformed root system label '" + label + "'");
  int rank = 0;
  try {
    std::size_t used = 0;
    rank = std::stoi(label.substr(1), &used);
    if (used != label.size() - 1) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed root system label '" + label + "'");
  }
  return build_root_system(label[0], rank);
}

RootSystem dual_root_system(const RootSystem& rs) {
  long gmax = rs.long_norm();
  IMat g(rs.rank, IVec(rs.rank, 0));
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) {
      long num = 2 * gmax * rs.gram[i][j];
      long den = rs.gram[i][i] * rs.gram[j][j];
      if (num % den != 0) throw std::logic_error("dual Gram matrix not integral");
      g[i][j] = num / den;
    }
  char series = rs.series;
  if (series == 'B') series = 'C';
  else if (series == 'C') series = 'B';
  return root_system_from_gram(series, g);
}

}  // namespace lvoa
