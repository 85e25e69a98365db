#include "lvoa/characters.hpp"

#include "lvoa/screening.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lvoa {

QSeries::QSeries(Rational offset, int step, std::vector<Rational> coeffs)
    : offset_(std::move(offset)), step_(step), coeffs_(std::move(coeffs)) {
  if (step_ <= 0) throw std::invalid_argument("series step must be positive");
}

Rational QSeries::precision() const { return offset_ + make_rational(static_cast<long>(coeffs_.size()), step_); }

Rational QSeries::coefficient(const Rational& e) const {
  if (e >= precision())
    throw std::out_of_range("exponent " + to_string(e) + " beyond series precision " + to_string(precision()));
  Rational j = (e - offset_) * step_;
  if (!is_integer(j) || j < 0) return 0;
  return coeffs_[static_cast<std::size_t>(to_long(j))];
}

std::vector<Rational> QSeries::integer_coeffs(std::size_t n) const {
  std::vector<Rational> out;
  for (std::size_t j = 0; j < n; ++j) out.push_back(coefficient(offset_ + static_cast<long>(j)));
  return out;
}

QSeries QSeries::refined(int step) const {
  if (step % step_ != 0) throw std::invalid_argument("refined step must be a multiple of the current step");
  const std::size_t f = static_cast<std::size_t>(step / step_);
  std::vector<Rational> c(coeffs_.size() * f, Rational(0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) c[j * f] = coeffs_[j];
  return QSeries(offset_, step, std::move(c));
}

QSeries QSeries::shifted(const Rational& by) const { return QSeries(offset_ + by, step_, coeffs_); }

QSeries QSeries::truncated(std::size_t n) const {
  std::vector<Rational> c(coeffs_.begin(), coeffs_.begin() + static_cast<long>(std::min(n, coeffs_.size())));
  return QSeries(offset_, step_, std::move(c));
}

bool QSeries::operator==(const QSeries& o) const {
  return offset_ == o.offset_ && step_ == o.step_ && coeffs_ == o.coeffs_;
}

namespace {

int common_step(const QSeries& a, const QSeries& b) { return std::lcm(a.step(), b.step()); }

std::size_t grid_index(const Rational& e, const Rational& offset, int step) {
  Rational j = (e - offset) * step;
  if (!is_integer(j) || j < 0) throw std::invalid_argument("series exponents are not on a common grid");
  return static_cast<std::size_t>(to_long(j));
}

QSeries combine(const QSeries& a, const QSeries& b, int sign) {
  const int s = common_step(a, b);
  QSeries fa = a.refined(s), fb = b.refined(s);
  Rational off = std::min(fa.offset(), fb.offset());
  Rational prec = std::min(fa.precision(), fb.precision());
  std::size_t n = prec > off ? grid_index(prec, off, s) : 0;
  std::vector<Rational> c(n, Rational(0));
  for (std::size_t j = 0; j < fa.size(); ++j) {
    std::size_t k = grid_index(fa.offset(), off, s) + j;
    if (k < n) c[k] += fa.coeffs()[j];
  }
  for (std::size_t j = 0; j < fb.size(); ++j) {
    std::size_t k = grid_index(fb.offset(), off, s) + j;
    if (k < n) c[k] += sign * fb.coeffs()[j];
  }
  return QSeries(off, s, std::move(c));
}

}  // namespace

QSeries operator+(const QSeries& a, const QSeries& b) { return combine(a, b, 1); }
QSeries operator-(const QSeries& a, const QSeries& b) { return combine(a, b, -1); }

QSeries operator*(const Rational& c, const QSeries& a) {
  std::vector<Rational> v = a.coeffs();
  for (auto& x : v) x *= c;
  return QSeries(a.offset(), a.step(), std::move(v));
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  const int s = common_step(a, b);
  QSeries fa = a.refined(s), fb = b.refined(s);
  Rational off = fa.offset() + fb.offset();
  Rational prec = std::min(fa.offset() + fb.precision(), fb.offset() + fa.precision());
  std::size_t n = grid_index(prec, off, s);
  std::vector<Rational> c(n, Rational(0));
  for (std::size_t i = 0; i < fa.size() && i < n; ++i) {
    if (fa.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; i + j < n && j < fb.size(); ++j) c[i + j] += fa.coeffs()[i] * fb.coeffs()[j];
  }
  return QSeries(off, s, std::move(c));
}

std::string to_string(const QSeries& q) {
  std::ostringstream os;
  os << "t^(" << to_string(q.offset()) << ") * (";
  bool first = true;
  for (std::size_t j = 0; j < q.size(); ++j) {
    const Rational& c = q.coeffs()[j];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Rational e = make_rational(static_cast<long>(j), q.step());
    Rational mag = abs(c);
    if (e == 0) {
      os << to_string(mag);
      continue;
    }
    if (mag != 1) os << to_string(mag) << "*";
    os << "t";
    if (e != 1) os << "^(" << to_string(e) << ")";
  }
  if (first) os << "0";
  os << " + O(t^(" << to_string(q.precision() - q.offset()) << ")))";
  return os.str();
}

// ---------------------------------------------------------------------------

std::vector<Integer> colored_partition_counts(int rank, int order) {
  // n c(n) = rank * sum_{k=1}^{n} sigma(k) c(n - k)
  std::vector<Integer> c(static_cast<std::size_t>(order) + 1, 0);
  c[0] = 1;
  std::vector<Integer> sigma(c.size(), 0);
  for (int d = 1; d <= order; ++d)
    for (int m = d; m <= order; m += d) sigma[static_cast<std::size_t>(m)] += d;
  for (int n = 1; n <= order; ++n) {
    Integer s = 0;
    for (int k = 1; k <= n; ++k) s += sigma[static_cast<std::size_t>(k)] * c[static_cast<std::size_t>(n - k)];
    c[static_cast<std::size_t>(n)] = rank * s / n;
  }
  return c;
}

QSeries eta_inverse_power(int rank, int order) {
  if (order < 0) throw std::invalid_argument("order must be non-negative");
  std::vector<Rational> v;
  for (const auto& x : colored_partition_counts(rank, order)) v.emplace_back(x);
  return QSeries(make_rational(-rank, 24), 1, std::move(v));
}

QSeries theta_coset(const ScreeningLattices& sl, const Coset& coset, const Momentum& shift, int order) {
  const Momentum& start = coset.canonical_rep();
  Rational r2 = sl.amb.norm(start - shift);
  Rational offset = r2 / 2;
  enumerate_lattice_points(sl.amb, coset.lattice_basis(), start, shift, r2, [&](const Momentum& v) {
    Rational e = sl.amb.norm(v - shift) / 2;
    if (e < offset) offset = e;
  });
  // Enumerate one unit beyond the requested order so the grid step is determined by actual points.
  Rational bound = offset + order + 1;
  std::vector<Rational> exps;
  enumerate_lattice_points(sl.amb, coset.lattice_basis(), start, shift, 2 * bound, [&](const Momentum& v) {
    Rational e = sl.amb.norm(v - shift) / 2;
    if (e < bound) exps.push_back(e);
  });
  Integer step = 1;
  for (const auto& e : exps) step = lcm_of(step, Rational(e - offset).get_den());
  const int s = static_cast<int>(step.get_si());
  std::vector<Rational> c(static_cast<std::size_t>((order + 1) * s), Rational(0));
  for (const auto& e : exps) c[grid_index(e, offset, s)] += 1;
  return QSeries(offset, s, std::move(c));
}

QSeries graded_dim_module(const ScreeningLattices& sl, const Coset& coset, int order) {
  QSeries theta = theta_coset(sl, coset, sl.Q, order);
  QSeries g = theta * eta_inverse_power(static_cast<int>(sl.rank()), order);
  return g.truncated(static_cast<std::size_t>((order + 1) * g.step()));
}

namespace {

// prod_{m>=1} (1 + sign x^{stride m - shift})^{power}, coefficients of x^0..x^{size-1}.
std::vector<Rational> fermion_product(int sign, int stride, int shift, int power, std::size_t size) {
  std::vector<Rational> c(size, Rational(0));
  c[0] = 1;
  for (int m = 1;; ++m) {
    long e = static_cast<long>(stride) * m - shift;
    if (e >= static_cast<long>(size)) break;
    for (int rep = 0; rep < power; ++rep)
      for (long j = static_cast<long>(size) - 1; j >= e; --j)
        c[static_cast<std::size_t>(j)] += sign * c[static_cast<std::size_t>(j - e)];
  }
  return c;
}

}  // namespace

SFCharacters sf_characters(int n, int order) {
  if (n < 1) throw std::invalid_argument("number of fermion pairs must be >= 1");
  const std::size_t ns_size = static_cast<std::size_t>(order) + 1;
  const std::size_t r_size = 2 * ns_size;
  SFCharacters s;
  Rational ns_off = make_rational(n, 12), r_off = make_rational(-n, 24);
  s.ns_plus = QSeries(ns_off, 1, fermion_product(1, 1, 0, 2 * n, ns_size));
  s.ns_minus = QSeries(ns_off, 1, fermion_product(-1, 1, 0, 2 * n, ns_size));
  s.r_plus = QSeries(r_off, 2, fermion_product(1, 2, 1, 2 * n, r_size));
  s.r_minus = QSeries(r_off, 2, fermion_product(-1, 2, 1, 2 * n, r_size));
  Rational half = make_rational(1, 2);
  s.chi1 = half * (s.ns_plus + s.ns_minus);
  s.chi2 = half * (s.ns_plus - s.ns_minus);
  s.chi3 = half * (s.r_plus + s.r_minus);
  s.chi4 = half * (s.r_plus - s.r_minus);
  return s;
}

bool CharacterMatchReport::ok() const {
  return !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const CharacterMatchRow& r) { return r.match; });
}

CharacterMatchReport kernel_char_match(int n, int order) {
  ScreeningLattices sl = build_screening_lattices(build_root_system('B', n), 4);
  std::vector<Momentum> scr = short_screening_set(sl);
  SFCharacters sf = sf_characters(n, order);
  const Rational minus_c24 = -sl.central_charge / 24;
  CharacterMatchReport rep;
  rep.n = n;

  auto expected_from = [&](const QSeries& chi, const Rational& off) {
    std::vector<Rational> v;
    for (int j = 0; j <= order; ++j) v.push_back(chi.coefficient(off + j));
    return v;
  };
  auto add_row = [&](const std::string& module, const std::string& ch, const Rational& off,
                     std::vector<Rational> computed, std::vector<Rational> expected, bool offset_ok) {
    CharacterMatchRow row{module, ch, off, std::move(computed), std::move(expected), false};
    row.match = offset_ok && row.computed == row.expected;
    rep.rows.push_back(std::move(row));
  };

  for (const auto& [module, ch] : {std::pair<std::string, std::string>{"blue", "chi1"}, {"green", "chi2"}}) {
    Coset c = named_coset(sl, module);
    KernelReport kr = kernel_report(sl, c, scr, order, module);
    Rational off = minus_c24 + kr.rows.front().h;
    std::vector<Rational> computed;
    for (const auto& r : kr.rows) computed.emplace_back(static_cast<long>(r.intersection_dim));
    const QSeries& chi = ch == "chi1" ? sf.chi1 : sf.chi2;
    add_row(module, ch, off, computed, expected_from(chi, off), off >= chi.offset());
  }
  for (const auto& [module, ch] : {std::pair<std::string, std::string>{"center", "chi3"}, {"steinberg", "chi4"}}) {
    Coset c = named_coset(sl, module);
    QSeries g = graded_dim_module(sl, c, order);
    const QSeries& chi = ch == "chi3" ? sf.chi3 : sf.chi4;
    std::vector<Rational> expected = expected_from(chi, g.offset());
    add_row(module, ch, g.offset(), g.integer_coeffs(static_cast<std::size_t>(order) + 1), expected,
            expected.front() != 0);
  }
  {
    Coset c = named_coset(sl, "blue");
    QSeries g = graded_dim_module(sl, c, order);
    QSeries scaled = Rational(Integer(1) << (n - 1)) * sf.ns_plus;
    add_row("blue", "2^(n-1) ns+", g.offset(), g.integer_coeffs(static_cast<std::size_t>(order) + 1),
            expected_from(scaled, g.offset()), g.offset() == scaled.offset());
  }
  return rep;
}

}  // namespace lvoa
