#include "lvoa/freefield.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace lvoa {

int degree(const Monomial& u) {
  int d = 0;
  for (const auto& f : u) d += f.order;
  return d;
}

bool TermKey::operator<(const TermKey& o) const {
  if (momentum != o.momentum) return lex_less(momentum, o.momentum);
  int da = degree(monomial), db = degree(o.monomial);
  if (da != db) return da < db;
  return monomial < o.monomial;
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement FieldElement::exp(const Momentum& lambda) {
  FieldElement e(lambda.size());
  e.add_term(TermKey{lambda, {}}, 1);
  return e;
}

FieldElement FieldElement::vacuum(std::size_t rank) { return exp(zeros(rank)); }

FieldElement FieldElement::scalar(std::size_t rank, const Rational& c) {
  FieldElement e(rank);
  e.add_term(TermKey{zeros(rank), {}}, c);
  return e;
}

FieldElement FieldElement::dphi(int order, const Momentum& beta) {
  if (order < 1) throw std::invalid_argument("derivative order must be >= 1");
  FieldElement e(beta.size());
  for (std::size_t i = 0; i < beta.size(); ++i)
    if (beta[i] != 0) e.add_term(TermKey{zeros(beta.size()), {Factor{static_cast<int>(i), order}}}, beta[i]);
  return e;
}

FieldElement FieldElement::term(const TermKey& key, const Rational& c) {
  FieldElement e(key.momentum.size());
  e.add_term(key, c);
  return e;
}

Rational FieldElement::coefficient(const TermKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

void FieldElement::add_term(const TermKey& key, const Rational& c) {
  if (c == 0) return;
  if (key.momentum.size() != rank_) throw std::invalid_argument("field element rank mismatch");
  auto [it, inserted] = terms_.emplace(key, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  if (o.rank_ != rank_) throw std::invalid_argument("field element rank mismatch");
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  if (o.rank_ != rank_) throw std::invalid_argument("field element rank mismatch");
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

FieldElement& FieldElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

std::vector<Momentum> FieldElement::momenta() const {
  std::vector<Momentum> out;
  for (const auto& [k, c] : terms_)
    if (out.empty() || out.back() != k.momentum) out.push_back(k.momentum);
  return out;
}

const Momentum& FieldElement::single_momentum() const {
  if (terms_.empty()) throw std::invalid_argument("zero element has no momentum");
  const Momentum& m = terms_.begin()->first.momentum;
  if (terms_.rbegin()->first.momentum != m) throw std::invalid_argument("element is not homogeneous in momentum");
  return m;
}

FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
FieldElement operator-(FieldElement a) { return a *= Rational(-1); }
FieldElement operator*(const Rational& c, FieldElement a) { return a *= c; }

Monomial merge(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

TermKey multiply_keys(const TermKey& a, const TermKey& b) { return TermKey{a.momentum + b.momentum, merge(a.monomial, b.monomial)}; }

FieldElement multiply(const FieldElement& a, const FieldElement& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("multiply: lattice mismatch");
  FieldElement out(a.rank());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) out.add_term(multiply_keys(ka, kb), ca * cb);
  return out;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) { return multiply(a, b); }

FieldElement derive(const FieldElement& a) {
  FieldElement out(a.rank());
  for (const auto& [k, c] : a.terms()) {
    for (std::size_t i = 0; i < k.monomial.size(); ++i) {
      if (i > 0 && k.monomial[i] == k.monomial[i - 1]) continue;
      Rational mult = 0;
      for (const auto& f : k.monomial)
        if (f == k.monomial[i]) mult += 1;
      Monomial u = k.monomial;
      u.erase(u.begin() + static_cast<long>(i));
      Factor raised = k.monomial[i];
      ++raised.order;
      u.insert(std::upper_bound(u.begin(), u.end(), raised), raised);
      out.add_term(TermKey{k.momentum, std::move(u)}, c * mult);
    }
    for (std::size_t i = 0; i < k.momentum.size(); ++i) {
      if (k.momentum[i] == 0) continue;
      Factor f{static_cast<int>(i), 1};
      Monomial u = k.monomial;
      u.insert(std::upper_bound(u.begin(), u.end(), f), f);
      out.add_term(TermKey{k.momentum, std::move(u)}, c * k.momentum[i]);
    }
  }
  return out;
}

FieldElement derive(const FieldElement& a, int times) {
  FieldElement out = a;
  for (int t = 0; t < times; ++t) out = derive(out);
  return out;
}

// ---------------------------------------------------------------------------
// Coproduct

void TensorElement::add(const TermKey& a, const TermKey& b, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.emplace(std::make_pair(a, b), c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms.erase(it);
}

TensorElement coproduct(const FieldElement& a) {
  TensorElement out;
  for (const auto& [k, c] : a.terms()) {
    const std::size_t n = k.monomial.size();
    // Primitive factors split over subsets of positions; e^beta is grouplike.
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
      Monomial left, right;
      for (std::size_t i = 0; i < n; ++i) ((mask >> i) & 1 ? left : right).push_back(k.monomial[i]);
      out.add(TermKey{k.momentum, left}, TermKey{k.momentum, right}, c);
    }
  }
  return out;
}

TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b) {
  TensorElement out;
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms)
      out.add(multiply_keys(ka.first, kb.first), multiply_keys(ka.second, kb.second), ca * cb);
  return out;
}

// ---------------------------------------------------------------------------
// Scalars and Laurent polynomials

Scalar Scalar::phase(const Rational& q, const Rational& r) {
  Scalar s;
  s.tier_ = Tier::Phase;
  s.q_ = q;
  s.r_ = r;
  s.normalize();
  return s;
}

Scalar Scalar::complex(std::complex<double> c) {
  Scalar s;
  s.tier_ = Tier::Complex;
  s.c_ = c;
  return s;
}

void Scalar::normalize() {
  if (tier_ != Tier::Phase) return;
  Integer k = floor_of(r_ / 2);
  r_ -= 2 * Rational(k);
  if (r_ >= 1) {
    r_ -= 1;
    q_ = -q_;
  }
  if (q_ == 0) r_ = 0;
  if (r_ == 0) tier_ = Tier::Rational;
}

std::complex<double> Scalar::to_complex() const {
  switch (tier_) {
    case Tier::Rational:
      return {q_.get_d(), 0.0};
    case Tier::Phase:
      return q_.get_d() * std::polar(1.0, std::numbers::pi * r_.get_d());
    case Tier::Complex:
      return c_;
  }
  return {};
}

bool Scalar::is_zero() const { return tier_ == Tier::Complex ? c_ == std::complex<double>{} : q_ == 0; }

Scalar Scalar::operator+(const Scalar& o) const {
  if (tier_ != Tier::Complex && o.tier_ != Tier::Complex) {
    if (q_ == 0) return o;
    if (o.q_ == 0) return *this;
    if (r_ == o.r_) return phase(q_ + o.q_, r_);
  }
  return complex(to_complex() + o.to_complex());
}

Scalar Scalar::operator*(const Scalar& o) const {
  if (tier_ != Tier::Complex && o.tier_ != Tier::Complex) return phase(q_ * o.q_, r_ + o.r_);
  return complex(to_complex() * o.to_complex());
}

bool Scalar::operator==(const Scalar& o) const {
  if (tier_ != o.tier_) return false;
  if (tier_ == Tier::Complex) return c_ == o.c_;
  return q_ == o.q_ && r_ == o.r_;
}

void FracLaurent::add(const Rational& exponent, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.emplace(exponent, c);
  if (inserted) return;
  it->second = it->second + c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

Scalar FracLaurent::coefficient(const Rational& exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? Scalar() : it->second;
}

FracLaurent FracLaurent::d_dz() const {
  FracLaurent out;
  for (const auto& [e, c] : coeffs_) out.add(e - 1, c * Scalar(e));
  return out;
}

FracLaurent FracLaurent::operator-() const {
  FracLaurent out;
  for (const auto& [e, c] : coeffs_) out.add(e, c * Scalar(Rational(-1)));
  return out;
}

std::string to_string(const FracLaurent& f) {
  if (f.coefficients().empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : f.coefficients()) {
    if (!first) os << " + ";
    first = false;
    switch (c.tier()) {
      case Scalar::Tier::Rational:
        os << to_string(c.magnitude());
        break;
      case Scalar::Tier::Phase:
        os << to_string(c.magnitude()) << "*e^{i pi " << to_string(c.phase_exponent()) << "}";
        break;
      case Scalar::Tier::Complex:
        os << "(" << c.to_complex().real() << (c.to_complex().imag() < 0 ? "" : "+") << c.to_complex().imag()
           << "i)";
        break;
    }
    os << "*z^" << to_string(e);
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Hopf pairing

namespace {

Rational signed_factorial(int sign_power, int n) {
  Rational f = factorial(static_cast<unsigned>(n));
  return sign_power % 2 == 0 ? f : Rational(-f);
}

}  // namespace

PairingTerm pair_terms(const Ambient& amb, const TermKey& a, const TermKey& b) {
  const std::size_t n = amb.rank();
  const Momentum& alpha = a.momentum;
  const Momentum& beta = b.momentum;
  PairingTerm out;
  out.exponent = amb.pair(alpha, beta) - degree(a.monomial) - degree(b.monomial);

  auto e_dot = [&](int i, const Momentum& v) {
    Rational s = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (v[j] != 0) s += amb.G[i][j] * v[j];
    return s;
  };
  const Monomial& A = a.monomial;
  const Monomial& B = b.monomial;
  // Weights of the elementary contractions.
  std::vector<Rational> w_a_exp(A.size()), w_b_exp(B.size());
  for (std::size_t i = 0; i < A.size(); ++i)
    w_a_exp[i] = e_dot(A[i].index, beta) * signed_factorial(A[i].order - 1, A[i].order - 1);
  for (std::size_t j = 0; j < B.size(); ++j)
    w_b_exp[j] = -e_dot(B[j].index, alpha) * factorial(static_cast<unsigned>(B[j].order - 1));

  std::vector<bool> used(B.size(), false);
  Rational total = 0;
  std::function<void(std::size_t, Rational)> rec = [&](std::size_t i, Rational w) {
    if (w == 0) return;
    if (i == A.size()) {
      for (std::size_t j = 0; j < B.size(); ++j)
        if (!used[j]) w *= w_b_exp[j];
      total += w;
      return;
    }
    rec(i + 1, w * w_a_exp[i]);
    for (std::size_t j = 0; j < B.size(); ++j) {
      if (used[j]) continue;
      Rational g = amb.G[A[i].index][B[j].index];
      if (g == 0) continue;
      used[j] = true;
      rec(i + 1, w * g * signed_factorial(A[i].order - 1, A[i].order + B[j].order - 1));
      used[j] = false;
    }
  };
  rec(0, Rational(1));
  out.weight = total;
  return out;
}

FracLaurent pair(const Ambient& amb, const FieldElement& a, const FieldElement& b) {
  FracLaurent out;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      PairingTerm t = pair_terms(amb, ka, kb);
      out.add(t.exponent, Scalar(Rational(ca * cb * t.weight)));
    }
  return out;
}

// ---------------------------------------------------------------------------
// Text form

namespace {

std::string symbol(std::size_t rank, std::size_t i) { return rank == 1 ? "a" : "a" + std::to_string(i + 1); }

}  // namespace

std::string momentum_to_string(const Momentum& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    Rational c = m[i];
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    Rational a = abs(c);
    if (a != 1) out += to_string(a) + "*";
    out += symbol(m.size(), i);
  }
  return out.empty() ? "0" : out;
}

std::string monomial_to_string(const Monomial& u, std::size_t rank) {
  std::string out;
  for (const auto& f : u) {
    if (!out.empty()) out += " * ";
    out += f.order == 1 ? "d" : "d^" + std::to_string(f.order);
    out += " phi[" + symbol(rank, static_cast<std::size_t>(f.index)) + "]";
  }
  return out;
}

std::string to_string(const FieldElement& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : a.terms()) {
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    Rational mag = abs(c);
    std::vector<std::string> parts;
    if (mag != 1) parts.push_back(to_string(mag));
    if (!k.monomial.empty()) parts.push_back(monomial_to_string(k.monomial, a.rank()));
    if (!is_zero(k.momentum) || parts.empty()) parts.push_back("exp[" + momentum_to_string(k.momentum) + "]");
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " * " : "") + parts[i];
  }
  return out;
}

}  // namespace lvoa
