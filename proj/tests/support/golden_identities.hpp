#ifndef LVOA_TESTS_GOLDEN_IDENTITIES_HPP
#define LVOA_TESTS_GOLDEN_IDENTITIES_HPP

// Worked screening evaluations for A1 and B2 at l = 4, as printed in the source text,
// with corrections where the printed value is inconsistent. Each correction carries a
// machine-checkable reason that does not rely on the screening implementation under test.

#include "lvoa/screening.hpp"
#include "lvoa/state_expr.hpp"

#include <string>
#include <vector>

namespace lvoa::test {

enum class Erratum {
  none,
  derivative_sign,       // printed value is the negative; sign fixed by Z_s(d phi_b) = -(s,b) e^s
  groundstate_exponent,  // printed input is not in the stated layer; the groundstate exponent is swapped
  exponent_and_sign,     // both of the above
  missing_derivative,    // printed output has a different L0 eigenvalue than the input
  passthrough_index,     // a factor with (s, b) = 0 passes through unchanged; printed index differs
  duplicate_input,       // same printed input as another entry with a different printed value
};

struct GoldenIdentity {
  std::string id;
  std::string screening;  // "Z", "ZL" (A1) or "Z1", "Z2" (B2)
  Rational layer;         // stated L0 layer of the input
  std::string printed_input;
  std::string printed_output;
  Erratum erratum = Erratum::none;
  std::string input;   // corrected input, empty when identical to printed
  std::string output;  // corrected output, empty when identical to printed
  std::string duplicate_of;

  const std::string& used_input() const { return input.empty() ? printed_input : input; }
  const std::string& used_output() const { return output.empty() ? printed_output : output; }
};

inline std::vector<GoldenIdentity> a1_identities() {
  return {
      {"A1.1", "Z", 0, "exp[0]", "0"},
      {"A1.2", "Z", 1, "d phi[a]", "exp[-a]"},
      {"A1.3", "Z", 1, "exp[2*a]", "d phi[-a] * exp[a]"},
      {"A1.4", "Z", 0, "exp[a]", "1"},
      {"A1.5", "Z", 1, "d phi[a] * exp[a]", "0"},
      {"A1.6", "Z", 1, "exp[-a]", "0"},
      {"A1.7", "ZL", 0, "exp[0]", "0"},
      {"A1.8", "ZL", 1, "exp[-a]", "d phi[2*a] * exp[a]"},
      {"A1.9", "ZL", 1, "d phi[a] * exp[a]", "0"},
  };
}

inline std::vector<GoldenIdentity> b2_identities() {
  using E = Erratum;
  return {
      // Blue, groundstates
      {"B2.blue.a1", "Z2", 0, "exp[0]", "0"},
      {"B2.blue.a2", "Z1", 0, "exp[0]", "0"},
      {"B2.blue.a3", "Z2", 0, "exp[a1 + 2*a2]", "exp[a1 + a2]"},
      {"B2.blue.a4", "Z1", 0, "exp[a1 + 2*a2]", "exp[a2]"},
      // Blue, groundstate times a degree one polynomial
      {"B2.blue.b1", "Z2", 1, "d phi[-a2]", "exp[-a2]", E::derivative_sign, "", "-exp[-a2]"},
      {"B2.blue.b2", "Z1", 1, "d phi[-a2]", "0"},
      {"B2.blue.b3", "Z2", 1, "d phi[-a1 - a2]", "0"},
      {"B2.blue.b4", "Z1", 1, "d phi[-a1 - a2]", "exp[-a1 - a2]", E::derivative_sign, "", "-exp[-a1 - a2]"},
      {"B2.blue.b5", "Z2", 1, "d phi[a1 + a2] * exp[2*a1 + a2]", "d phi[a1 + a2] * exp[a1 + a2]",
       E::groundstate_exponent, "d phi[a1 + a2] * exp[a1 + 2*a2]", ""},
      {"B2.blue.b6", "Z1", 1, "d phi[a1 + a2] * exp[2*a1 + a2]", "0", E::groundstate_exponent,
       "d phi[a1 + a2] * exp[a1 + 2*a2]", ""},
      {"B2.blue.b7", "Z2", 1, "d phi[-a2] * exp[2*a1 + a2]", "0", E::groundstate_exponent,
       "d phi[-a2] * exp[a1 + 2*a2]", ""},
      {"B2.blue.b8", "Z1", 1, "d phi[-a2] * exp[2*a1 + a2]", "d phi[a2] * exp[a2]", E::exponent_and_sign,
       "d phi[-a2] * exp[a1 + 2*a2]", "-d phi[a2] * exp[a2]"},
      // Blue, next pure exponentials
      {"B2.blue.c1", "Z2", 1, "exp[-a1]", "exp[-a1 - a2]"},
      {"B2.blue.c2", "Z1", 1, "exp[-a1]", "0"},
      {"B2.blue.c3", "Z2", 1, "exp[a1]", "0"},
      {"B2.blue.c4", "Z1", 1, "exp[a1]", "exp[-a2]"},
      {"B2.blue.c5", "Z2", 1, "exp[2*a1 + 2*a2]", "0"},
      {"B2.blue.c6", "Z1", 1, "exp[2*a1 + 2*a2]", "exp[a1 + a2]", E::missing_derivative, "",
       "d phi[-a1 - a2] * exp[a1 + a2]"},
      {"B2.blue.c7", "Z2", 1, "exp[2*a2]", "exp[a2]", E::missing_derivative, "", "d phi[-a2] * exp[a2]"},
      {"B2.blue.c8", "Z1", 1, "exp[2*a2]", "0"},
      // Green, groundstates
      {"B2.green.a1", "Z2", 0, "exp[a1 + a2]", "0"},
      {"B2.green.a2", "Z1", 0, "exp[a1 + a2]", "1"},
      {"B2.green.a3", "Z2", 0, "exp[a2]", "1"},
      {"B2.green.a4", "Z1", 0, "exp[a2]", "0"},
      // Green, groundstate times a degree one polynomial
      {"B2.green.b1", "Z2", 1, "(d phi[a1] + d phi[a2]) * exp[a1 + a2]", "0"},
      {"B2.green.b2", "Z1", 1, "(d phi[a1] + d phi[a2]) * exp[a1 + a2]", "0"},
      {"B2.green.b3", "Z2", 1, "d phi[a2] * exp[a2]", "0"},
      {"B2.green.b4", "Z1", 1, "d phi[a2] * exp[a2]", "0"},
      {"B2.green.b5", "Z2", 1, "d phi[a2] * exp[a1 + a2]", "exp[a1]"},
      {"B2.green.b6", "Z1", 1, "d phi[a2] * exp[a1 + a2]", "d phi[a1]", E::passthrough_index, "", "d phi[a2]"},
      {"B2.green.b7", "Z2", 1, "d phi[-a1 - a2] * exp[a2]", "d phi[-a1 - a2]"},
      {"B2.green.b8", "Z1", 1, "d phi[-a1 - a2] * exp[a2]", "exp[-a1]", E::derivative_sign, "", "-exp[-a1]"},
      // Green, next pure exponentials
      {"B2.green.c1", "Z2", 1, "exp[-a1 - a2]", "0"},
      {"B2.green.c2", "Z1", 1, "exp[a1 + a2]", "0", E::duplicate_input, "exp[-a1 - a2]", "", "B2.green.a2"},
      {"B2.green.c3", "Z2", 1, "exp[-a2]", "0"},
      {"B2.green.c4", "Z1", 1, "exp[-a2]", "0"},
      {"B2.green.c5", "Z2", 1, "exp[2*a1 + 3*a2]", "exp[2*a1 + 2*a2]"},
      {"B2.green.c6", "Z1", 1, "exp[2*a1 + 3*a2]", "exp[a1 + 2*a2]", E::missing_derivative, "",
       "d phi[-a1 - a2] * exp[a1 + 2*a2]"},
      {"B2.green.c7", "Z2", 1, "exp[a1 + 3*a2]", "exp[a1 + 2*a2]", E::missing_derivative, "",
       "d phi[-a2] * exp[a1 + 2*a2]"},
      {"B2.green.c8", "Z1", 1, "exp[a1 + 3*a2]", "exp[2*a2]"},
  };
}

inline Momentum golden_screening(const ScreeningLattices& sl, const std::string& name) {
  if (name == "Z") return sl.basis_short[0];
  if (name == "ZL") return sl.basis_long[0];
  if (name == "Z1") return Momentum{-1, -1};
  if (name == "Z2") return Momentum{0, -1};
  throw std::invalid_argument("unknown screening " + name);
}

// L0 eigenvalue of a state all of whose terms share one eigenvalue; nullopt otherwise.
inline std::optional<Rational> homogeneous_l0(const ScreeningLattices& sl, const FieldElement& v) {
  std::optional<Rational> h;
  for (const auto& [k, c] : v.terms()) {
    Rational hk = l0_eigenvalue(sl, k);
    if (h && *h != hk) return std::nullopt;
    h = hk;
  }
  return h;
}

struct GoldenResult {
  std::string id;
  bool holds = false;              // computed value equals the (corrected) claimed value
  bool printed_holds = false;      // computed value equals the value as printed
  bool erratum_justified = true;   // independent reason for the correction checks out
  std::string computed;
};

inline GoldenResult check_identity(const ScreeningLattices& sl, const GoldenIdentity& g,
                                   const std::vector<GoldenIdentity>& all) {
  GoldenResult r;
  r.id = g.id;
  Momentum s = golden_screening(sl, g.screening);
  FieldElement in = parse_state(g.used_input(), sl);
  FieldElement out = apply_screening(sl.amb, s, in);
  r.computed = to_string(out);
  r.holds = out == parse_state(g.used_output(), sl);
  FieldElement printed_in = parse_state(g.printed_input, sl);
  FieldElement printed_out = parse_state(g.printed_output, sl);
  r.printed_holds = apply_screening(sl.amb, s, printed_in) == printed_out;
  if (g.erratum == Erratum::none) return r;

  auto in_layer = [&](const FieldElement& v) {
    auto h = homogeneous_l0(sl, v);
    return h && *h == g.layer;
  };
  // A misplaced groundstate exponent can still give a true equation, just not in the stated layer.
  bool ok = g.erratum == Erratum::groundstate_exponent || !r.printed_holds;
  switch (g.erratum) {
    case Erratum::derivative_sign:
      ok = ok && parse_state(g.used_output(), sl) == -printed_out;
      break;
    case Erratum::groundstate_exponent:
      ok = ok && !in_layer(printed_in) && in_layer(in);
      break;
    case Erratum::exponent_and_sign:
      ok = ok && !in_layer(printed_in) && in_layer(in) && parse_state(g.used_output(), sl) == -printed_out;
      break;
    case Erratum::missing_derivative: {
      auto hin = homogeneous_l0(sl, in);
      auto hout = homogeneous_l0(sl, printed_out);
      auto hfix = homogeneous_l0(sl, parse_state(g.used_output(), sl));
      ok = ok && hin && hout && hfix && *hout != *hin && *hfix == *hin;
      break;
    }
    case Erratum::passthrough_index: {
      // in = d phi_b e^v with (s, b) = 0, so Z_s(in) = d phi_b Z_s(e^v).
      if (in.size() != 1) return r.erratum_justified = false, r;
      const TermKey& k = in.terms().begin()->first;
      if (k.monomial.size() != 1) return r.erratum_justified = false, r;
      Momentum b = unit_vector(sl.rank(), static_cast<std::size_t>(k.monomial[0].index));
      ok = ok && sl.amb.pair(s, b) == 0 &&
           parse_state(g.used_output(), sl) ==
               FieldElement::dphi(1, b) * apply_screening(sl.amb, s, FieldElement::exp(k.momentum));
      break;
    }
    case Erratum::duplicate_input: {
      bool found = false;
      for (const auto& other : all)
        if (other.id == g.duplicate_of && other.screening == g.screening &&
            parse_state(other.printed_input, sl) == printed_in &&
            parse_state(other.printed_output, sl) != printed_out)
          found = true;
      ok = ok && found && in_layer(in);
      break;
    }
    case Erratum::none:
      break;
  }
  r.erratum_justified = ok;
  return r;
}

inline std::vector<GoldenResult> check_all(const ScreeningLattices& sl, const std::vector<GoldenIdentity>& ids) {
  std::vector<GoldenResult> out;
  for (const auto& g : ids) out.push_back(check_identity(sl, g, ids));
  return out;
}

}  // namespace lvoa::test

#endif  // LVOA_TESTS_GOLDEN_IDENTITIES_HPP
