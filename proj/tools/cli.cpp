#include "cli.hpp"

#include "lvoa/characters.hpp"
#include "lvoa/degeneracy.hpp"
#include "lvoa/screening.hpp"
#include "lvoa/state_expr.hpp"
#include "series_json.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace lvoa::tools {

namespace {

constexpr int kSchemaVersion = 1;

struct Table {
  std::string title;
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
};

struct Output {
  json doc = json::object();
  std::vector<Table> tables;
  std::vector<std::string> banners;
  std::vector<std::string> failures;
};

struct Common {
  std::string algebra = "A1";
  int n = 0;
  int ell = 4;
  std::string format = "markdown";
  std::string golden_dir;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

json rvec_json(const RVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json rmat_json(const RMat& m) {
  json a = json::array();
  for (const auto& r : m) a.push_back(rvec_json(r));
  return a;
}

std::string phase_string(const Rational& r) {
  Rational red = r - 2 * Rational(floor_of(r / 2));
  return red == 0 ? "1" : "e^{i pi " + to_string(red) + "}";
}

RootSystem resolve_algebra(const Common& c) {
  const std::string& a = c.algebra;
  if (a.size() == 2 && (a[1] == 'n' || a[1] == 'N')) {
    if (c.n < 1) throw std::invalid_argument("--algebra " + a + " needs --n >= 1");
    return build_root_system(static_cast<char>(std::toupper(static_cast<unsigned char>(a[0]))), c.n);
  }
  std::string label = a;
  label[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
  return root_system_from_label(label);
}

std::string series_key(const Common& c, const RootSystem& rs) { return rs.label() + "_l" + std::to_string(c.ell); }

// Named modules for the l = 4 examples with a single short simple root, quotient representatives otherwise.
std::vector<std::pair<std::string, Coset>> module_cosets(const ScreeningLattices& sl) {
  std::vector<std::pair<std::string, Coset>> out;
  const bool named = sl.ell == 4 && (sl.rs.series == 'B' || (sl.rs.series == 'A' && sl.rs.rank == 1));
  if (named) {
    for (const auto& name : module_names()) out.emplace_back(name, named_coset(sl, name));
    return out;
  }
  QuotientGroup qg = quotient_group(sl.basis_dual, sl.basis_long);
  for (std::size_t i = 0; i < qg.coset_reps.size(); ++i)
    out.emplace_back("coset" + std::to_string(i), make_coset(sl, qg.coset_reps[i]));
  return out;
}

Coset find_module(const ScreeningLattices& sl, const std::string& name) {
  for (auto& [n, c] : module_cosets(sl))
    if (n == name) return c;
  std::vector<std::string> names;
  for (auto& [n, c] : module_cosets(sl)) names.push_back(n);
  throw std::invalid_argument("unknown module '" + name + "'; available: " + join(names, ", "));
}

// ---------------------------------------------------------------------------

void render(const Output& o, const std::string& format, std::ostream& out) {
  if (format == "json") {
    json doc = o.doc;
    if (!o.banners.empty()) doc["banner"] = o.banners;
    doc["failures"] = o.failures;
    out << doc.dump(2) << "\n";
    return;
  }
  for (const auto& b : o.banners) out << (format == "markdown" ? "> " : "# ") << b << "\n";
  for (const auto& t : o.tables) {
    if (format == "tsv") {
      out << "# " << t.title << "\n" << join(t.headers, "\t") << "\n";
      for (const auto& r : t.rows) out << join(r, "\t") << "\n";
    } else {
      out << "### " << t.title << "\n\n| " << join(t.headers, " | ") << " |\n|";
      for (std::size_t i = 0; i < t.headers.size(); ++i) out << "---|";
      out << "\n";
      for (const auto& r : t.rows) out << "| " << join(r, " | ") << " |\n";
    }
    out << "\n";
  }
}

// ---------------------------------------------------------------------------

Output lattice_info(const ScreeningLattices& sl) {
  Output o;
  const std::size_t n = sl.rank();
  QuotientGroup qg = quotient_group(sl.basis_dual, sl.basis_long);
  BraidingMatrix br = braiding_matrix(sl);
  json h_short = json::array(), h_long = json::array(), braid = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    h_short.push_back(to_string(sl.h(sl.basis_short[i])));
    h_long.push_back(to_string(sl.h(sl.basis_long[i])));
    json row = json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(phase_string(br.r[i][j]));
    braid.push_back(row);
  }
  o.doc = json{{"schema", kSchemaVersion},
               {"algebra", sl.rs.label()},
               {"ell", sl.ell},
               {"p", sl.p},
               {"rank", n},
               {"gram", rmat_json(sl.amb.G)},
               {"Q", rvec_json(sl.Q)},
               {"central_charge", to_string(sl.central_charge)},
               {"short_basis", rmat_json(sl.basis_short)},
               {"long_basis", rmat_json(sl.basis_long)},
               {"dual_basis", rmat_json(sl.basis_dual)},
               {"h_short", h_short},
               {"h_long", h_long},
               {"num_simples", num_simples(sl.rs, sl.ell)},
               {"quotient_order", qg.order()},
               {"quotient_invariants", qg.invariant_factors},
               {"braiding", braid}};
  Table t{"lattice data " + sl.rs.label() + " l=" + std::to_string(sl.ell), {"quantity", "value"}, {}};
  auto vecs = [](const RMat& m) {
    std::vector<std::string> s;
    for (const auto& r : m) s.push_back(to_string(r));
    return join(s, " ");
  };
  t.rows.push_back({"p", std::to_string(sl.p)});
  t.rows.push_back({"Gram (ambient)", vecs(sl.amb.G)});
  t.rows.push_back({"Q", to_string(sl.Q)});
  t.rows.push_back({"c", to_string(sl.central_charge)});
  t.rows.push_back({"short basis", vecs(sl.basis_short)});
  t.rows.push_back({"long basis", vecs(sl.basis_long)});
  t.rows.push_back({"dual basis", vecs(sl.basis_dual)});
  std::vector<std::string> hs, hl;
  for (std::size_t i = 0; i < n; ++i) {
    hs.push_back(h_short[i].get<std::string>());
    hl.push_back(h_long[i].get<std::string>());
  }
  t.rows.push_back({"h(short_i)", join(hs, " ")});
  t.rows.push_back({"h(long_i)", join(hl, " ")});
  t.rows.push_back({"#simples", std::to_string(num_simples(sl.rs, sl.ell))});
  std::vector<std::string> inv;
  for (long f : qg.invariant_factors) inv.push_back("Z" + std::to_string(f));
  t.rows.push_back({"quotient group", inv.empty() ? "0" : join(inv, " x ")});
  o.tables.push_back(t);
  return o;
}

Output groundstate_info(const ScreeningLattices& sl) {
  Output o;
  json mods = json::array();
  Table t{"groundstates " + sl.rs.label() + " l=" + std::to_string(sl.ell), {"module", "rep", "count", "h", "F", "states"},
          {}};
  for (const auto& [name, coset] : module_cosets(sl)) {
    Groundstates g = groundstates(sl, coset);
    Rational F = quadratic_form_F(sl, coset);
    mods.push_back(json{{"module", name},
                        {"rep", rvec_json(coset.canonical_rep())},
                        {"count", g.states.size()},
                        {"h", to_string(g.h)},
                        {"F", phase_string(F)},
                        {"states", rmat_json(g.states)}});
    std::vector<std::string> st;
    for (const auto& s : g.states) st.push_back(to_string(s));
    t.rows.push_back({name, to_string(coset.canonical_rep()), std::to_string(g.states.size()), to_string(g.h),
                      phase_string(F), join(st, " ")});
  }
  o.doc = json{{"schema", kSchemaVersion}, {"algebra", sl.rs.label()}, {"ell", sl.ell}, {"modules", mods}};
  o.tables.push_back(t);
  return o;
}

constexpr long kMaxKernelLayer = 3000;

Output kernel_info(const ScreeningLattices& sl, const std::string& module, int max_level) {
  Output o;
  std::vector<Momentum> scr = short_screening_set(sl);
  json modules = json::array();
  std::vector<std::pair<std::string, Coset>> cosets;
  if (module == "all") cosets = module_cosets(sl);
  else cosets.emplace_back(module, find_module(sl, module));
  for (const auto& [name, coset] : cosets) {
    QSeries dims = graded_dim_module(sl, coset, max_level);
    for (const auto& d : dims.integer_coeffs(static_cast<std::size_t>(max_level) + 1))
      if (d > kMaxKernelLayer)
        throw std::invalid_argument("layer of dimension " + to_string(d) + " in module " + name +
                                    " exceeds the limit " + std::to_string(kMaxKernelLayer) + "; lower --max-level");
    KernelReport kr = kernel_report(sl, coset, scr, max_level, name);
    json rows = json::array(), layers = json::array();
    Table t{"kernel " + name, {"h", "dim", "ker per screening", "intersection", "method"}, {}};
    for (const auto& r : kr.rows) {
      bool equal = std::all_of(r.kernel_dims.begin(), r.kernel_dims.end(),
                               [&](std::size_t k) { return k == r.kernel_dims.front(); });
      json ker = equal && !r.kernel_dims.empty() ? json(r.kernel_dims.front()) : json(nullptr);
      rows.push_back(json::array({r.dim, ker, r.intersection_dim}));
      layers.push_back(json{{"h", to_string(r.h)},
                            {"dim", r.dim},
                            {"kernel_dims", r.kernel_dims},
                            {"methods", r.methods},
                            {"intersection", r.intersection_dim}});
      std::vector<std::string> kd;
      for (auto k : r.kernel_dims) kd.push_back(std::to_string(k));
      t.rows.push_back({to_string(r.h), std::to_string(r.dim), join(kd, ","), std::to_string(r.intersection_dim),
                        join(r.methods, ",")});
    }
    modules.push_back(json{{"module", name}, {"rows", rows}, {"layers", layers}});
    o.tables.push_back(t);
  }
  json screenings = json::array();
  for (const auto& s : scr) screenings.push_back(rvec_json(s));
  o.doc = json{{"schema", kSchemaVersion},
               {"algebra", sl.rs.label()},
               {"ell", sl.ell},
               {"screenings", screenings},
               {"modules", modules}};
  if (cosets.size() == 1) o.doc["rows"] = modules[0]["rows"];
  return o;
}

Output screen_apply(const ScreeningLattices& sl, const std::string& momentum, const std::string& state, bool fractional,
                    int truncate) {
  Output o;
  Momentum alpha = parse_momentum(momentum, sl);
  FieldElement v = parse_state(state, sl);
  bool integral = true;
  for (const auto& m : v.momenta())
    if (!is_integer(sl.amb.pair(alpha, m))) integral = false;
  o.doc = json{{"schema", kSchemaVersion},
               {"algebra", sl.rs.label()},
               {"ell", sl.ell},
               {"momentum", rvec_json(alpha)},
               {"state", to_string(v)}};
  Table t{"screening", {"input", "output"}, {}};
  if (integral) {
    FieldElement img = apply_screening(sl.amb, alpha, v);
    o.doc["exact"] = true;
    o.doc["result"] = to_string(img);
    t.rows.push_back({to_string(v), to_string(img)});
    o.tables.push_back(t);
    return o;
  }
  if (!fractional)
    throw std::domain_error("the screening pairs fractionally with the state; rerun with --fractional --truncate K");
  FracResidue r = residue_frac(sl.amb, FieldElement::exp(alpha), v, truncate);
  o.banners.push_back("APPROXIMATE OUTPUT: fractional residue summed over " + std::to_string(truncate) +
                      " modes; components of degree >= " + std::to_string(r.complete_below_degree) +
                      " are truncated");
  json terms = json::array();
  for (const auto& [k, c] : r.terms) {
    std::ostringstream val;
    val << std::setprecision(12) << c.real() << (c.imag() < 0 ? " - " : " + ") << std::abs(c.imag()) << "i";
    std::string key = to_string(FieldElement::term(k));
    terms.push_back(json{{"term", key}, {"re", c.real()}, {"im", c.imag()}});
    t.rows.push_back({key, val.str()});
  }
  o.doc["exact"] = false;
  o.doc["truncation"] = truncate;
  o.doc["complete_below_degree"] = r.complete_below_degree;
  o.doc["terms"] = terms;
  t.headers = {"term", "coefficient"};
  o.tables.push_back(t);
  return o;
}

std::string coeff_list(const QSeries& q) {
  std::vector<std::string> s;
  for (const auto& c : q.coeffs()) s.push_back(to_string(c));
  return join(s, ",");
}

Output characters_info(const ScreeningLattices& sl, int order, bool check_jtp, bool check_sf, int sf_level) {
  Output o;
  json mods = json::array();
  Table t{"graded dimensions", {"module", "offset", "step", "coefficients"}, {}};
  for (const auto& [name, coset] : module_cosets(sl)) {
    QSeries g = graded_dim_module(sl, coset, order);
    mods.push_back(json{{"module", name}, {"series", series_to_json(g)}});
    t.rows.push_back({name, to_string(g.offset()), "1/" + std::to_string(g.step()), coeff_list(g)});
  }
  o.doc = json{{"schema", kSchemaVersion}, {"algebra", sl.rs.label()}, {"ell", sl.ell}, {"modules", mods}};
  o.tables.push_back(t);
  if (check_jtp) {
    if (!(sl.rs.series == 'A' && sl.rs.rank == 1 && sl.ell == 4))
      throw std::invalid_argument("--check-jtp applies to --algebra A1 --ell 4");
    QSeries vac = graded_dim_module(sl, make_coset(sl, zeros(1)), order);
    QSeries ns = sf_characters(1, order).ns_plus;
    bool match = vac == ns;
    o.doc["jtp"] = match ? "MATCH" : "MISMATCH";
    o.tables.push_back({"vacuum vs chi_ns+ (one pair)", {"result"}, {{match ? "MATCH" : "MISMATCH"}}});
    if (!match) o.failures.push_back("jtp: vacuum graded dimension differs from chi_ns+");
  }
  if (check_sf) {
    if (!(sl.rs.series == 'B' && sl.ell == 4)) throw std::invalid_argument("--check-sf applies to --algebra Bn --ell 4");
    CharacterMatchReport rep = kernel_char_match(sl.rs.rank, sf_level);
    json rows = json::array();
    Table m{"kernel vs symplectic fermion characters", {"module", "character", "offset", "computed", "expected", "match"},
            {}};
    for (const auto& r : rep.rows) {
      std::vector<std::string> cs, es;
      for (const auto& c : r.computed) cs.push_back(to_string(c));
      for (const auto& e : r.expected) es.push_back(to_string(e));
      rows.push_back(json{{"module", r.module},
                          {"character", r.character},
                          {"offset", to_string(r.offset)},
                          {"computed", cs},
                          {"expected", es},
                          {"match", r.match}});
      m.rows.push_back({r.module, r.character, to_string(r.offset), join(cs, ","), join(es, ","),
                        r.match ? "MATCH" : "MISMATCH"});
      if (!r.match) o.failures.push_back("sf: " + r.module + " vs " + r.character);
    }
    o.doc["sf_match"] = rows;
    o.tables.push_back(m);
  }
  return o;
}

Output sf_info(int pairs, int order) {
  Output o;
  SFCharacters s = sf_characters(pairs, order);
  std::vector<std::pair<std::string, const QSeries*>> all = {
      {"ns+", &s.ns_plus}, {"ns-", &s.ns_minus}, {"r+", &s.r_plus}, {"r-", &s.r_minus},
      {"chi1", &s.chi1},   {"chi2", &s.chi2},    {"chi3", &s.chi3}, {"chi4", &s.chi4}};
  json chars = json::object();
  Table t{"symplectic fermion characters, " + std::to_string(pairs) + " pairs", {"character", "offset", "step", "coefficients"},
          {}};
  for (const auto& [name, q] : all) {
    chars[name] = series_to_json(*q);
    t.rows.push_back({name, to_string(q->offset()), "1/" + std::to_string(q->step()), coeff_list(*q)});
  }
  o.doc = json{{"schema", kSchemaVersion}, {"pairs", pairs}, {"order", order}, {"characters", chars}};
  o.tables.push_back(t);
  return o;
}

Output degeneracy_info(const RootSystem& rs, int ell, bool full_table) {
  Output o;
  Classification c = classify(rs, ell);
  json orders = c.orders;
  o.doc = json{{"schema", kSchemaVersion},
               {"algebra", rs.label()},
               {"ell", ell},
               {"category", c.category},
               {"g0", c.g0},
               {"gell", c.gell},
               {"orders", orders},
               {"computed", c.computed}};
  if (!c.note.empty()) o.doc["note"] = c.note;
  std::vector<std::string> ord;
  for (long x : c.orders) ord.push_back(std::to_string(x));
  o.tables.push_back({"classification", {"g", "l", "category", "g0", "g(l)", "l_alpha"},
                      {{rs.label(), std::to_string(ell), c.category, c.g0, c.gell, join(ord, ",")}}});
  try {
    DegeneracyReport r = extension_report(rs, ell);
    o.doc["extension"] = json{{"num_simples", r.num_simples},
                              {"num_simples_quotient", r.num_simples_snf},
                              {"num_simples_table", r.num_simples_table},
                              {"dim_X", r.dim_X},
                              {"dim_X_index", r.dim_X_index},
                              {"g0_table_label", r.g0_table_label},
                              {"num_simples_g0", r.num_simples_g0},
                              {"num_simples_g0_quotient", r.num_simples_g0_snf},
                              {"num_simples_g0_table", r.num_simples_g0_table},
                              {"central_charge", to_string(r.central_charge)},
                              {"central_charge_table", to_string(r.central_charge_table)},
                              {"central_charge_formula", r.central_charge_formula},
                              {"global_symmetry", r.global_symmetry},
                              {"discrepancies", r.discrepancies}};
    o.tables.push_back({"extension",
                        {"W", "#simples", "dim X", "W(g0)", "#simples g0", "c", "c (table)", "global symmetry"},
                        {{"W_{" + rs.label() + ",l=" + std::to_string(ell) + "}",
                          std::to_string(r.num_simples) + " (" + r.num_simples_table + ")", std::to_string(r.dim_X),
                          "W_{" + r.g0_table_label + "}",
                          std::to_string(r.num_simples_g0) + " (" + r.num_simples_g0_table + ")",
                          to_string(r.central_charge), r.central_charge_formula + " = " + to_string(r.central_charge_table),
                          r.global_symmetry}}});
    for (const auto& d : r.discrepancies) o.failures.push_back("extension: " + d);
  } catch (const std::invalid_argument&) {
    o.doc["extension"] = nullptr;
  }
  if (full_table) {
    json rows = json::array();
    Table t{"degeneracy table", {"g", "l", "category", "g0", "g(l)", "expected", "match"}, {}};
    for (const auto& row : classification_table()) {
      rows.push_back(json{{"algebra", row.algebra},
                          {"ell", row.ell},
                          {"category", row.computed.category},
                          {"g0", row.computed.g0},
                          {"gell", row.computed.gell},
                          {"match", row.match}});
      t.rows.push_back({row.algebra, std::to_string(row.ell), row.computed.category, row.computed.g0,
                        row.computed.gell,
                        row.expected_category + " " + row.expected_g0 + " " + row.expected_gell,
                        row.match ? "yes" : "NO"});
      if (!row.match) o.failures.push_back("classification: " + row.algebra + " l=" + std::to_string(row.ell));
    }
    o.doc["table"] = rows;
    o.tables.push_back(t);
  }
  return o;
}

Output virasoro_info(const ScreeningLattices& sl, int max_mode, int max_level) {
  Output o;
  VirasoroAction vir(stress_tensor(sl));
  Coset vac = make_coset(sl, zeros(sl.rank()));
  Rational h0 = groundstates(sl, vac).h;
  std::vector<FieldElement> states;
  for (int k = 0; k <= max_level; ++k)
    for (auto& b : layer_basis(sl, vac, h0 + k).basis()) states.push_back(std::move(b));
  json pairs = json::array();
  std::size_t failed = 0;
  for (long m = -max_mode; m <= max_mode; ++m)
    for (long n = -max_mode; n <= max_mode; ++n) {
      CommutatorReport r = commutator_check(vir, m, n, states);
      pairs.push_back(json{{"m", m}, {"n", n}, {"states", r.states_checked}, {"ok", r.ok}});
      if (!r.ok) {
        ++failed;
        o.failures.push_back("[L" + std::to_string(m) + ",L" + std::to_string(n) + "] on " +
                             to_string(*r.counterexample));
      }
    }
  std::size_t lm1_failed = 0;
  for (const auto& s : states)
    if (vir.L(-1, s) != derive(s)) {
      ++lm1_failed;
      o.failures.push_back("L_{-1} != d on " + to_string(s));
    }
  o.doc = json{{"schema", kSchemaVersion},
               {"algebra", sl.rs.label()},
               {"ell", sl.ell},
               {"central_charge", to_string(vir.stress().c)},
               {"states", states.size()},
               {"commutators", pairs},
               {"l_minus_one_is_derivative", lm1_failed == 0}};
  o.tables.push_back({"virasoro check " + sl.rs.label(),
                      {"states", "commutator pairs", "failed", "L_{-1} = d"},
                      {{std::to_string(states.size()), std::to_string(pairs.size()), std::to_string(failed),
                        lm1_failed == 0 ? "yes" : "NO"}}});
  return o;
}

int finish(const Output& o, const Common& c, const std::string& golden_key, std::ostream& out, std::ostream& err) {
  std::ostringstream rendered;
  render(o, c.format, rendered);
  out << rendered.str();
  std::vector<std::string> failures = o.failures;
  if (!c.golden_dir.empty()) {
    std::string ext = c.format == "json" ? "json" : c.format == "tsv" ? "tsv" : "md";
    std::filesystem::path path = std::filesystem::path(c.golden_dir) / (golden_key + "." + ext);
    std::ifstream in(path);
    if (!in) {
      failures.push_back("golden file missing: " + path.string());
    } else {
      std::stringstream expected;
      expected << in.rdbuf();
      if (expected.str() != rendered.str()) failures.push_back("output differs from golden file " + path.string());
    }
  }
  if (failures.empty()) return 0;
  err << json{{"failures", failures}}.dump(2) << "\n";
  return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Screening operators and kernels in lattice vertex algebras", "lvoa"};
  app.require_subcommand(1);
  Common c;
  auto add_common = [&](CLI::App* sub, bool with_lattice) {
    if (with_lattice) {
      sub->add_option("--algebra", c.algebra, "Root system label, e.g. A1, B2, Bn (with --n)");
      sub->add_option("--n", c.n, "Rank for series labels such as Bn");
      sub->add_option("--ell", c.ell, "Order l of the root of unity, l = 2p");
    }
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "tsv", "markdown"}));
    sub->add_option("--golden-dir", c.golden_dir, "Compare the rendered output with a stored golden file");
  };

  auto* lattice = app.add_subcommand("lattice-info", "Lattices, background charge, central charge, braiding");
  add_common(lattice, true);
  auto* ground = app.add_subcommand("groundstates", "Groundstates and conformal dimensions of every module");
  add_common(ground, true);

  std::string module = "all";
  int max_level = 2;
  auto* kernel = app.add_subcommand("kernel", "Kernel dimensions of the short screenings by L0 layer");
  add_common(kernel, true);
  kernel->add_option("--module", module, "Module name or 'all'");
  kernel->add_option("--max-level", max_level, "Highest layer above the groundstates")->check(CLI::Range(0, 12));

  std::string momentum, state;
  bool fractional = false;
  int truncate = 8;
  auto* screen = app.add_subcommand("screen-apply", "Apply a screening operator to a state");
  add_common(screen, true);
  screen->add_option("--momentum", momentum, "Screening momentum, e.g. -a/sqrtp")->required();
  screen->add_option("--state", state, "State expression, e.g. 'd phi[a] * exp[a]'")->required();
  screen->add_flag("--fractional", fractional, "Allow fractional pairings (approximate residue)");
  screen->add_option("--truncate", truncate, "Number of modes in the fractional residue")->check(CLI::Range(1, 64));

  int order = 10, sf_level = 3;
  bool check_jtp = false, check_sf = false;
  auto* chars = app.add_subcommand("characters", "Graded dimensions of every module");
  add_common(chars, true);
  chars->add_option("--order", order, "Number of integer steps")->check(CLI::Range(0, 200));
  chars->add_flag("--check-jtp", check_jtp, "Compare the A1 vacuum with chi_ns+ for one pair");
  chars->add_flag("--check-sf", check_sf, "Compare Bn kernels with the symplectic fermion characters");
  chars->add_option("--sf-level", sf_level, "Layers used by --check-sf")->check(CLI::Range(0, 6));

  int pairs = 1;
  auto* sf = app.add_subcommand("sf-characters", "Characters of n pairs of symplectic fermions");
  add_common(sf, false);
  sf->add_option("--pairs", pairs, "Number of fermion pairs")->check(CLI::Range(1, 64));
  sf->add_option("--order", order, "Number of integer steps")->check(CLI::Range(0, 400));

  bool full_table = false;
  auto* degen = app.add_subcommand("degeneracy", "Degeneracy classification and extension data");
  add_common(degen, true);
  degen->add_flag("--table", full_table, "Also print the full classification table");

  int max_mode = 3, vir_level = 5;
  auto* vir = app.add_subcommand("virasoro-check", "Verify the Virasoro relations on vacuum layers");
  add_common(vir, true);
  vir->add_option("--max-mode", max_mode, "Largest |m|, |n|")->check(CLI::Range(0, 8));
  vir->add_option("--max-level", vir_level, "Highest vacuum layer")->check(CLI::Range(0, 8));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*sf) return finish(sf_info(pairs, order), c, "sf-characters_n" + std::to_string(pairs), out, err);
    RootSystem rs = resolve_algebra(c);
    const std::string key = series_key(c, rs);
    if (*degen) return finish(degeneracy_info(rs, c.ell, full_table), c, "degeneracy_" + key, out, err);
    ScreeningLattices sl = build_screening_lattices(rs, c.ell);
    if (*lattice) return finish(lattice_info(sl), c, "lattice-info_" + key, out, err);
    if (*ground) return finish(groundstate_info(sl), c, "groundstates_" + key, out, err);
    if (*kernel) return finish(kernel_info(sl, module, max_level), c, "kernel_" + key + "_" + module, out, err);
    if (*screen) return finish(screen_apply(sl, momentum, state, fractional, truncate), c, "screen-apply_" + key, out, err);
    if (*chars) return finish(characters_info(sl, order, check_jtp, check_sf, sf_level), c, "characters_" + key, out, err);
    if (*vir) return finish(virasoro_info(sl, max_mode, vir_level), c, "virasoro-check_" + key, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace lvoa::tools
