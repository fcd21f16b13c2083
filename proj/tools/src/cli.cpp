#include "weilform/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>

#include "weilform/chars.hpp"
#include "weilform/correspond.hpp"
#include "weilform/discform.hpp"
#include "weilform/eisenstein.hpp"
#include "weilform/errors.hpp"
#include "weilform/obstruct.hpp"
#include "weilform/qseries.hpp"
#include "weilform/serialize.hpp"
#include "weilform/weilrep.hpp"

namespace weilform::cli {

namespace {

struct RunConfig {
  std::int64_t n1 = 3;
  std::int64_t prec = kDefaultTruncation;
  std::string output = "json";

  bool json() const { return output == "json"; }
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, path + ": " + e.what());
  }
}

std::vector<std::int64_t> parse_ints(const std::string& text, std::size_t expected, const char* what) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, std::string("bad integer in ") + what + ": '" + item + "'");
    }
  }
  if (out.size() != expected) throw Error(Errc::ParseError, std::string(what) + " needs " + std::to_string(expected) + " entries");
  return out;
}

std::complex<long double> parse_tau(const std::string& text) {
  std::stringstream ss(text);
  std::string re, im;
  long double x = 0, y = 0;
  if (!std::getline(ss, re, ',') || !std::getline(ss, im, ',')) throw Error(Errc::ParseError, "tau is \"x,y\"");
  try {
    x = std::stold(re);
    y = std::stold(im);
  } catch (const std::exception&) {
    throw Error(Errc::ParseError, "bad tau '" + text + "'");
  }
  return {x, y};
}

SL2Matrix parse_matrix(const std::string& text) {
  const auto v = parse_ints(text, 4, "--matrix");
  return {v[0], v[1], v[2], v[3]};
}

std::string exponent_text(std::int64_t n, std::int64_t den) {
  Rational e = frac(n, den);
  if (e.get_den() == 1) return e.get_num().get_str();
  return "(" + e.get_str() + ")";
}

std::string series_text(const QExpansion& f) {
  std::string out;
  for (const auto& [n, c] : f.coeffs()) {
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    const bool unit = mag == 1;
    if (n == 0) {
      out += mag.get_str();
      continue;
    }
    if (!unit) out += mag.get_str() + "*";
    out += "q";
    if (n != f.den()) out += "^" + exponent_text(n, f.den());
  }
  if (!out.empty()) out += " + ";
  out += "O(q^" + exponent_text(f.trunc(), f.den()) + ")";
  return out;
}

std::string complex_text(std::complex<long double> z) {
  std::ostringstream os;
  os << std::setprecision(6) << static_cast<double>(z.real()) << (z.imag() < 0 ? "-" : "+")
     << static_cast<double>(std::fabs(z.imag())) << "i";
  return os.str();
}

std::string jordan_text(const JordanSymbol& j) {
  std::ostringstream os;
  std::int64_t q = 1;
  for (int i = 0; i < j.exponent; ++i) q *= j.prime;
  os << q;
  if (j.oddity) os << "_" << *j.oddity;
  os << "^{" << (j.sign > 0 ? "+" : "-") << j.rank << "}";
  return os.str();
}

// ---------------------------------------------------------------------------

struct DfSections {
  bool jordan = false, aut = false, norms = false;
  bool all() const { return !jordan && !aut && !norms; }
};

void cmd_df(const RunConfig& cfg, bool negated, DfSections want, std::ostream& out) {
  if (want.all()) want = {true, true, true};
  DiscriminantForm D = DiscriminantForm::build(cfg.n1);
  if (negated) D = D.negated();
  const auto jordan = D.jordan();
  const auto autos = D.automorphisms();
  if (cfg.json()) {
    Json gens = Json::array();
    for (const auto& g : D.generators())
      gens.push_back({{"order", g.order}, {"norm", rational_to_string(frac(g.norm_num, D.level()))}});
    Json js = Json::array();
    for (const auto& j : jordan) {
      Json e = {{"prime", j.prime}, {"exponent", j.exponent}, {"rank", j.rank}, {"sign", j.sign}};
      if (j.oddity) e["oddity"] = *j.oddity;
      js.push_back(e);
    }
    Json classes = Json::object();
    for (std::int64_t r : D.realized_classes()) classes[std::to_string(r)] = D.count_norm_class(r);
    Json j = {{"n1", cfg.n1}, {"level", D.level()}, {"negated", negated}, {"order", D.size()}, {"generators", gens}};
    if (want.jordan) j["jordan"] = js;
    if (want.aut) j["automorphisms"] = autos.size();
    if (want.norms) j["norm_classes"] = classes;
    j["consistent"] = D.cross_check();
    out << j.dump(2) << "\n";
    return;
  }
  out << "Q(sqrt(" << cfg.n1 << ")), level " << D.level() << (negated ? ", negated" : "") << "\n";
  out << "|D| = " << D.size() << "\n";
  out << "generators:";
  for (const auto& g : D.generators()) out << " [order " << g.order << ", q = " << frac(g.norm_num, D.level()) << "]";
  out << "\n";
  if (want.jordan) {
    out << "jordan:";
    for (const auto& j : jordan) out << " " << jordan_text(j);
    out << "\n";
  }
  if (want.aut) out << "|Aut(D)| = " << autos.size() << "\n";
  if (want.norms) {
    out << "norm classes (N q : count):";
    for (std::int64_t r : D.realized_classes()) out << " " << r << ":" << D.count_norm_class(r);
    out << "\n";
  }
  out << "cross-check: " << (D.cross_check() ? "ok" : "FAILED") << "\n";
}

void cmd_chars(const RunConfig& cfg, std::optional<std::int64_t> eval, std::ostream& out) {
  const CharData C = CharData::from_n1(cfg.n1);
  if (eval) {
    const std::int64_t n = *eval;
    if (cfg.json()) {
      Json comps = Json::object();
      for (std::int64_t p : C.primes()) comps[std::to_string(p)] = chi_p(C, p, n);
      out << Json{{"N", C.N}, {"n", n}, {"chi", chi(C, n)}, {"components", comps}}.dump(2) << "\n";
    } else {
      out << "chi_D(" << n << ") = " << chi(C, n) << "\n";
      for (std::int64_t p : C.primes()) out << "chi_" << p << "(" << n << ") = " << chi_p(C, p, n) << "\n";
    }
    return;
  }
  const auto sv = sign_vectors(C);
  static constexpr const char* kTags[] = {"odd-legendre", "-4", "+8", "-8"};
  if (cfg.json()) {
    Json comps = Json::array();
    for (const auto& lc : C.components) {
      const auto g = gauss_sum_check(C, lc.prime);
      comps.push_back({{"prime", lc.prime},
                       {"modulus", lc.modulus},
                       {"disc", lc.disc},
                       {"tag", kTags[static_cast<int>(lc.tag)]},
                       {"gauss_unit", lc.gauss_unit_is_i ? "i" : "1"},
                       {"epsilon", sv.epsilon[lc.prime]},
                       {"epsilon_star", sv.epsilon_star[lc.prime]},
                       {"gauss_sum_square", rational_to_string(g.square)},
                       {"gauss_sum_ok", g.ok()}});
    }
    out << Json{{"n1", C.n1}, {"N", C.N}, {"components", comps}}.dump(2) << "\n";
    return;
  }
  out << "chi_D = (" << C.N << "/.)\n";
  for (const auto& lc : C.components) {
    const auto g = gauss_sum_check(C, lc.prime);
    out << "p = " << lc.prime << ": N_p = " << lc.modulus << ", chi_p = (" << lc.disc << "/.), W = "
        << (lc.gauss_unit_is_i ? "i*" : "") << "sqrt(" << lc.modulus << "), eps = " << sv.epsilon[lc.prime]
        << ", eps* = " << sv.epsilon_star[lc.prime] << ", W^2 = " << g.square << (g.ok() ? " ok" : " MISMATCH") << "\n";
  }
}

void cmd_weil(const RunConfig& cfg, const std::string& matrix, bool dual, bool negated, std::ostream& out) {
  DiscriminantForm D = DiscriminantForm::build(cfg.n1);
  if (negated) D = D.negated();
  const WeilRepresentation rep(D);
  const SL2Matrix M = parse_matrix(matrix);
  const WeilMatrix rho = dual ? rep.dual_rho(M) : rep.rho(M);
  if (cfg.json()) {
    Json elems = Json::array();
    for (const auto& e : D.elements()) elems.push_back(e.coords);
    Json j = to_json(rho);
    j["elements"] = elems;
    out << j.dump(2) << "\n";
    return;
  }
  for (std::size_t i = 0; i < rho.dim(); ++i) {
    for (std::size_t k = 0; k < rho.dim(); ++k) out << (k ? "  " : "") << complex_text(rho(i, k).to_complex());
    out << "\n";
  }
}

void cmd_eta(const RunConfig& cfg, const std::string& spec_text, std::int64_t cusps, std::ostream& out) {
  const EtaSpec spec = parse_eta_spec(spec_text);
  if (cusps > 0) {
    const auto orders = eta_cusp_orders(spec, cusps);
    if (cfg.json()) {
      Json rows = Json::array();
      for (const auto& o : orders) rows.push_back({{"cusp", o.cusp.to_string()}, {"order", rational_to_string(o.order)}});
      out << Json{{"level", cusps}, {"orders", rows}}.dump(2) << "\n";
    } else {
      for (const auto& o : orders) out << o.cusp.to_string() << ": " << o.order << "\n";
    }
    return;
  }
  const QExpansion f = eta_quotient(spec, cfg.prec);
  out << (cfg.json() ? to_json(f).dump() : series_text(f)) << "\n";
}

void cmd_eis(const RunConfig& cfg, std::int64_t weight, std::int64_t m, std::ostream& out) {
  const CharData C = CharData::from_n1(cfg.n1);
  const QExpansion f = m > 0 ? eisenstein_m(C, weight, m, cfg.prec) : e_epsilon_star(C, weight, cfg.prec);
  out << (cfg.json() ? to_json(f).dump() : series_text(f)) << "\n";
}

void print_form(const RunConfig& cfg, const VectorForm& F, std::ostream& out) {
  if (cfg.json()) {
    out << to_json(F).dump() << "\n";
    return;
  }
  for (const auto& [r, comp] : F.classes) out << "[" << r << "] " << series_text(comp) << "\n";
}

void cmd_lift(const RunConfig& cfg, const std::string& path, std::int64_t weight, std::ostream& out) {
  const QExpansion f = series_from_json(read_json_file(path));
  print_form(cfg, lift_psi(f, DiscriminantForm::build(cfg.n1), weight), out);
}

void cmd_descend(const RunConfig& cfg, const std::string& path, std::ostream& out) {
  const QExpansion f = descend_phi(vector_form_from_json(read_json_file(path)));
  out << (cfg.json() ? to_json(f).dump() : series_text(f)) << "\n";
}

int cmd_check_transform(const RunConfig& cfg, const std::string& path, const std::string& matrix,
                        const std::string& tau, double tol, std::ostream& out) {
  VectorForm F = path.empty() ? VectorForm{DiscriminantForm::build(cfg.n1), 0, {}}
                              : vector_form_from_json(read_json_file(path));
  if (path.empty()) {
    if (cfg.n1 != 3) throw Error(Errc::UnsupportedCase, "without --form only the level-12 form f1 is built in");
    F = lift_psi(build_f1_level12(cfg.prec), F.form, 0);
  }
  const auto rep = numeric_transform_check(F, parse_matrix(matrix), parse_tau(tau), tol);
  if (cfg.json()) {
    out << Json{{"ok", rep.ok},
                {"max_deviation", static_cast<double>(rep.max_deviation)},
                {"tail_estimate", static_cast<double>(rep.tail_estimate)}}
               .dump(2)
        << "\n";
  } else {
    out << (rep.ok ? "PASS" : "FAIL") << " max deviation " << static_cast<double>(rep.max_deviation)
        << ", tail estimate " << static_cast<double>(rep.tail_estimate) << "\n";
  }
  return rep.ok ? kOk : kDomainError;
}

void cmd_obstruct(const RunConfig& cfg, std::int64_t weight, const std::string& principal, const std::string& basis_path,
                  std::ostream& out) {
  const CharData C = CharData::from_n1(cfg.n1);
  const PrincipalPart P = PrincipalPart::parse(principal, cfg.n1, weight);
  std::vector<QExpansion> basis;
  if (!basis_path.empty()) {
    const Json j = read_json_file(basis_path);
    if (!j.is_array()) throw Error(Errc::ParseError, "cusp basis file must hold a JSON array of series");
    for (const auto& e : j) basis.push_back(series_from_json(e));
  }
  const PrincipalCheck valid = validate_principal_part(P, C);
  const bool exists = valid.ok && existence_check(P, basis, C.N);
  std::optional<Rational> a0;
  if (exists && (cfg.n1 % 4) != 2) a0 = constant_term(P, C);
  if (cfg.json()) {
    Json j = {{"exists", exists}, {"constant_term", a0 ? Json(rational_to_string(*a0)) : Json(nullptr)}};
    if (!valid.ok) j["violations"] = valid.violations;
    out << j.dump(2) << "\n";
    return;
  }
  out << "exists: " << (exists ? "yes" : "no") << "\n";
  if (!valid.ok) {
    out << "epsilon-condition fails at q^";
    for (std::size_t i = 0; i < valid.violations.size(); ++i) out << (i ? ", q^" : "") << valid.violations[i];
    out << "\n";
  }
  out << "constant term: " << (a0 ? a0->get_str() : std::string("n/a")) << "\n";
}

int cmd_reproduce(const RunConfig& cfg, std::ostream& out) {
  const auto steps = run_reproduce(cfg.n1, cfg.prec);
  std::size_t passed = 0;
  for (const auto& s : steps) passed += s.pass;
  const bool ok = passed == steps.size();
  if (cfg.json()) {
    Json arr = Json::array();
    for (const auto& s : steps) arr.push_back({{"name", s.name}, {"pass", s.pass}, {"detail", s.detail}});
    out << Json{{"n1", cfg.n1},
                {"prec", cfg.prec},
                {"steps", arr},
                {"summary", {{"passed", passed}, {"failed", steps.size() - passed}, {"ok", ok}}}}
               .dump(2)
        << "\n";
  } else {
    for (const auto& s : steps) out << (s.pass ? "PASS " : "FAIL ") << s.name << ": " << s.detail << "\n";
    out << passed << "/" << steps.size() << " steps passed\n";
  }
  return ok ? kOk : kDomainError;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact modular-form and Weil-representation computations for real quadratic fields", "weilform"};
  RunConfig cfg;
  app.add_option("--output", cfg.output, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--prec", cfg.prec, "truncation T (coefficients below q^T)")->check(CLI::Range(20, 1000000));
  app.require_subcommand(1);

  auto with_n1 = [&cfg](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--n1", cfg.n1, "squarefree N1 > 1");
    if (required) opt->required();
    sub->fallthrough();
    return sub;
  };

  bool negated = false, dual = false;
  std::string matrix, spec, path, tau = "0,1", principal, basis;
  std::int64_t eis_weight = 2, weight = 0, m = 0, cusps = 0;
  double tol = 1e-6;

  DfSections sections;
  std::optional<std::int64_t> eval;
  auto* df = with_n1(app.add_subcommand("df", "discriminant form data"), true);
  df->add_flag("--negated", negated, "use D[-1]");
  df->add_flag("--jordan", sections.jordan, "Jordan symbols");
  df->add_flag("--aut", sections.aut, "automorphism count");
  df->add_flag("--norms", sections.norms, "norm classes with multiplicities");
  auto* chars = with_n1(app.add_subcommand("chars", "character components, Gauss sums, sign vectors"), true);
  chars->add_option("--eval", eval, "print chi_D(n) and every chi_p(n)");
  auto* weil = with_n1(app.add_subcommand("weil", "Weil representation matrix rho_D(M)"), true);
  weil->add_option("--matrix", matrix, "a,b,c,d")->required();
  weil->add_flag("--dual", dual, "conjugate representation");
  weil->add_flag("--negated", negated, "use D[-1]");
  auto* eta = app.add_subcommand("eta", "eta quotient expansion or cusp orders")->fallthrough();
  eta->add_option("--spec", spec, "d:r,d:r,...")->required();
  eta->add_option("--cusps", cusps, "print orders at the cusps of Gamma_0(N) instead");
  auto* eis = with_n1(app.add_subcommand("eis", "Eisenstein series E_m, or E^{eps*} without --m"), true);
  eis->add_option("--weight", eis_weight, "even weight >= 2")->capture_default_str();
  eis->add_option("--m", m, "exact divisor m = N_m of N");
  auto* lift = with_n1(app.add_subcommand("lift", "scalar series -> vector-valued form"), true);
  lift->add_option("--series", path, "series JSON file")->required();
  lift->add_option("--weight", weight, "weight k");
  auto* descend = app.add_subcommand("descend", "vector-valued form -> scalar series")->fallthrough();
  descend->add_option("--form", path, "vector form JSON file")->required();
  auto* check = with_n1(app.add_subcommand("check-transform", "numeric check of F(M tau) = rho(M) F(tau)"), false);
  check->add_option("--form", path, "vector form JSON file (default: lift of f1)");
  check->add_option("--matrix", matrix, "a,b,c,d")->default_val("0,-1,1,0");
  check->add_option("--tau", tau, "x,y with y >= 0.8")->default_val("0,1");
  check->add_option("--tol", tol, "tolerance")->default_val(1e-6);
  auto* obstruct = with_n1(app.add_subcommand("obstruct", "existence and constant term from a principal part"), true);
  obstruct->add_option("--weight", weight, "weight k <= 0");
  obstruct->add_option("--principal", principal, "n:coeff,... with n < 0")->required();
  obstruct->add_option("--cusp-basis", basis, "JSON array of cusp forms (default: none)");
  auto* f1 = app.add_subcommand("f1", "the level-12 form with principal part 1/q")->fallthrough();
  auto* reproduce = with_n1(app.add_subcommand("reproduce", "level-12 walkthrough with pass/fail per step"), false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  }

  try {
    if (df->parsed()) cmd_df(cfg, negated, sections, out);
    if (chars->parsed()) cmd_chars(cfg, eval, out);
    if (weil->parsed()) cmd_weil(cfg, matrix, dual, negated, out);
    if (eta->parsed()) cmd_eta(cfg, spec, cusps, out);
    if (eis->parsed()) cmd_eis(cfg, eis_weight, m, out);
    if (lift->parsed()) cmd_lift(cfg, path, weight, out);
    if (descend->parsed()) cmd_descend(cfg, path, out);
    if (check->parsed()) return cmd_check_transform(cfg, path, matrix, tau, tol, out);
    if (obstruct->parsed()) cmd_obstruct(cfg, weight, principal, basis, out);
    if (f1->parsed()) {
      const QExpansion f = build_f1_level12(cfg.prec);
      out << (cfg.json() ? to_json(f).dump() : series_text(f)) << "\n";
    }
    if (reproduce->parsed()) return cmd_reproduce(cfg, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kDomainError;
  }
  return kOk;
}

}  // namespace weilform::cli
