#include "lgmf/cli.hpp"

#include <chrono>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "lgmf/closed_form.hpp"
#include "lgmf/critical.hpp"
#include "lgmf/errors.hpp"
#include "lgmf/quantum4.hpp"
#include "lgmf/random.hpp"
#include "lgmf/toric.hpp"
#include "lgmf/zoo.hpp"

namespace lgmf {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

json complex_json(std::complex<double> c) { return json::array({c.real(), c.imag()}); }

// "preset:<name>" selects a built-in fan, anything else is a file path.
ToricFanoData load_fan_arg(const std::string& arg) {
  const std::string prefix = "preset:";
  if (arg.rfind(prefix, 0) == 0) return preset_fan(arg.substr(prefix.size()));
  return load_fan_file(arg);
}

json report_json(const std::string& subject, const MfCheck& check, const Endomorphism& d,
                 const std::optional<LaurentPoly>& expected_lambda, double wall_ms) {
  json r;
  r["subject"] = subject;
  bool pass = check.ok;
  if (pass && expected_lambda && *check.lambda != *expected_lambda) pass = false;
  r["pass"] = pass;
  r["lambda"] = check.lambda ? check.lambda->to_text() : "";
  r["wall_ms"] = wall_ms;
  if (!check.ok) {
    r["failure"] = {{"reason", check.reason},
                    {"row", d.labels()[*check.row]},
                    {"col", d.labels()[*check.col]},
                    {"entry", check.entry->to_text()}};
  } else if (!pass) {
    r["failure"] = {{"reason", "potential value differs from the expected one"},
                    {"row", d.labels()[0]},
                    {"col", d.labels()[0]},
                    {"entry", (*check.lambda - *expected_lambda).to_text()}};
  }
  return r;
}

json matrix_json(const Endomorphism& d) { return json::parse(endo_to_json(d)); }

void emit_matrix(std::ostream& out, const Endomorphism& d, const json& report, const std::string& format) {
  if (format == "pretty") {
    out << endo_pretty(d);
    out << (report["pass"].get<bool>() ? "PASS " : "FAIL ") << report["subject"].get<std::string>()
        << "  lambda = " << report["lambda"].get<std::string>() << '\n';
    if (report.contains("failure")) out << "  " << report["failure"].dump() << '\n';
  } else {
    out << json{{"matrix", matrix_json(d)}, {"report", report}}.dump(2) << '\n';
  }
}

// Wedge-contraction map of a fan, verified without throwing so that a
// failure can be reported entry by entry.
std::pair<Endomorphism, json> fan_mf(const std::string& fan_arg) {
  const auto start = Clock::now();
  const ToricFanoData fan = load_fan_arg(fan_arg);
  const PotentialW pot = build_potential(fan);
  const auto x = wedge_coefficients(pot.ring);
  const auto w = contraction_coefficients(fan, pot);
  Endomorphism d = wedge_contraction(pot.ring, x, w);
  const MfCheck check = mf_verify(d, pot.w);
  json report = report_json(fan_arg, check, d, pot.w.z_to_u(), 0.0);
  report["wall_ms"] = ms_since(start);
  return {std::move(d), std::move(report)};
}

int cmd_potential(const std::string& fan_arg, std::ostream& out) {
  const ToricFanoData fan = load_fan_arg(fan_arg);
  const PotentialW pot = build_potential(fan);
  json c = json::array();
  for (const auto& ci : pot.c) c.push_back(LaurentPoly::constant(pot.ring, ci).to_text());
  out << json{{"fan", json::parse(fan_to_json(fan))},
              {"W", pot.w.to_text()},
              {"c", c},
              {"signs", pot.signs},
              {"hori_vafa", hori_vafa_substitute(pot, fan).to_text()}}
             .dump(2)
      << '\n';
  return kOk;
}

int cmd_mf_build(const std::string& fan_arg, const std::string& format, std::ostream& out) {
  auto [d, report] = fan_mf(fan_arg);
  emit_matrix(out, d, report, format);
  return report["pass"].get<bool>() ? kOk : kFailed;
}

int cmd_mf_verify(const std::string& fan_arg, std::ostream& out) {
  auto [d, report] = fan_mf(fan_arg);
  out << report.dump(2) << '\n';
  return report["pass"].get<bool>() ? kOk : kFailed;
}

int cmd_mf_preset(const std::string& name, const std::string& format, std::ostream& out) {
  const auto names = zoo_preset_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) return cmd_mf_build("preset:" + name, format, out);
  const auto start = Clock::now();
  const MatrixFactorization mf = zoo_preset(name);
  const MfCheck check = mf_verify(mf.d, mf.potential);
  const json report = report_json(name, check, mf.d, mf.lambda, ms_since(start));
  emit_matrix(out, mf.d, report, format);
  return report["pass"].get<bool>() ? kOk : kFailed;
}

int cmd_crit(const std::string& fan_arg, double t, double tol, std::ostream& out) {
  const ToricFanoData fan = load_fan_arg(fan_arg);
  const PotentialW pot = build_potential(fan);
  SolverConfig cfg;
  cfg.tol = tol;
  const CriticalSolution sol = solve_critical_points(pot, t, cfg);
  json pts = json::array();
  for (const auto& p : sol.points) {
    json z = json::array();
    for (auto c : p.point) z.push_back(complex_json(c));
    pts.push_back({{"z", z}, {"residual", p.residual}, {"value", complex_json(p.value)}, {"degenerate", p.degenerate}});
  }
  json doc{{"t", t}, {"tol", tol}, {"points", pts}, {"distinct_values", sol.distinct_values}};
  if (!sol.diagnostic.empty()) doc["diagnostic"] = sol.diagnostic;
  out << doc.dump(2) << '\n';
  return kOk;
}

int cmd_generators(const std::string& fan_arg, double t, double tol, std::ostream& out) {
  const ToricFanoData fan = load_fan_arg(fan_arg);
  const PotentialW pot = build_potential(fan);
  SolverConfig cfg;
  cfg.tol = tol;
  const CriticalSolution sol = solve_critical_points(pot, t, cfg);
  json gens = json::array();
  for (const auto& p : sol.points) {
    const NumericGenerator g = generator_at_point(fan, pot, p, t, tol);
    json z = json::array();
    for (auto c : p.point) z.push_back(complex_json(c));
    gens.push_back({{"point", z}, {"lambda", complex_json(g.lambda)}, {"matrix", matrix_json(g.numeric_matrix())}});
  }
  out << json{{"t", t}, {"tol", tol}, {"generators", gens}}.dump(2) << '\n';
  return kOk;
}

int cmd_oracle_telescope(int n, int max_entry, int count, std::uint64_t seed, std::ostream& out) {
  if (n < 1 || n > kMaxVariables || max_entry < 1) throw DomainError("need 1 <= n <= 8 and max-entry >= 1");
  const RingContext ring = make_ring(n);
  long checked = 0;
  json failures = json::array();
  auto check = [&](const std::vector<int>& v) {
    ++checked;
    const TelescopeResult r = telescoping_check(ring, v);
    if (!r.pass) failures.push_back({{"v", v}, {"kind", "telescoping"}, {"difference", r.difference.to_text()}});
    for (int j = 0; j < n; ++j) {
      if (alpha_closed_form(ring, v, j) != alpha_by_entry_enumeration(ring, v, j)) {
        failures.push_back({{"v", v}, {"kind", "enumeration"}, {"j", j + 1}});
      }
    }
  };
  if (count <= 0) {
    std::vector<int> v(static_cast<std::size_t>(n), -max_entry);
    while (true) {
      if (std::any_of(v.begin(), v.end(), [](int x) { return x != 0; })) check(v);
      int pos = 0;
      while (pos < n && v[pos] == max_entry) v[pos++] = -max_entry;
      if (pos == n) break;
      ++v[pos];
    }
  } else {
    Rng rng(seed);
    for (int k = 0; k < count; ++k) check(random_ray(rng, n, max_entry));
  }
  json doc{{"n", n},
           {"max_entry", max_entry},
           {"mode", count <= 0 ? "exhaustive" : "random"},
           {"seed", seed},
           {"checked", checked},
           {"failures", failures},
           {"pass", failures.empty()}};
  out << doc.dump(2) << '\n';
  return failures.empty() ? kOk : kFailed;
}

int cmd_quantum4(const std::string& fan_arg, const std::string& g_text, std::uint64_t seed, std::ostream& out) {
  const ToricFanoData fan = load_fan_arg(fan_arg);
  if (fan.n() != 4) throw DomainError("quantum4 needs a 4-dimensional fan");
  const PotentialW pot = build_potential(fan);
  Rng rng(seed);
  const LaurentPoly g = g_text.empty() ? random_poly(rng, pot.ring, 3, 1) : LaurentPoly::parse(g_text, pot.ring);
  const MatrixFactorization base = build_tilde_d(fan, pot);
  const Endomorphism d3 = synthesize_d_minus3(pot.ring, g);
  const Endomorphism d = base.d + d3;
  const MfCheck full = mf_verify(d, pot.w);
  const bool full_ok = full.ok && *full.lambda == base.lambda;
  const ExtractResult ex = extract_g(d3);
  const bool extract_ok = ex.g && *ex.g == g;
  const Endomorphism q = apply_quantum_basis(d, g);
  const bool shape_ok = has_wedge_contraction_support(q);
  const MfCheck after = mf_verify(q, pot.w);
  const bool lambda_ok = after.ok && *after.lambda == base.lambda;
  const bool pass = full_ok && extract_ok && shape_ok && lambda_ok;
  out << json{{"seed", seed},
              {"g", g.to_text()},
              {"square_is_W_minus_W_u", full_ok},
              {"extract_round_trip", extract_ok},
              {"wedge_contraction_shape", shape_ok},
              {"same_lambda", lambda_ok},
              {"equals_tilde_d", q == base.d},
              {"lambda", base.lambda.to_text()},
              {"pass", pass}}
             .dump(2)
      << '\n';
  return pass ? kOk : kFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matrix factorizations of toric Landau-Ginzburg potentials", "lgmf"};
  app.require_subcommand(1);

  std::string fan_arg, format = "json", g_text, name;
  double t = std::exp(-1.0);
  double tol = 1e-12;
  int n = 2, max_entry = 3, count = 0;
  std::uint64_t seed = 0;
  const auto formats = CLI::IsMember({"json", "pretty"});

  auto* potential = app.add_subcommand("potential", "Floer potential of a fan");
  potential->add_option("fan", fan_arg, "fan file or preset:<name>")->required();

  auto* mf = app.add_subcommand("mf", "build and verify matrix factorizations");
  mf->require_subcommand(1);
  auto* build = mf->add_subcommand("build", "wedge-contraction factorization of a fan");
  build->add_option("fan", fan_arg, "fan file or preset:<name>")->required();
  build->add_option("--out", format, "json or pretty")->check(formats);
  auto* verify = mf->add_subcommand("verify", "verify the factorization of a fan");
  verify->add_option("fan", fan_arg, "fan file or preset:<name>")->required();
  auto* preset = mf->add_subcommand("preset", "built-in example");
  preset->add_option("name", name, "example or fan preset name")->required();
  preset->add_option("--out", format, "json or pretty")->check(formats);

  auto* crit = app.add_subcommand("crit", "critical points of W");
  crit->add_option("fan", fan_arg, "fan file or preset:<name>")->required();
  crit->add_option("--t", t, "value of T (default e^-1)");
  crit->add_option("--tol", tol, "residual tolerance");

  auto* gens = app.add_subcommand("generators", "generator factorizations at the critical points");
  gens->add_option("fan", fan_arg, "fan file or preset:<name>")->required();
  gens->add_option("--t", t, "value of T (default e^-1)");
  gens->add_option("--tol", tol, "residual tolerance");

  auto* oracle = app.add_subcommand("oracle", "independent checks");
  oracle->require_subcommand(1);
  auto* tele = oracle->add_subcommand("telescope", "telescoping identity and entry enumeration");
  tele->add_option("--n", n, "dimension");
  tele->add_option("--max-entry", max_entry, "bound on |v_j|");
  tele->add_option("--count", count, "random vectors to test (0: exhaustive)");
  tele->add_option("--seed", seed, "random seed");

  auto* q4 = app.add_subcommand("quantum4", "quantum basis change in dimension 4");
  q4->add_option("fan", fan_arg, "fan file or preset:<name>")->required();
  q4->add_option("--g", g_text, "the function g as polynomial text (random if omitted)");
  q4->add_option("--seed", seed, "seed for a random g");

  std::vector<const char*> argv{"lgmf"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (potential->parsed()) return cmd_potential(fan_arg, out);
    if (build->parsed()) return cmd_mf_build(fan_arg, format, out);
    if (verify->parsed()) return cmd_mf_verify(fan_arg, out);
    if (preset->parsed()) return cmd_mf_preset(name, format, out);
    if (crit->parsed()) return cmd_crit(fan_arg, t, tol, out);
    if (gens->parsed()) return cmd_generators(fan_arg, t, tol, out);
    if (tele->parsed()) return cmd_oracle_telescope(n, max_entry, count, seed, out);
    if (q4->parsed()) return cmd_quantum4(fan_arg, g_text, seed, out);
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << '\n';
    return kFailed;
  } catch (const std::ios_base::failure& e) {
    err << "I/O error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  err << "no command given\n";
  return kUsage;
}

}  // namespace lgmf
