#pragma once

// Command-line front end. `run_cli` is the whole program so tests can drive
// it with string streams; tools/lagrangia.cpp only forwards argv.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lagrangia/catalog.hpp"
#include "lagrangia/framing.hpp"
#include "lagrangia/seifert.hpp"
#include "lagrangia/swcalc.hpp"
#include "lagrangia/verify.hpp"

namespace lagrangia::cli {

enum class OutputFormat { table, json, tsv };

struct CliConfig {
  std::string catalog_path;
  OutputFormat output_format = OutputFormat::table;
  std::optional<std::uint64_t> seed;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
inline nlohmann::json json_int(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return to_int64(x);
  return x.str();
}

inline nlohmann::json json_curve(const CurveClass& c) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& x : c.coords()) a.push_back(json_int(x));
  return a;
}

inline nlohmann::json json_matrix(const IntMatrix& m) {
  nlohmann::json a = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& x : m.row(i)) row.push_back(json_int(x));
    a.push_back(std::move(row));
  }
  return a;
}

inline std::string rational_str(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

/// "a,b,..." with optional leading minus signs.
inline CurveClass parse_curve(const std::string& text, std::size_t dim) {
  std::vector<Integer> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t i = 0;
    if (!item.empty() && item[0] == '-') i = 1;
    if (i == item.size() || item.find_first_not_of("0123456789", i) != std::string::npos)
      throw error(errc::invalid_argument, "curve '" + text + "' is not a comma-separated integer list");
    coords.emplace_back(item);
  }
  if (!text.empty() && text.back() == ',')
    throw error(errc::invalid_argument, "curve '" + text + "' has a trailing comma");
  if (coords.size() != dim)
    throw error(errc::dimension, "curve '" + text + "' has " + std::to_string(coords.size()) +
                                     " coordinates, expected 2g = " + std::to_string(dim));
  return CurveClass(std::move(coords));
}

inline SWState parse_base(const std::string& name) {
  if (name == "unit" || name == "e2" || name == "E(2)") return unit_fixture();
  if (name.size() >= 2 && (name[0] == 'e' || name[0] == 'E') &&
      name.find_first_not_of("0123456789", 1) == std::string::npos)
    return elliptic_fixture(std::stoi(name.substr(1)));
  throw error(errc::invalid_argument, "unknown base manifold '" + name + "' (use unit or eN)");
}

namespace detail {

inline std::string signed_int(int x) { return x > 0 ? "+" + std::to_string(x) : std::to_string(x); }

inline void print_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

}  // namespace detail

inline int cmd_knot(const CliConfig& cfg, const Catalog& cat, const std::string& name, std::ostream& out) {
  const KnotModel& k = cat.at(name);
  std::optional<MonodromyMatrix> h;
  if (k.fibered()) h = monodromy(k.seifert());
  switch (cfg.output_format) {
    case OutputFormat::json: {
      nlohmann::json j{{"name", k.name()},
                       {"genus", k.genus()},
                       {"alexander", k.alex_sym().str()},
                       {"epsilon", k.epsilon()},
                       {"fibered", k.fibered()},
                       {"seifert", json_matrix(k.seifert().matrix())},
                       {"monodromy", h ? json_matrix(h->h) : nlohmann::json(nullptr)}};
      detail::print_json(out, j);
      break;
    }
    case OutputFormat::tsv:
      out << "name\tgenus\talexander\tepsilon\tfibered\tmonodromy\n"
          << k.name() << '\t' << k.genus() << '\t' << k.alex_sym().str() << '\t' << k.epsilon() << '\t'
          << (k.fibered() ? "yes" : "no") << '\t' << (h ? h->h.str() : "-") << '\n';
      break;
    case OutputFormat::table:
      out << "Δ = " << k.alex_sym().str() << ", ε = " << detail::signed_int(k.epsilon())
          << ", g = " << k.genus() << '\n'
          << "fibered: " << (k.fibered() ? "yes" : "no") << '\n';
      if (h) out << "monodromy: " << h->h.str() << '\n';
      break;
  }
  return kExitOk;
}

inline int cmd_lambda(const CliConfig& cfg, const Catalog& cat, const std::string& name,
                      const std::string& curve, std::ostream& out) {
  const KnotModel& k = cat.at(name);
  const CurveClass c = parse_curve(curve, k.seifert().dim());
  const FramingDifference d = framing_difference(k.seifert(), c);
  const Integer lambda = lambda_defect(k.seifert(), c);
  switch (cfg.output_format) {
    case OutputFormat::json:
      detail::print_json(out, {{"knot", k.name()},
                               {"curve", json_curve(c)},
                               {"primitive", c.primitive()},
                               {"lambda", json_int(lambda)},
                               {"abs_lambda", json_int(abs(lambda))},
                               {"framing_difference", {json_int(d.on_circle_factor), json_int(d.on_curve_factor)}},
                               {"lambda_torus", json_int(lambda_of_torus(d))}});
      break;
    case OutputFormat::tsv:
      out << "knot\tcurve\tprimitive\tlambda\tabs_lambda\tlambda_torus\n"
          << k.name() << '\t' << c.str() << '\t' << (c.primitive() ? "yes" : "no") << '\t' << lambda
          << '\t' << abs(lambda) << '\t' << lambda_of_torus(d) << '\n';
      break;
    case OutputFormat::table:
      out << "λ = " << lambda << ", |λ| = " << abs(lambda) << '\n'
          << "framing difference: (" << d.on_circle_factor << ", " << d.on_curve_factor << ")"
          << ", λ(T) = " << lambda_of_torus(d) << '\n'
          << "primitive: " << (c.primitive() ? "yes" : "no") << '\n';
      break;
  }
  return kExitOk;
}

inline int cmd_family(const CliConfig& cfg, const Catalog& cat, const std::string& name,
                      const std::string& e_text, const std::string& c_text, long long count,
                      std::ostream& out) {
  const KnotModel& k = cat.at(name);
  const CurveClass e = parse_curve(e_text, k.seifert().dim());
  const CurveClass c = parse_curve(c_text, k.seifert().dim());
  const auto rows = generate_family(k.seifert(), e, c, count);
  switch (cfg.output_format) {
    case OutputFormat::json: {
      nlohmann::json a = nlohmann::json::array();
      for (const auto& r : rows) {
        const Rational f = framing_conversion(r.lambda, 1);
        a.push_back({{"n", json_int(r.n)},
                     {"class", json_curve(r.curve)},
                     {"primitive", r.primitive},
                     {"lambda", json_int(r.lambda)},
                     {"abs_lambda", json_int(abs(r.lambda))},
                     {"framing", rational_str(f)}});
      }
      const FamilyCertificate cert = certify_family(rows);
      detail::print_json(out, {{"knot", k.name()},
                               {"e", json_curve(e)},
                               {"c", json_curve(c)},
                               {"rows", a},
                               {"primitive_rows", cert.primitive_rows},
                               {"certified", cert.certified}});
      break;
    }
    case OutputFormat::tsv:
      out << "n\tclass\tprimitive\tlambda\tabs_lambda\tframing\n";
      for (const auto& r : rows)
        out << r.n << '\t' << r.curve.str() << '\t' << (r.primitive ? "yes" : "no") << '\t' << r.lambda
            << '\t' << abs(r.lambda) << '\t' << rational_str(framing_conversion(r.lambda, 1)) << '\n';
      break;
    case OutputFormat::table: {
      out << std::left << std::setw(6) << "n" << std::setw(16) << "class" << std::setw(10) << "primitive"
          << std::setw(12) << "λ" << std::setw(10) << "|λ|" << "(pλ+1)/p, p=1" << '\n';
      for (const auto& r : rows)
        out << std::left << std::setw(6) << r.n.str() << std::setw(16) << ("(" + r.curve.str() + ")")
            << std::setw(10) << (r.primitive ? "yes" : "no") << std::setw(11) << r.lambda.str()
            << std::setw(9) << abs(r.lambda).str() << rational_str(framing_conversion(r.lambda, 1)) << '\n';
      break;
    }
  }
  return kExitOk;
}

inline int cmd_sw_knot_surgery(const CliConfig& cfg, const Catalog& cat, const std::string& base,
                               const std::string& knot, const std::string& fiber, std::ostream& out) {
  const SWState x = parse_base(base);
  const KnotModel& k = cat.at(knot);
  const SWState xk = knot_surgery_sw(x, k, fiber);
  const std::string sw = xk.polynomial().str();
  switch (cfg.output_format) {
    case OutputFormat::json:
      detail::print_json(out, {{"manifold", xk.name},
                               {"sw", sw},
                               {"parity", xk.parity},
                               {"conjugation_symmetric", conjugation_ok(xk)}});
      break;
    case OutputFormat::tsv:
      out << "manifold\tsw\tparity\n" << xk.name << '\t' << sw << '\t' << xk.parity << '\n';
      break;
    case OutputFormat::table: out << sw << '\n'; break;
  }
  return kExitOk;
}

inline int cmd_sw_torus(const CliConfig& cfg, const Catalog& cat, const std::string& base,
                        const std::string& knot, const std::string& curve, bool meridian,
                        std::ostream& out) {
  const SWState x = parse_base(base);
  const KnotModel& k = cat.at(knot);
  MarkedTorus t;
  std::string label;
  if (meridian) {
    t = build_meridian_torus(x, k);
    label = "T_mu";
  } else {
    const CurveClass c = parse_curve(curve, k.seifert().dim());
    t = build_marked_torus(x, k, c);
    label = "T_(" + c.str() + ")";
  }
  std::vector<std::string> span;
  for (const auto& row : invariant_set(t).canonical_form()) span.push_back(row.str());
  switch (cfg.output_format) {
    case OutputFormat::json:
      detail::print_json(out, {{"torus", label},
                               {"manifold", x.name + "_" + k.name()},
                               {"labels", t.labels},
                               {"generators", {t.gen_100.str(), t.gen_010.str(), t.gen_001.str()}},
                               {"invariant_set", span}});
      break;
    case OutputFormat::tsv:
      out << "torus\tgen_100\tgen_010\tgen_001\n"
          << label << '\t' << t.gen_100.str() << '\t' << t.gen_010.str() << '\t' << t.gen_001.str() << '\n';
      break;
    case OutputFormat::table: {
      out << "torus: " << label << " in " << x.name << "_" << k.name() << '\n'
          << "gen_100 = " << t.gen_100.str() << '\n'
          << "gen_010 = " << t.gen_010.str() << '\n'
          << "gen_001 = " << t.gen_001.str() << '\n'
          << "I(X,T) = span{";
      for (std::size_t i = 0; i < span.size(); ++i) out << (i ? ", " : "") << span[i];
      out << "}\n";
      break;
    }
  }
  return kExitOk;
}

inline int cmd_sw_recover(const CliConfig& cfg, const Catalog& cat, const std::string& base,
                          const std::string& knot, const std::string& curve, std::ostream& out) {
  const SWState x = parse_base(base);
  const KnotModel& k = cat.at(knot);
  const CurveClass c = parse_curve(curve, k.seifert().dim());
  const MarkedTorus t = build_marked_torus(x, k, c);
  const LambdaRecovery rec = recover_lambda_detailed(t, static_cast<std::int64_t>(k.genus()), k.epsilon());
  const Integer seifert = abs(lambda_defect(k.seifert(), c));
  const bool agree = seifert == rec.value;
  switch (cfg.output_format) {
    case OutputFormat::json: {
      nlohmann::json samples = nlohmann::json::array();
      for (const auto& s : rec.samples)
        samples.push_back({{"p", json_int(s.p)}, {"q", json_int(s.q)},
                           {"sigma", json_int(s.sigma)}, {"tau", json_int(s.tau)}});
      detail::print_json(out, {{"knot", k.name()},
                               {"curve", json_curve(c)},
                               {"seifert", json_int(seifert)},
                               {"sw", json_int(rec.value)},
                               {"agree", agree},
                               {"samples", samples}});
      break;
    }
    case OutputFormat::tsv:
      out << "knot\tcurve\tseifert\tsw\tagree\n"
          << k.name() << '\t' << c.str() << '\t' << seifert << '\t' << rec.value << '\t'
          << (agree ? "yes" : "no") << '\n';
      break;
    case OutputFormat::table:
      out << "seifert: " << seifert << ", sw: " << rec.value << ", agree: " << (agree ? "yes" : "no") << '\n';
      break;
  }
  return agree ? kExitOk : kExitVerifyFailed;
}

inline nlohmann::json scenario_json(const ScenarioReport& r) {
  nlohmann::json lambda = nlohmann::json::array();
  for (const auto& l : r.lambda) lambda.push_back(json_int(l));
  nlohmann::json curves = nlohmann::json::array();
  for (const auto& c : r.curves) curves.push_back(json_curve(c));
  return {{"scenario", r.scenario},
          {"knot", r.knot},
          {"curves", curves},
          {"generators", r.generators},
          {"invariant_sets", r.invariant_sets},
          {"lambda", lambda},
          {"sw_distinguishes", r.sw_distinguishes},
          {"lambda_distinguishes", r.lambda_distinguishes}};
}

inline int cmd_sw_selt(const CliConfig& cfg, std::ostream& out) {
  const ScenarioReport r = selt_scenario();
  switch (cfg.output_format) {
    case OutputFormat::json: detail::print_json(out, scenario_json(r)); break;
    case OutputFormat::tsv:
      out << "torus\tcurve\tgen_100\tgen_010\tgen_001\tlambda\n";
      for (std::size_t i = 0; i < r.curves.size(); ++i)
        out << i + 1 << '\t' << r.curves[i].str() << '\t' << r.generators[3 * i] << '\t'
            << r.generators[3 * i + 1] << '\t' << r.generators[3 * i + 2] << '\t' << r.lambda[i] << '\n';
      break;
    case OutputFormat::table:
      out << "scenario: " << r.scenario << " (Z_K, K = " << r.knot << ")\n";
      for (std::size_t i = 0; i < r.curves.size(); ++i) {
        out << "T_(" << r.curves[i].str() << "): |λ| = " << r.lambda[i] << ", generators ("
            << r.generators[3 * i] << ", " << r.generators[3 * i + 1] << ", " << r.generators[3 * i + 2]
            << "), I = span{";
        for (std::size_t j = 0; j < r.invariant_sets[i].size(); ++j)
          out << (j ? ", " : "") << r.invariant_sets[i][j];
        out << "}\n";
      }
      out << "sw_distinguishes: " << (r.sw_distinguishes ? "true" : "false")
          << ", lambda_distinguishes: " << (r.lambda_distinguishes ? "true" : "false") << '\n';
      break;
  }
  return kExitOk;
}

inline int cmd_verify(const CliConfig& cfg, const Catalog& cat, int twist_sign, std::ostream& out) {
  VerifyOptions opt;
  if (cfg.seed) opt.seed = *cfg.seed;
  opt.twist_sign = twist_sign;
  const auto results = run_verify(cat, opt);
  bool ok = true;
  for (const auto& r : results) ok = ok && r.ok();
  switch (cfg.output_format) {
    case OutputFormat::json: {
      nlohmann::json a = nlohmann::json::array();
      for (const auto& r : results)
        a.push_back({{"suite", r.name}, {"passed", r.passed}, {"total", r.total},
                     {"diagnostics", r.diagnostics}});
      detail::print_json(out, {{"seed", opt.seed}, {"twist_sign", twist_sign}, {"suites", a}, {"ok", ok}});
      break;
    }
    case OutputFormat::tsv:
      out << "suite\tpassed\ttotal\n";
      for (const auto& r : results) out << r.name << '\t' << r.passed << '\t' << r.total << '\n';
      break;
    case OutputFormat::table:
      for (const auto& r : results) {
        out << (r.ok() ? "[ ok ] " : "[FAIL] ") << r.name << ": " << r.passed << "/" << r.total << '\n';
        for (const auto& d : r.diagnostics) out << "       " << d << '\n';
      }
      out << (ok ? "verify: all suites passed" : "verify: FAILED") << '\n';
      break;
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

inline int cmd_catalog(const CliConfig& cfg, const Catalog& cat, std::ostream& out) {
  if (cfg.output_format == OutputFormat::json) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& k : cat.knots())
      a.push_back({{"name", k.name()}, {"genus", k.genus()}, {"seifert", json_matrix(k.seifert().matrix())}});
    detail::print_json(out, a);
    return kExitOk;
  }
  const char sep = cfg.output_format == OutputFormat::tsv ? '\t' : ' ';
  for (const auto& k : cat.knots())
    out << k.name() << sep << "g=" << k.genus() << sep << (k.fibered() ? "fibered" : "non-fibered") << sep
        << k.alex_sym().str() << '\n';
  return kExitOk;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of Lagrangian tori from Seifert forms and SW group-ring calculus",
               "lagrangia"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  bool json = false, tsv = false;
  std::uint64_t seed = 0;
  app.add_option("--catalog", cfg.catalog_path, "Knot catalog JSON (default: $LAGRANGIA_CATALOG)");
  auto* json_flag = app.add_flag("--json", json, "JSON output");
  app.add_flag("--tsv", tsv, "Tab-separated output")->excludes(json_flag);
  auto* seed_opt = app.add_option("--seed", seed, "Seed for randomized suites");

  std::string knot, curve, e_text, c_text, base = "unit", fiber = "F";
  long long count = 10;
  bool meridian = false;
  int twist_sign = kTwistSign;

  auto* knot_cmd = app.add_subcommand("knot", "Alexander polynomial, epsilon, genus and monodromy");
  knot_cmd->add_option("name", knot)->required();

  auto* lambda_cmd = app.add_subcommand("lambda", "Lagrangian framing defect of a loop");
  lambda_cmd->add_option("knot", knot)->required();
  lambda_cmd->add_option("--curve", curve, "Class a,b,... in H_1 of the fiber")->required();

  auto* family_cmd = app.add_subcommand("family", "Loops e + n c, n = 1..N, with their defects");
  family_cmd->add_option("knot", knot)->required();
  family_cmd->add_option("-e", e_text, "Seed class e")->required();
  family_cmd->add_option("-c", c_text, "Direction class c")->required();
  family_cmd->add_option("-N", count, "Number of rows")->check(CLI::NonNegativeNumber);

  auto* sw_cmd = app.add_subcommand("sw", "Seiberg-Witten group ring calculus");
  sw_cmd->require_subcommand(1);
  auto* ks_cmd = sw_cmd->add_subcommand("knot-surgery", "SW of X_K");
  ks_cmd->add_option("--base", base, "Base manifold: unit (E(2)) or eN");
  ks_cmd->add_option("--knot", knot)->required();
  ks_cmd->add_option("--fiber", fiber, "Tracked class to substitute");
  auto* torus_cmd = sw_cmd->add_subcommand("torus", "Generators and invariant set of a marked torus");
  torus_cmd->add_option("knot", knot)->required();
  torus_cmd->add_option("--base", base, "Base manifold: unit (E(2)) or eN");
  auto* torus_curve = torus_cmd->add_option("--curve", curve, "Class of gamma");
  torus_cmd->add_flag("--meridian", meridian, "Use the rim torus T_mu")->excludes(torus_curve);
  auto* rec_cmd = sw_cmd->add_subcommand("recover-lambda", "Recover |lambda| from the invariant set");
  rec_cmd->add_option("knot", knot)->required();
  rec_cmd->add_option("--curve", curve)->required();
  rec_cmd->add_option("--base", base, "Base manifold: unit (E(2)) or eN");
  auto* selt_cmd = sw_cmd->add_subcommand("selt", "Tori in Z_K with equal invariant sets and distinct lambda");

  auto* verify_cmd = app.add_subcommand("verify", "Run every invariant suite");
  verify_cmd->add_option("--twist-sign", twist_sign, "Transvection sign (diagnostics only)")
      ->check(CLI::IsMember({-1, 1}));

  auto* catalog_cmd = app.add_subcommand("catalog", "List catalog knots");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (json) cfg.output_format = OutputFormat::json;
  if (tsv) cfg.output_format = OutputFormat::tsv;
  if (*seed_opt) cfg.seed = seed;

  try {
    if (cfg.catalog_path.empty())
      if (const char* env = std::getenv("LAGRANGIA_CATALOG")) cfg.catalog_path = env;
    const Catalog cat = cfg.catalog_path.empty() ? Catalog::seeds() : Catalog::load(cfg.catalog_path);

    if (*knot_cmd) return cmd_knot(cfg, cat, knot, out);
    if (*lambda_cmd) return cmd_lambda(cfg, cat, knot, curve, out);
    if (*family_cmd) return cmd_family(cfg, cat, knot, e_text, c_text, count, out);
    if (*ks_cmd) return cmd_sw_knot_surgery(cfg, cat, base, knot, fiber, out);
    if (*torus_cmd) {
      if (!meridian && curve.empty()) throw error(errc::invalid_argument, "sw torus needs --curve or --meridian");
      return cmd_sw_torus(cfg, cat, base, knot, curve, meridian, out);
    }
    if (*rec_cmd) return cmd_sw_recover(cfg, cat, base, knot, curve, out);
    if (*selt_cmd) return cmd_sw_selt(cfg, out);
    if (*verify_cmd) return cmd_verify(cfg, cat, twist_sign, out);
    if (*catalog_cmd) return cmd_catalog(cfg, cat, out);
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace lagrangia::cli
