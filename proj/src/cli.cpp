#include "hecke/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "hecke/acceptance.hpp"
#include "hecke/errors.hpp"
#include "hecke/json_io.hpp"

namespace hecke {

namespace {

struct RunConfig {
  int d = 1;
  int q = 3;
  int r = 1;
  std::int64_t precision = kDefaultPrecision;
  std::uint64_t seed = 0;
  std::string in;
  std::string out;
  bool pretty = false;
};

struct Outcome {
  int exit_code = kExitOk;
  Json payload;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

void validate_config(const RunConfig& cfg) {
  if (cfg.d < 1) throw UsageError("--d must be at least 1");
  if (cfg.r < 1) throw UsageError("--r must be at least 1");
  if (cfg.precision < 4) throw UsageError("--precision must be at least 4");
  if (cfg.q < 2 || cfg.q > FqField::kMaxQ || prime_power(cfg.q).first == 0)
    throw UsageError("--q must be a prime power at most " + std::to_string(FqField::kMaxQ));
}

Json read_input(const RunConfig& cfg, std::istream& input) {
  std::string text;
  if (!cfg.in.empty()) {
    std::ifstream file(cfg.in);
    if (!file) throw UsageError("cannot open input file " + cfg.in);
    std::ostringstream buf;
    buf << file.rdbuf();
    text = buf.str();
  } else {
    std::ostringstream buf;
    buf << input.rdbuf();
    text = buf.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("input is not valid JSON: ") + e.what());
  }
}

/// Applies f to an object, or to each element of an array; the exit code is
/// the worst one.
Outcome map_input(const Json& in, const std::function<Outcome(const Json&)>& f) {
  if (!in.is_array()) return f(in);
  Outcome all{kExitOk, Json::array()};
  for (const auto& item : in) {
    auto one = f(item);
    all.exit_code = std::max(all.exit_code, one.exit_code);
    all.payload.push_back(std::move(one.payload));
  }
  return all;
}

CharacterData lattice_character(const Json& j, const RunConfig& cfg) {
  if (j.contains("character")) return character_from_json(j.at("character"));
  const auto w = weight_from_json(j);
  return character_from_weight(w.n, cfg.q, w.r);
}

Outcome weights_check(const Json& j) {
  const auto w = weight_from_json(j);
  const auto check = is_balanced(w.n, w.r);
  return {check.balanced ? kExitOk : kExitFalse, balance_check_to_json(check)};
}

Outcome weights_reduce(const Json& j) {
  const auto w = weight_from_json(j);
  const auto check = is_balanced(w.n, w.r);
  if (!check.balanced) return {kExitFalse, balance_check_to_json(check)};
  const auto m = reduce_weight(w.n, w.r);
  return {kExitOk, Json{{"d", static_cast<int>(m.size()) - 1}, {"r", w.r}, {"n", m}}};
}

Outcome nabla_build(const Json& j, const RunConfig& cfg) {
  const auto w = weight_from_json(j);
  const auto check = is_balanced(w.n, w.r);
  if (!check.balanced) return {kExitFalse, balance_check_to_json(check)};
  auto out = nabla_to_json(build_nabla(w.n, w.r));
  out["r"] = w.r;
  out["n"] = w.n;
  out["character"] = character_to_json(character_from_weight(w.n, cfg.q, w.r));
  return {kExitOk, out};
}

Outcome nabla_check(const Json& j) {
  const auto nabla = nabla_from_json(j);
  Json out = Json::object();
  bool ok = true;
  if (j.contains("n")) {
    const auto w = weight_from_json(j);
    const auto c = check_integration(nabla, w.n, w.r);
    ok = ok && c.ok;
    out["integration"] = nabla_check_to_json(c);
  }
  if (j.contains("character")) {
    const auto ch = character_from_json(j.at("character"));
    const auto full = check_equinab(nabla, ch, EquinabMode::Full);
    const auto sd = check_equinab(nabla, ch, EquinabMode::SdOnly);
    ok = ok && full.ok && sd.ok;
    out["equinab_full"] = nabla_check_to_json(full);
    out["equinab_sd_only"] = nabla_check_to_json(sd);
  }
  if (out.empty()) throw ParseError("nabla check needs \"n\" and \"r\", or \"character\"");
  out["ok"] = ok;
  return {ok ? kExitOk : kExitFalse, out};
}

Outcome lattice_check(const Json& j, const RunConfig& cfg) {
  const auto nabla = nabla_from_json(j);
  const auto c = lattice_character(j, cfg);
  const auto check = is_lattice_stable(c, nabla);
  auto out = stability_to_json(check);
  if (check.stable) {
    Json gens = Json::array();
    for (int k = 0; k <= c.d; ++k) gens.push_back(Generator::t_basis(c.d, k).name());
    gens.push_back(Generator::u_inv().name());
    gens.push_back(Generator::u().name());
    gens.push_back(Generator::s(c.d).name());
    out["certificate"] = {{"integral_generators", gens},
                          {"character", character_to_json(c)},
                          {"nabla", nabla_to_json(nabla)},
                          {"sigma", sigma_to_json(sigma_from_nabla(nabla, c.r))}};
  }
  return {check.stable ? kExitOk : kExitFalse, out};
}

Outcome criterion_check(const Json& j) {
  const auto c = character_from_json(j);
  const auto check = unitarity_criterion(c);
  const auto n = weight_of_character(c);
  auto out = balance_check_to_json(check);
  out["unitary"] = check.balanced;
  out.erase("balanced");
  out["weight"] = weight_to_json(n, c.r);
  out["weight_balanced"] = is_balanced(n, c.r).balanced;
  return {check.balanced ? kExitOk : kExitFalse, out};
}

Outcome criterion_dual(const Json& j) {
  const auto c = character_from_json(j);
  const auto dual = dual_character(c);
  return {kExitOk, Json{{"character", character_to_json(c)},
                        {"dual", character_to_json(dual)},
                        {"unitary", unitarity_criterion(c).balanced},
                        {"dual_unitary", unitarity_criterion(dual).balanced}}};
}

Outcome module_reduce(const Json& j, const RunConfig& cfg) {
  const auto nabla = nabla_from_json(j);
  const auto c = lattice_character(j, cfg);
  const auto check = is_lattice_stable(c, nabla);
  if (!check.stable) return {kExitFalse, stability_to_json(check)};
  return {kExitOk, wtype_to_json(reduce_lattice(c, nabla))};
}

Outcome module_validate(const Json& j) {
  const auto report = validate_action(wtype_from_json(j));
  return {report.all_passed() ? kExitOk : kExitFalse, relation_report_to_json(report)};
}

SigmaFunction sigma_of(const Json& j) { return sigma_from_json(j.contains("sigma") ? j.at("sigma") : j); }

Outcome partial_search(const Json& j, const RunConfig& cfg) {
  const auto sigma = sigma_of(j);
  const int r = j.contains("r") ? j.at("r").get<int>() : cfg.r;
  const auto partial = search_partial(sigma, r);
  if (!partial) return {kExitFalse, Json{{"found", false}, {"sigma", sigma_to_json(sigma)}}};
  return {kExitOk, Json{{"found", true}, {"partial", partial_to_json(*partial)}}};
}

Outcome realize(const Json& j, const RunConfig& cfg) {
  const auto module = wtype_from_json(j);
  const int r = j.contains("r") ? j.at("r").get<int>() : cfg.r;
  std::optional<PartialFunction> partial;
  if (j.contains("partial"))
    partial = partial_from_json(j.at("partial"));
  else
    partial = search_partial(module.sigma(), r);
  if (!partial) return {kExitFalse, Json{{"realized", false}, {"reason", "no partial function exists"}}};
  try {
    const auto real = silvester_realize(module.theta_exp(), module.sigma(), module.eps(), *partial, module.q());
    return {real.round_trip ? kExitOk : kExitFalse, Json{{"realized", real.round_trip},
                                                         {"character", character_to_json(real.character)},
                                                         {"nabla", nabla_to_json(real.nabla)},
                                                         {"partial", partial_to_json(*partial)},
                                                         {"round_trip", real.round_trip}}};
  } catch (const PreconditionError& e) {
    return {kExitFalse, Json{{"realized", false}, {"reason", e.what()}}};
  }
}

Outcome oracle_compare(const Json& j, const RunConfig& cfg) {
  const auto c = character_from_json(j);
  if (c.d > 2 || c.q > 5) throw UsageError("oracle compare supports d <= 2 and q <= 5");
  const auto report = compare_closed_form(c, cfg.precision);
  auto out = oracle_report_to_json(report);
  const auto rt = round_trip_check(c.d, c.q, 100, cfg.seed, cfg.precision);
  out["round_trip"] = {{"samples", rt.samples}, {"failures", rt.failures}, {"retried", rt.retried}, {"seed", cfg.seed}};
  return {report.ok() && rt.ok() ? kExitOk : kExitFalse, out};
}

Outcome suite(std::string& pretty_text) {
  Json criteria = Json::array();
  bool all = true;
  for (const auto& r : run_acceptance()) {
    all = all && r.passed();
    pretty_text += format_result(r) + "\n";
    criteria.push_back({{"id", r.id},
                        {"name", r.name},
                        {"holds", r.holds},
                        {"within_limit", r.seconds < r.limit_seconds},
                        {"limit_seconds", r.limit_seconds},
                        {"detail", r.detail},
                        {"passed", r.passed()}});
  }
  return {all ? kExitOk : kExitFalse, Json{{"all_passed", all}, {"criteria", criteria}}};
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args, std::istream& input) {
  RunConfig cfg;
  CLI::App app{"Hecke modules of principal series: lattices, reductions and checks", "hecke"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--d", cfg.d, "rank parameter d (matrices of size d+1)");
  app.add_option("--q", cfg.q, "residue field size");
  app.add_option("--r", cfg.r, "ramification amplitude r");
  app.add_option("--precision", cfg.precision, "Laurent precision for the oracle");
  app.add_option("--seed", cfg.seed, "seed for sampled checks");
  app.add_option("--in", cfg.in, "input JSON file (default: standard input)");
  app.add_option("--out", cfg.out, "write output to this file");
  app.add_flag("--pretty", cfg.pretty, "indented, human-oriented output");

  std::function<Outcome(const Json&)> action;
  bool needs_input = true;
  std::string pretty_text;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, auto body) {
    parent->add_subcommand(name, help)->callback([&, body] { action = body; });
  };
  auto* weights = app.add_subcommand("weights", "balanced weights");
  weights->require_subcommand(1);
  leaf(weights, "check", "test a weight for balancedness", [](const Json& j) { return weights_check(j); });
  leaf(weights, "reduce", "reduce a balanced weight to dimension d-1", [](const Json& j) { return map_input(j, weights_reduce); });
  weights->add_subcommand("enumerate", "all balanced weights for --d and --r")->callback([&] {
    needs_input = false;
    action = [&](const Json&) {
      Json out = Json::array();
      for (const auto& n : enumerate_balanced(cfg.d, cfg.r)) out.push_back(weight_to_json(n, cfg.r));
      return Outcome{kExitOk, out};
    };
  });

  auto* nabla = app.add_subcommand("nabla", "integrating functions");
  nabla->require_subcommand(1);
  leaf(nabla, "build", "build nabla for balanced weights", [&](const Json& j) {
    return map_input(j, [&](const Json& x) { return nabla_build(x, cfg); });
  });
  leaf(nabla, "check", "check integration and lattice conditions", [](const Json& j) { return map_input(j, nabla_check); });

  auto* lattice = app.add_subcommand("lattice", "lattices L_nabla");
  lattice->require_subcommand(1);
  leaf(lattice, "check", "stability of L_nabla under the Hecke algebra", [&](const Json& j) {
    return map_input(j, [&](const Json& x) { return lattice_check(x, cfg); });
  });

  auto* criterion = app.add_subcommand("criterion", "unitarity criterion");
  criterion->require_subcommand(1);
  leaf(criterion, "check", "evaluate the criterion on a character", [](const Json& j) { return map_input(j, criterion_check); });
  leaf(criterion, "dual", "dual character and its criterion", [](const Json& j) { return map_input(j, criterion_dual); });

  auto* module = app.add_subcommand("module", "mod-p W-type modules");
  module->require_subcommand(1);
  leaf(module, "reduce", "reduce a stable lattice mod pi", [&](const Json& j) {
    return map_input(j, [&](const Json& x) { return module_reduce(x, cfg); });
  });
  leaf(module, "make", "build M(theta, sigma, eps)", [](const Json& j) {
    return map_input(j, [](const Json& x) { return Outcome{kExitOk, wtype_to_json(wtype_from_json(x))}; });
  });
  leaf(module, "validate", "check necessary relations of a module", [](const Json& j) { return map_input(j, module_validate); });

  leaf(&app, "realize", "realize M(theta, sigma, eps) as a reduction", [&](const Json& j) { return realize(j, cfg); });

  auto* partial = app.add_subcommand("partial", "partial functions");
  partial->require_subcommand(1);
  leaf(partial, "search", "find a partial function compatible with sigma", [&](const Json& j) { return partial_search(j, cfg); });

  auto* oracle = app.add_subcommand("oracle", "brute-force verification");
  oracle->require_subcommand(1);
  leaf(oracle, "compare", "compare closed forms with coset sums", [&](const Json& j) { return oracle_compare(j, cfg); });

  app.add_subcommand("suite", "run the acceptance battery")->callback([&] {
    needs_input = false;
    action = [&](const Json&) { return suite(pretty_text); };
  });

  Outcome outcome;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    validate_config(cfg);
    const Json in = needs_input ? read_input(cfg, input) : Json();
    outcome = action(in);
  } catch (const CLI::CallForHelp&) {
    return {kExitOk, app.help()};
  } catch (const CLI::ParseError& e) {
    outcome = {kExitUsage, Json{{"error", e.what()}, {"kind", "usage"}}};
  } catch (const UsageError& e) {
    outcome = {kExitUsage, Json{{"error", e.what()}, {"kind", "usage"}}};
  } catch (const Error& e) {
    outcome = {kExitUsage, Json{{"error", e.what()}, {"kind", "input"}}};
  } catch (const Json::exception& e) {
    outcome = {kExitUsage, Json{{"error", e.what()}, {"kind", "input"}}};
  }

  std::string text = cfg.pretty ? (pretty_text.empty() ? outcome.payload.dump(2) + "\n" : pretty_text)
                                : outcome.payload.dump() + "\n";
  if (!cfg.out.empty() && outcome.exit_code != kExitUsage) {
    std::ofstream file(cfg.out);
    if (!file) return {kExitUsage, Json{{"error", "cannot open output file " + cfg.out}, {"kind", "usage"}}.dump() + "\n"};
    file << text;
    return {outcome.exit_code, ""};
  }
  return {outcome.exit_code, text};
}

}  // namespace hecke
