#include "mcgame/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mcgame/choquet.hpp"
#include "mcgame/error.hpp"
#include "mcgame/game_io.hpp"
#include "mcgame/indices.hpp"
#include "mcgame/report.hpp"
#include "mcgame/verify.hpp"

namespace mcgame::cli {

namespace {

using ojson = nlohmann::ordered_json;

// Malformed flags, as opposed to well-formed requests the data rejects.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string format_double(double x, int digits) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  return parts;
}

// "1,2,3" (1-based) to a coalition over n attributes.
Coalition parse_set(const std::string& text, int n) {
  std::vector<int> members;
  for (const auto& part : split(text, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(part, &used);
    } catch (const std::exception&) {
      throw UsageError("malformed attribute list \"" + text + "\"");
    }
    if (used != part.size()) throw UsageError("malformed attribute list \"" + text + "\"");
    if (value < 1 || value > n) {
      throw GameError("coalition index " + std::to_string(value) + " out of range [1, " +
                      std::to_string(n) + "]");
    }
    members.push_back(value - 1);
  }
  if (members.empty()) throw UsageError("empty attribute list");
  return Coalition::from_members(members);
}

std::vector<double> parse_point(const std::string& text) {
  std::vector<double> z;
  for (const auto& part : split(text, ',')) {
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(part, &used);
    } catch (const std::exception&) {
      throw UsageError("malformed point \"" + text + "\"");
    }
    if (used != part.size()) throw UsageError("malformed point \"" + text + "\"");
    z.push_back(value);
  }
  return z;
}

std::string key_of(Coalition T) {
  std::string key;
  for (int i : T.members()) key += (key.empty() ? "" : ",") + std::to_string(i + 1);
  return key;
}

Limits limits_of(const RunConfig& cfg) {
  Limits limits;
  if (cfg.size_limit_override) {
    limits.table_bits = *cfg.size_limit_override;
    limits.query_bits = *cfg.size_limit_override;
  }
  return limits;
}

LoadedGame load(const RunConfig& cfg) {
  return load_game(cfg.input_path, LoadOptions{cfg.normalize, limits_of(cfg)});
}

struct Outcome {
  std::string text;
  int code = kExitOk;
};

Outcome cmd_info(const RunConfig& cfg) {
  const auto loaded = load(cfg);
  const auto& v = loaded.game;
  const bool capacity = is_kary_capacity(v, cfg.tolerance);
  if (cfg.format == "csv") {
    std::string k_text;
    for (int ki : loaded.k_list) k_text += (k_text.empty() ? "" : "+") + std::to_string(ki);
    return {"field,value\nn," + std::to_string(v.n()) + "\nk," + std::to_string(v.k()) +
            "\nk_list," + k_text + "\ntable_size," + std::to_string(v.size()) + "\nv_zero," +
            format_double(loaded.raw_zero, 17) + "\nv_top," + format_double(v.top(), 17) +
            "\nkary_capacity," + (capacity ? "true" : "false") + "\n"};
  }
  ojson doc;
  doc["n"] = v.n();
  doc["k"] = v.k();
  if (loaded.heterogeneous) doc["k_list"] = loaded.k_list;
  doc["table_size"] = v.size();
  doc["v_zero"] = loaded.raw_zero;
  doc["v_top"] = v.top();
  doc["kary_capacity"] = capacity;
  return {doc.dump(2) + "\n"};
}

Outcome cmd_importance(const RunConfig& cfg) {
  const auto loaded = load(cfg);
  const auto& v = loaded.game;
  const Limits limits = limits_of(cfg);
  std::vector<double> phi(v.n());
  double total = 0.0;
  for (int i = 0; i < v.n(); ++i) {
    phi[i] = importance(v, i, limits);
    total += phi[i];
  }
  const double rhs = efficiency_rhs(v);
  const double gap = std::abs(total - rhs);
  if (cfg.format == "csv") {
    std::string text = "attribute,importance\n";
    for (int i = 0; i < v.n(); ++i) text += std::to_string(i + 1) + "," + format_double(phi[i], 17) + "\n";
    text += "efficiency_rhs," + format_double(rhs, 17) + "\nefficiency_gap," + format_double(gap, 17) + "\n";
    return {text};
  }
  ojson doc;
  doc["importance"] = phi;
  doc["efficiency_rhs"] = rhs;
  doc["efficiency_gap"] = gap;
  return {doc.dump(2) + "\n"};
}

Outcome cmd_interaction(const RunConfig& cfg) {
  const auto method = parse_method(cfg.method);
  if (!method) throw UsageError("unknown method \"" + cfg.method + "\"");
  if (cfg.set.empty() == !cfg.max_order) throw UsageError("give exactly one of --order and --set");
  const auto loaded = load(cfg);
  const auto& v = loaded.game;
  const Limits limits = limits_of(cfg);

  std::vector<std::pair<Coalition, double>> rows;
  if (cfg.max_order) {
    if (*cfg.max_order < 1 || *cfg.max_order > v.n()) {
      throw GameError("order must lie in [1, " + std::to_string(v.n()) + "]");
    }
    rows = interaction_all_upto(v, *cfg.max_order, *method, limits, cfg.input_path).interactions;
  } else {
    const Coalition T = parse_set(cfg.set, v.n());
    rows.emplace_back(T, interaction_by(v, T, *method, limits));
  }

  if (cfg.format == "csv") {
    std::string text = "coalition,value\n";
    for (const auto& [T, value] : rows) text += T.label() + "," + format_double(value, 17) + "\n";
    return {text};
  }
  ojson doc;
  doc["method"] = std::string(method_name(*method));
  ojson map = ojson::object();
  for (const auto& [T, value] : rows) map[key_of(T)] = value;
  doc["interactions"] = map;
  return {doc.dump(2) + "\n"};
}

Outcome cmd_choquet(const RunConfig& cfg) {
  const auto loaded = load(cfg);
  const auto z = parse_point(cfg.point);
  return {format_double(choquet_kary(loaded.game, z), 12) + "\n"};
}

ojson report_json(const VerificationReport& r) {
  auto check_json = [](const AxiomCheck& c) {
    ojson j;
    j["seed"] = c.seed;
    j["subject"] = c.subject;
    j["lhs"] = c.lhs;
    j["rhs"] = c.rhs;
    j["gap"] = c.gap;
    return j;
  };
  ojson doc;
  doc["axiom"] = r.axiom;
  doc["trials"] = r.trials;
  doc["checks"] = r.checks;
  doc["tolerance"] = r.tolerance;
  doc["max_gap"] = r.max_gap;
  doc["passed"] = r.passed;
  if (r.worst) doc["worst"] = check_json(*r.worst);
  ojson failures = ojson::array();
  for (const auto& c : r.failures) failures.push_back(check_json(c));
  doc["failures"] = failures;
  if (!r.note.empty()) doc["note"] = r.note;
  return doc;
}

Outcome cmd_verify(const RunConfig& cfg) {
  std::vector<Axiom> axioms;
  if (cfg.axioms == "all") {
    axioms = all_axioms();
  } else {
    for (const auto& name : split(cfg.axioms, ',')) {
      const auto a = parse_axiom(name);
      if (!a) throw UsageError("unknown axiom \"" + name + "\"");
      axioms.push_back(*a);
    }
  }
  std::optional<LoadedGame> loaded;
  if (!cfg.input_path.empty()) loaded = load(cfg);
  const Limits limits = limits_of(cfg);

  std::vector<VerificationReport> reports;
  bool passed = true;
  for (Axiom a : axioms) {
    reports.push_back(verify_axiom(a, cfg.trials, cfg.seed, cfg.n, cfg.k, cfg.tolerance,
                                   loaded ? &loaded->game : nullptr, limits));
    passed = passed && reports.back().passed;
  }
  const int code = passed ? kExitOk : kExitFailure;
  if (cfg.format == "csv") {
    std::string text = "axiom,trials,checks,max_gap,passed\n";
    for (const auto& r : reports) {
      text += r.axiom + "," + std::to_string(r.trials) + "," + std::to_string(r.checks) + "," +
              format_double(r.max_gap, 17) + "," + (r.passed ? "true" : "false") + "\n";
    }
    return {text, code};
  }
  ojson doc;
  ojson list = ojson::array();
  for (const auto& r : reports) list.push_back(report_json(r));
  doc["reports"] = list;
  doc["passed"] = passed;
  return {doc.dump(2) + "\n", code};
}

Outcome cmd_integral_check(const RunConfig& cfg) {
  if (cfg.samples < 1) throw UsageError("--samples must be at least 1");
  if (cfg.set.empty()) throw UsageError("--set is required");
  const auto loaded = load(cfg);
  const auto& v = loaded.game;
  const Limits limits = limits_of(cfg);
  const Coalition T = parse_set(cfg.set, v.n());
  const auto mc = integral_check(v, T, cfg.samples, cfg.seed, limits);
  const double closed = interaction(v, T, limits);
  const double gap = mc.estimate - closed;
  std::optional<double> z;
  if (mc.std_error > 0.0) {
    z = gap / mc.std_error;
  } else if (std::abs(gap) <= cfg.tolerance) {
    z = 0.0;
  }
  const int code = (z && std::abs(*z) <= 3.0) ? kExitOk : kExitFailure;
  if (cfg.format == "csv") {
    return {"estimate,std_error,closed_form,z_score\n" + format_double(mc.estimate, 17) + "," +
                format_double(mc.std_error, 17) + "," + format_double(closed, 17) + "," +
                (z ? format_double(*z, 17) : std::string("inf")) + "\n",
            code};
  }
  ojson doc;
  doc["estimate"] = mc.estimate;
  doc["std_error"] = mc.std_error;
  doc["closed_form"] = closed;
  doc["z_score"] = z ? ojson(*z) : ojson(nullptr);
  return {doc.dump(2) + "\n", code};
}

Outcome cmd_convert(const RunConfig& cfg) {
  const auto loaded = load(cfg);
  if (cfg.format == "csv") return {game_to_csv(loaded.game)};
  return {serialize_game(loaded.game)};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Importance and interaction indices for multichoice games"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", cfg.output_path, "Write the report to this file");
  app.add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--normalize", cfg.normalize, "Subtract v(0) from every entry on load");
  app.add_option("--tol", cfg.tolerance, "Absolute tolerance");
  app.add_option("--limit", cfg.size_limit_override, "Size guard, as log2 of the entry budget")
      ->check(CLI::Range(1, 62));

  auto* info = app.add_subcommand("info", "Summarize a game file");
  info->add_option("path", cfg.input_path)->required();

  auto* imp = app.add_subcommand("importance", "Importance index of every attribute");
  imp->add_option("path", cfg.input_path)->required();

  auto* inter = app.add_subcommand("interaction", "Interaction indices");
  inter->add_option("path", cfg.input_path)->required();
  auto* order_opt = inter->add_option("--order", cfg.max_order, "All coalitions up to this size");
  auto* set_opt = inter->add_option("--set", cfg.set, "One coalition, e.g. 1,2");
  order_opt->excludes(set_opt);
  inter->add_option("--method", cfg.method, "closed_form, derivative_sum, recursive or cellsum");

  auto* cho = app.add_subcommand("choquet", "Choquet integral at a point");
  cho->add_option("path", cfg.input_path)->required();
  cho->add_option("--point", cfg.point, "z1,...,zn")->required();

  auto* ver = app.add_subcommand("verify", "Run the axiom suite");
  ver->add_option("path", cfg.input_path, "Optional game used in every trial");
  ver->add_option("--axioms", cfg.axioms, "all or a list such as L,N,E");
  ver->add_option("--trials", cfg.trials)->check(CLI::PositiveNumber);
  ver->add_option("--seed", cfg.seed);
  ver->add_option("--n", cfg.n)->check(CLI::Range(1, 32));
  ver->add_option("--k", cfg.k)->check(CLI::Range(1, 1 << 20));

  auto* integ = app.add_subcommand("integral-check", "Monte-Carlo check of the integral form");
  integ->add_option("path", cfg.input_path)->required();
  integ->add_option("--set", cfg.set, "Coalition, e.g. 1,2")->required();
  integ->add_option("--samples", cfg.samples);
  integ->add_option("--seed", cfg.seed);

  auto* conv = app.add_subcommand("convert", "Rewrite a game in canonical form");
  conv->add_option("path", cfg.input_path)->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  Outcome outcome;
  try {
    if (cfg.command == "info") outcome = cmd_info(cfg);
    else if (cfg.command == "importance") outcome = cmd_importance(cfg);
    else if (cfg.command == "interaction") outcome = cmd_interaction(cfg);
    else if (cfg.command == "choquet") outcome = cmd_choquet(cfg);
    else if (cfg.command == "verify") outcome = cmd_verify(cfg);
    else if (cfg.command == "integral-check") outcome = cmd_integral_check(cfg);
    else outcome = cmd_convert(cfg);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GameError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }

  if (cfg.output_path.empty()) {
    out << outcome.text;
  } else {
    std::ofstream file(cfg.output_path, std::ios::binary);
    if (!file || !(file << outcome.text)) {
      err << "error: cannot write " << cfg.output_path << "\n";
      return kExitFailure;
    }
  }
  return outcome.code;
}

}  // namespace mcgame::cli
