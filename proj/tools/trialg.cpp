#include "trialg/scenario.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

struct Output {
  std::string format = "json";
  std::string out;
  bool timings = false;
};

int emit(const trialg::RunResult& res, const Output& o) {
  std::string text;
  if (o.format == "text") {
    text = trialg::report_to_text(res.report);
    if (o.timings) text += "timings: " + res.timings.dump() + "\n";
  } else {
    trialg::json report = res.report;
    if (o.timings) report["timings"] = res.timings;
    text = report.dump(2) + "\n";
  }
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out);
    if (!f) {
      std::cerr << "error: cannot write " << o.out << "\n";
      return 2;
    }
    f << text;
  }
  return res.pass ? 0 : 1;
}

void apply_overrides(trialg::Scenario& s, const std::optional<std::uint64_t>& seed,
                     const std::optional<std::uint64_t>& max_enum) {
  if (seed) s.options.seed = *seed;
  if (max_enum) s.options.max_enum = *max_enum;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Jordan maps on triangular algebras"};
  app.require_subcommand(1);
  Output out;
  std::optional<std::uint64_t> seed, max_enum;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", out.format, "report format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", out.out, "write the report to this file");
    sub->add_option("--seed", seed, "override the scenario seed");
    sub->add_option("--max-enum", max_enum, "override the enumeration bound");
    sub->add_flag("--timings", out.timings, "append wall-clock timings to the report");
  };

  std::string file;
  auto* verify = app.add_subcommand("verify", "run a scenario file");
  verify->add_option("scenario", file, "scenario JSON file")->required();
  common(verify);

  std::string name;
  auto* run = app.add_subcommand("run", "run a built-in scenario");
  run->add_option("name", name, "built-in scenario name")->required();
  common(run);

  auto* list = app.add_subcommand("list", "list built-in scenarios");
  auto* schema = app.add_subcommand("schema", "print the scenario JSON schema");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*list) {
    for (const auto& b : trialg::builtins()) {
      std::cout << b.name << "\t" << b.description << "\n";
    }
    return 0;
  }
  if (*schema) {
    std::cout << trialg::scenario_schema().dump(2) << "\n";
    return 0;
  }

  try {
    trialg::Scenario s;
    if (*verify) {
      std::ifstream f(file);
      if (!f) {
        std::cerr << "error: cannot read " << file << "\n";
        return 2;
      }
      trialg::json j;
      try {
        j = trialg::json::parse(f);
      } catch (const trialg::json::parse_error& e) {
        std::cerr << "error: " << file << " is not valid JSON: " << e.what() << "\n";
        return 2;
      }
      s = trialg::parse_scenario(j);
    } else {
      const trialg::Builtin* b = trialg::find_builtin(name);
      if (b == nullptr) {
        std::cerr << "error: unknown built-in scenario \"" << name << "\" (see `trialg list`)\n";
        return 2;
      }
      s = trialg::parse_scenario(b->scenario);
    }
    apply_overrides(s, seed, max_enum);
    return emit(trialg::run_scenario(s), out);
  } catch (const trialg::SchemaError& e) {
    std::cerr << "schema error at " << e.what() << "\n";
    return 2;
  }
}
