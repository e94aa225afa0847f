#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <thread>

using namespace awlab;
using namespace awlab::cli;

namespace {

// String-valued flags so validation and messages come from one place (to_run_config).
struct Flags {
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> opts;
  std::string config;
  bool corrupt = false;
  CLI::Option* corrupt_opt = nullptr;

  void attach(CLI::App* app) {
    static const std::vector<std::pair<std::string, std::string>> spec{
        {"q", "deformation parameter, 0 < q < 1"},
        {"N", "dimension parameter of the single-factor suites"},
        {"N1", "first rank-2 / tensor dimension"},
        {"N2", "second rank-2 / tensor dimension"},
        {"alpha0", "alpha0 (all three alphas or none)"},
        {"alpha1", "alpha1"},
        {"alpha2", "alpha2"},
        {"tol", "override every hard-check tolerance"},
        {"precision", "double or extended"},
        {"out", "output path"}};
    for (const auto& [k, help] : spec) opts[k] = app->add_option("--" + k, values[k], help);
    app->add_option("--config", config, "line-based key = value file; flags win");
    corrupt_opt = app->add_flag("--corrupt", corrupt, "debug: perturb one coefficient in each construction");
  }

  KeyValues collect() const {
    KeyValues kv;
    if (!config.empty()) kv = load_config_file(config);
    for (const auto& [k, o] : opts)
      if (o->count()) kv[k] = values.at(k);
    if (corrupt_opt->count()) kv["corrupt"] = "true";
    return kv;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"awlab: numerical verification of Askey-Wilson algebra identities"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run a verification suite and write a JSON report");
  std::string suite;
  verify->add_option("suite", suite, "aw3, uq, rank2 or all")->required();
  Flags vf;
  vf.attach(verify);

  auto* tables = app.add_subcommand("tables", "write CSV and JSON tables");
  std::string kind;
  tables->add_option("kind", kind, "qracah, bivariate, weights or stencil")->required();
  Flags tf;
  tf.attach(tables);

  auto* sweep = app.add_subcommand("sweep", "run a suite over a Cartesian parameter grid");
  std::string grid;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  sweep->add_option("--grid", grid, "grid file: key = v1, v2, ... per line")->required();
  sweep->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u));
  Flags sf;
  sf.attach(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigError;
  }

  try {
    if (verify->parsed()) {
      const Suite s = parse_suite(suite);
      KeyValues kv = vf.collect();
      apply_environment(kv);
      kv.erase("suite");
      return cmd_verify(s, to_run_config(kv), std::cout, std::cerr);
    }
    if (tables->parsed()) {
      const TableKind k = parse_table_kind(kind);
      KeyValues kv = tf.collect();
      apply_environment(kv);
      return cmd_tables(k, to_run_config(kv), std::cout, std::cerr);
    }
    KeyValues base = sf.collect();
    const std::string out = base.count("out") ? base.at("out") : "";
    return cmd_sweep(base, load_grid_file(grid), out, jobs, std::cout, std::cerr);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailure;
  }
}
