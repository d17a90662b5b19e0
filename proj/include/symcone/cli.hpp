#pragma once

// `verify` command line:
//   verify run --config cfg.json [--suite NAME]... [--seed N]
//   verify table --check ID --sizes 8,16,32 [--output FILE]
// Exit codes: 0 pass, 1 check failure, 2 usage/config error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "symcone/verify.hpp"

namespace symcone::verify {

inline int cli_main(std::vector<std::string> args) {
  CLI::App app{"numerical verification suites for symmetric-cone intertwining calculators"};
  app.require_subcommand(1);

  auto* run_cmd = app.add_subcommand("run", "run verification suites");
  std::string config_path;
  std::vector<std::string> suite_filter;
  std::uint64_t seed_override = 0;
  bool seed_set = false;
  run_cmd->add_option("--config", config_path, "JSON config file")->required();
  run_cmd->add_option("--suite", suite_filter,
                      "restrict to these suites (repeatable)");
  run_cmd->add_option("--seed", seed_override, "override the config seed")
      ->each([&seed_set](const std::string&) { seed_set = true; });

  auto* table_cmd = app.add_subcommand("table", "emit a convergence table");
  std::string check_id, sizes_csv, table_output;
  table_cmd->add_option("--check", check_id, "check id")->required();
  table_cmd->add_option("--sizes", sizes_csv, "comma-separated sizes")
      ->required();
  table_cmd->add_option("--output", table_output, "CSV output path");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      std::cout << app.help() << std::endl;
      return 0;
    }
    std::cerr << "usage error: " << e.what() << std::endl;
    return 2;
  }

  try {
    if (run_cmd->parsed()) {
      std::ifstream in(config_path);
      if (!in) throw ConfigError("cannot open config file: " + config_path);
      json j;
      try {
        j = json::parse(in);
      } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("config parse failure: ") + e.what());
      }
      VerifyConfig cfg = config_from_json(j);
      if (!suite_filter.empty()) {
        for (const auto& s : suite_filter)
          if (!known_suites().count(s)) throw ConfigError("unknown suite: " + s);
        std::vector<std::string> kept;
        for (const auto& s : cfg.suites)
          if (std::find(suite_filter.begin(), suite_filter.end(), s) !=
              suite_filter.end())
            kept.push_back(s);
        cfg.suites = std::move(kept);
      }
      if (seed_set) cfg.seed = seed_override;

      Report report = run(cfg);
      const json out = report.to_json();
      if (!cfg.output.empty()) {
        std::ofstream of(cfg.output);
        if (!of) throw ConfigError("cannot write report to " + cfg.output);
        of << out.dump(2) << "\n";
      }
      std::size_t passed = 0;
      for (const auto& r : report.records) passed += r.pass ? 1 : 0;
      std::cout << "suites: " << cfg.suites.size()
                << "  checks: " << report.records.size() << "  passed: " << passed
                << "  failed: " << (report.records.size() - passed) << "\n";
      for (const auto& r : report.records)
        if (!r.pass)
          std::cout << "FAIL " << r.suite << "/" << r.check << " [" << r.algebra
                    << "] rel_error=" << r.rel_error
                    << " tolerance=" << r.tolerance << " (" << r.anchor << ")\n";
      return report.all_pass() ? 0 : 1;
    }

    // table subcommand
    std::vector<std::size_t> sizes;
    std::stringstream ss(sizes_csv);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) sizes.push_back(static_cast<std::size_t>(std::stoul(tok)));
    if (sizes.empty()) throw ConfigError("--sizes must list at least one size");
    auto rows = convergence_table(check_id, sizes);
    const std::string csv = table_to_csv(rows);
    if (!table_output.empty()) {
      std::ofstream of(table_output);
      if (!of) throw ConfigError("cannot write table to " + table_output);
      of << csv;
    } else {
      std::cout << csv;
    }
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << std::endl;
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << std::endl;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 1;
  }
}

}  // namespace symcone::verify
