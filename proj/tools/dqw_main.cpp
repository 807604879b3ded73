#include <CLI11.hpp>

#include <iostream>

#include "dqw/config.hpp"
#include "dqw/errors.hpp"
#include "dqw/scenario.hpp"
#include "dqw/validation.hpp"

#ifndef DQW_VERSION
#define DQW_VERSION "0.1.0"
#endif

int main(int argc, char** argv) {
  CLI::App app{"Generalized Dirac quantum walks in (1+1)D curved space-times"};
  app.require_subcommand(1);

  std::string config_path;
  auto* run = app.add_subcommand("run", "Run the scenario described by a key=value config file");
  run->add_option("config", config_path, "Config file")->required();

  std::string suite;
  std::uint64_t seed = 7;
  auto* validate = app.add_subcommand("validate", "Run a property suite: unitarity|dispersion|geometry|oracle");
  validate->add_option("suite", suite, "Suite name")->required();
  validate->add_option("--seed", seed, "RNG seed for randomized checks");

  auto* version = app.add_subcommand("version", "Print the version");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : dqw::exit_code::config_error;
  }

  if (*version) {
    std::cout << "dqw " << DQW_VERSION << '\n';
    return dqw::exit_code::ok;
  }

  if (*run) {
    dqw::RunConfig cfg;
    try {
      cfg = dqw::parse_config(config_path);
    } catch (const dqw::ValidationError& e) {
      std::cerr << "config error:\n";
      for (const auto& v : e.violations()) std::cerr << "  " << v << '\n';
      return dqw::exit_code::config_error;
    } catch (const dqw::ParseError& e) {
      std::cerr << "config error: " << e.what() << '\n';
      return dqw::exit_code::config_error;
    }
    return dqw::run_scenario(cfg, std::cout, std::cerr);
  }

  if (!dqw::validation::is_suite(suite)) {
    std::cerr << "unknown suite '" << suite << "' (expected unitarity|dispersion|geometry|oracle)\n";
    return dqw::exit_code::config_error;
  }
  try {
    const auto report = dqw::validation::run_suite(suite, seed);
    dqw::validation::print_report(std::cout, report);
    return report.passed() ? dqw::exit_code::ok : dqw::exit_code::validation_failure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return dqw::exit_code::runtime_error;
  }
}
