// Copyright (c) 2026 semilab developers.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: `semilab run <config>` executes an experiment and
// writes report.csv / plot.gp / manifest.txt; `semilab validate <config>`
// checks a config and reports every violation. Exit codes: 0 success,
// 1 validation error, 2 runtime error.
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "semilab/config.hpp"
#include "semilab/runner.hpp"
#include "semilab/textio.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitRuntime = 2;

int print_errors(const semilab::ParseOutcome& outcome) {
  for (const semilab::ConfigError& error : outcome.errors) {
    std::cerr << "config error: " << error.format() << '\n';
  }
  return kExitValidation;
}

std::optional<std::string> load(const std::string& path) {
  try {
    return semilab::read_text_file(path);
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return std::nullopt;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for averaged random operator semigroups"};
  app.require_subcommand(1);

  std::string run_config_path;
  std::optional<std::uint64_t> seed_override;
  std::string out_override;
  std::string workers_override;
  bool quiet = false;

  CLI::App* run = app.add_subcommand("run", "run an experiment described by a config file");
  run->add_option("config", run_config_path, "path to the config file")->required();
  run->add_option("--seed", seed_override, "override the config seed (64-bit)");
  run->add_option("--out", out_override, "override the output directory");
  run->add_option("--workers", workers_override, "worker count: a positive integer or 'auto'");
  run->add_flag("--quiet", quiet, "suppress the run summary");

  std::string validate_config_path;
  CLI::App* validate = app.add_subcommand("validate", "check a config file and report all errors");
  validate->add_option("config", validate_config_path, "path to the config file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  if (validate->parsed()) {
    const auto text = load(validate_config_path);
    if (!text) return kExitRuntime;
    const semilab::ParseOutcome outcome = semilab::parse_config(*text);
    if (!outcome.ok()) return print_errors(outcome);
    std::cout << "config ok: " << semilab::to_string(outcome.config->kind) << " experiment\n";
    return kExitOk;
  }

  const auto text = load(run_config_path);
  if (!text) return kExitRuntime;
  semilab::ParseOutcome outcome = semilab::parse_config(*text);
  if (!outcome.ok()) return print_errors(outcome);

  semilab::ExperimentConfig config = std::move(*outcome.config);
  if (seed_override) config.seed = *seed_override;
  if (!out_override.empty()) config.output_dir = out_override;
  if (!workers_override.empty()) {
    if (workers_override == "auto") {
      config.workers = 0;
    } else {
      try {
        const long value = std::stol(workers_override);
        if (value < 1) throw std::invalid_argument("not positive");
        config.workers = static_cast<int>(value);
      } catch (const std::exception&) {
        std::cerr << "config error: --workers must be a positive integer or 'auto', got '"
                  << workers_override << "'\n";
        return kExitValidation;
      }
    }
  }

  const semilab::RunManifest manifest = semilab::run_experiment(config);
  if (!quiet) {
    std::cout << "experiment: " << semilab::to_string(manifest.kind) << '\n'
              << "output_dir: " << config.output_dir << '\n'
              << "seed: " << manifest.seed << '\n';
    for (const auto& [file, digest] : manifest.checksums) {
      std::cout << "wrote " << file << " (fnv1a64 " << digest << ")\n";
    }
    std::cout << "wall_seconds: " << manifest.wall_seconds << '\n'
              << "status: " << (manifest.ok ? "ok" : "failed") << '\n';
  }
  if (!manifest.ok) {
    std::cerr << "run failed: " << manifest.error << '\n';
    return kExitRuntime;
  }
  return kExitOk;
}
