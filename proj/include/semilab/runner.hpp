// Copyright (c) 2026 semilab developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "semilab/config.hpp"

namespace semilab {

inline constexpr char kSemilabVersion[] = "0.1.0";

/// Record of one experiment run: status, timing, and an FNV-1a checksum per
/// emitted file. Rerunning the same config and seed reproduces the
/// checksums; wall time is informational only.
struct RunManifest {
  std::string version = kSemilabVersion;
  bool ok = false;
  std::string error;  // empty when ok
  ExperimentKind kind = ExperimentKind::Chernoff;
  std::uint64_t seed = 0;
  int workers = 0;  // 0 = auto
  double wall_seconds = 0.0;
  std::vector<std::pair<std::string, std::string>> checksums;  // (file, hex digest)
  std::string config_echo;  // canonical JSON

  std::string to_text() const;
};

/// Runs the experiment and writes report.csv, plot.gp, and manifest.txt to
/// cfg.output_dir. The manifest is written even when the run fails partway;
/// its status line then carries the failure. Output bytes depend only on
/// (config, seed), never on the worker count.
RunManifest run_experiment(const ExperimentConfig& cfg);

}  // namespace semilab
