// Copyright (c) 2026 semilab developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "semilab/ensemble.hpp"
#include "semilab/grid_function.hpp"
#include "semilab/quantizer.hpp"
#include "semilab/shift_semigroup.hpp"

namespace semilab {

enum class ExperimentKind { Chernoff, Lln, Clt, Quantize };

std::string to_string(ExperimentKind kind);

/// Power-iteration deviation sweep of an ensemble's averaged propagator
/// against the mean-Hamiltonian semigroup.
struct ChernoffParams {
  HamiltonianEnsemble ensemble;
  double T = 1.0;
  std::vector<int> schedule;
  int grid_points = 33;
  int random_probes = 4;
  int mc_samples = 4096;  // averaged-propagator budget, continuous laws only
};

/// Tail statistics of random unitary compositions, one row per n.
struct LlnParams {
  HamiltonianEnsemble ensemble;
  double t = 1.0;
  double epsilon = 0.1;
  int trials = 1000;
  std::vector<int> schedule;
  int ref_mc_samples = 4096;
  bool per_probe = false;  // one tail curve per probe instead of the max
};

/// Composition powers of a random-shift averaging step against the
/// reference diffusion.
struct CltParams {
  ShiftProcessSpec process;
  int grid_size = 256;
  double period = 0.0;
  std::vector<TrigMode> modes;
  double t = 1.0;
  std::vector<int> schedule;
};

/// Chernoff sweep for the two-rule quantization mixture of a polynomial
/// symbol, probed on the low-lying half of the basis.
struct QuantizeParams {
  PolynomialSymbol symbol;
  std::vector<std::pair<QuantizationRule, double>> rules;
  int dimension = 32;
  double hbar = 1.0;
  double T = 1.0;
  std::vector<int> schedule;
  int grid_points = 33;
};

struct ExperimentConfig {
  ExperimentKind kind;
  std::uint64_t seed = 0;
  std::string output_dir = "out";
  int workers = 0;  // 0 = auto
  std::variant<ChernoffParams, LlnParams, CltParams, QuantizeParams> params;

  /// Canonical JSON form with every default made explicit; parsing it back
  /// yields a config with an identical canonical form.
  std::string to_json() const;
};

struct ConfigError {
  std::string where;  // dotted path into the document, e.g. "ensemble.atoms[1]"
  std::string message;
  int line = 0;  // 1-based; 0 for semantic errors with no text location
  int column = 0;

  std::string format() const;
};

struct ParseOutcome {
  std::optional<ExperimentConfig> config;  // engaged exactly when errors is empty
  std::vector<ConfigError> errors;

  bool ok() const { return errors.empty(); }
};

/// Parses and validates config text against the module preconditions,
/// collecting every violation instead of stopping at the first.
ParseOutcome parse_config(const std::string& text);

}  // namespace semilab
