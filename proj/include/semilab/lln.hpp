// Copyright (c) 2026 semilab developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "semilab/ensemble.hpp"
#include "semilab/operator_core.hpp"
#include "semilab/rng.hpp"

namespace semilab {

/// Empirical tail statistics for compositions of independent random
/// unitaries against the mean composition.
struct LLNResult {
  int n = 0;
  double t = 0.0;
  double epsilon = 0.0;
  int trials = 0;
  double tail_probability = 0.0;  // fraction of trials with deviation > epsilon
  double mean_deviation = 0.0;    // trial average of the per-trial deviation

  // Reference-operator provenance: 0 samples and 0 error when the mean
  // composition is exact (discrete ensembles); for sampled references the
  // recorded error is the 1/sqrt(M) Monte Carlo scale.
  int ref_mc_samples = 0;
  double ref_mc_error = 0.0;

  /// One CSV row, no header.
  std::string to_csv_row() const;
};

/// Header + rows `n,t,epsilon,trials,tail_probability,mean_deviation`.
std::string lln_results_to_csv(const std::vector<LLNResult>& rows);

/// exp(i(t/n)H_n) ... exp(i(t/n)H_1) for n independent draws from e.
UnitaryOperator sample_composition(const HamiltonianEnsemble& e, int n, double t,
                                   RngStream& rng);

/// Tail probability and mean deviation of `trials` independent compositions
/// against the mean composition (averaged_propagator(t/n))^n.  Per-trial
/// deviation is the max over `probes` of ||composition x - reference x||.
///
/// Trial j draws from the stream with index j of rng's seed, so results do
/// not depend on the worker count.  `ref_mc_samples` is the Monte Carlo
/// budget for the reference when the ensemble is continuous (ignored for
/// discrete ensembles, where the reference is exact).
LLNResult lln_tail(const HamiltonianEnsemble& e, int n, double t, double epsilon,
                   int trials, const std::vector<StateVector>& probes, RngStream& rng,
                   int ref_mc_samples = 4096, int workers = 0);

/// Per-probe variant: element i restricts the deviation event to probe i,
/// producing one tail curve per vector instead of a max-aggregated one.
std::vector<LLNResult> lln_tail_per_probe(const HamiltonianEnsemble& e, int n, double t,
                                          double epsilon, int trials,
                                          const std::vector<StateVector>& probes,
                                          RngStream& rng, int ref_mc_samples = 4096,
                                          int workers = 0);

}  // namespace semilab
