// Copyright (c) 2026 semilab developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semilab/operator_core.hpp"

namespace semilab {

/// Deviation of the power iteration from a reference evolution, per
/// subdivision count.  `decay_ratios[k]` is `deviations[k+1] / deviations[k]`
/// (one entry shorter than `deviations`, 0.0 where the denominator vanishes).
struct ChernoffReport {
  std::vector<int> n_schedule;
  std::vector<double> deviations;
  std::vector<double> decay_ratios;
  int test_vectors = 0;
  double T = 0.0;

  /// Rows `n,deviation,decay_ratio`; the first row leaves the ratio column
  /// empty because no predecessor exists.
  std::string to_csv() const;
};

/// (F(t/n))^n via one evaluation and repeated squaring.  Requires n >= 1 and
/// 0 <= t/n <= F's horizon; t = 0 yields the identity.
ComplexMatrix chernoff_power(const OperatorFunction& f, double t, int n);

/// max over probe vectors u and a uniform grid t in [0, T] of
/// ||(F(t/n))^n u - U(t) u||.  The reference is evaluated directly at t: for
/// a one-parameter group target that equals its own power iteration exactly,
/// which keeps reference roundoff out of the measurement.
double chernoff_deviation(const OperatorFunction& f, const OperatorFunction& reference,
                          double T, int n, const std::vector<StateVector>& probes,
                          int grid_points);

/// Second-order one-sided difference (-3 F(0) + 4 F(h) - F(2h)) / (2h)
/// approximating F'(0).  One-sided because the domain starts at 0.  Rejects
/// h <= 0 and stencils whose far node 2h leaves F's domain.
ComplexMatrix generator_fd(const OperatorFunction& f, double h);

/// Canonical basis vectors followed by `n_random` seeded random unit vectors.
/// Deterministic for a fixed (dim, n_random, seed).
std::vector<StateVector> default_probe_vectors(Eigen::Index dim, int n_random,
                                               std::uint64_t seed);

/// Deviation sweep over a strictly increasing schedule at fixed horizon T.
/// Distinct n values run on independent workers (`workers` <= 0 means
/// hardware default); results land by schedule index, so the report is
/// byte-stable for any worker count.
ChernoffReport equivalence_report(const OperatorFunction& f, const OperatorFunction& reference,
                                  double T, const std::vector<int>& n_schedule,
                                  const std::vector<StateVector>& probes, int grid_points,
                                  int workers = 0);

}  // namespace semilab
