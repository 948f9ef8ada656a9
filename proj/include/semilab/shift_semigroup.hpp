// Copyright (c) 2026 semilab developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "semilab/grid_function.hpp"

namespace semilab {

/// Finitely supported mean-zero jump law for the random shift process.
/// A nonzero mean would make the n-fold rescaled sums drift without bound,
/// so it is rejected at construction; variance must be positive.
class JumpDistribution {
 public:
  enum class Kind { Rademacher, TwoPoint, DiscreteUniform };

  /// +sigma / -sigma with probability 1/2 each.
  static JumpDistribution rademacher(double sigma);
  /// a with probability p, b with probability 1-p; p a + (1-p) b must be 0.
  static JumpDistribution two_point(double a, double b, double p);
  /// Equal weights on the given points; their mean must be 0.
  static JumpDistribution discrete_uniform(std::vector<double> values);

  Kind kind() const { return kind_; }
  const std::vector<std::pair<double, double>>& support() const { return support_; }
  double variance() const { return variance_; }

  /// E[exp(-i theta zeta)], the exact finite sum over the support.
  Complex char_function(double theta) const;

 private:
  JumpDistribution(Kind kind, std::vector<std::pair<double, double>> support);

  Kind kind_;
  std::vector<std::pair<double, double>> support_;  // (value, probability)
  double variance_;
};

std::string to_string(JumpDistribution::Kind kind);

/// Random shift process with the diffusive scaling: the shift applied over
/// an interval of length t is sqrt(t) * zeta, zeta ~ jump. At t = 0 the
/// shift vanishes identically.
struct ShiftProcessSpec {
  JumpDistribution jump;

  double variance() const { return jump.variance(); }
};

/// One averaging step: E[u(x - sqrt(t) zeta)], the probability-weighted sum
/// of exact band-limited shifts, realized as the per-mode multiplier
/// E[exp(-2 pi i m sqrt(t) zeta / L)]. t = 0 returns u unchanged.
PeriodicGridFunction convolution_apply(const PeriodicGridFunction& u,
                                       const ShiftProcessSpec& spec, double t);

/// n-fold composition of convolution_apply at time step t/n. Shifts for a
/// fixed law commute, so this is the per-mode multiplier phi(m)^n with
/// phi(m) = E[exp(-2 pi i m sqrt(t/n) zeta / L)], powered by repeated
/// squaring.
PeriodicGridFunction clt_compose(const PeriodicGridFunction& u, const ShiftProcessSpec& spec,
                                 double t, int n);

/// Reference diffusion: multiplier exp(-variance (2 pi m / L)^2 t / 2).
PeriodicGridFunction heat_apply(const PeriodicGridFunction& u, double t, double variance);

struct CltErrorRow {
  int n;
  double error;
};

/// Grid sup-norm distance of clt_compose(u, spec, t, n) from
/// heat_apply(u, t, spec.variance()), for each n in the strictly increasing
/// schedule.
std::vector<CltErrorRow> clt_error(const PeriodicGridFunction& u, const ShiftProcessSpec& spec,
                                   double t, const std::vector<int>& n_schedule);

/// Header + rows `n,error`.
std::string clt_error_to_csv(const std::vector<CltErrorRow>& rows);

}  // namespace semilab
