// Copyright (c) 2026 semilab developers.
// SPDX-License-Identifier: Apache-2.0
#include "semilab/shift_semigroup.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "semilab/textio.hpp"

namespace semilab {

namespace {

// z^n for n >= 0 by repeated squaring; multiplication order is fixed by the
// bit pattern of n, so results are reproducible.
Complex ipow(Complex base, long n) {
  Complex result(1.0, 0.0);
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

}  // namespace

JumpDistribution::JumpDistribution(Kind kind, std::vector<std::pair<double, double>> support)
    : kind_(kind), support_(std::move(support)) {
  if (support_.empty()) {
    throw std::invalid_argument("JumpDistribution: empty support");
  }
  double scale = 1.0;
  double total = 0.0;
  double mean = 0.0;
  for (const auto& [value, prob] : support_) {
    if (!std::isfinite(value)) {
      throw std::invalid_argument("JumpDistribution: support values must be finite");
    }
    if (!(prob >= 0.0)) {
      throw std::invalid_argument("JumpDistribution: probabilities must be nonnegative");
    }
    scale = std::max(scale, std::abs(value));
    total += prob;
    mean += prob * value;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("JumpDistribution: probabilities must sum to 1");
  }
  if (std::abs(mean) > 1e-12 * scale) {
    std::ostringstream os;
    os << "JumpDistribution: mean must be 0, got " << mean
       << " (nonzero-mean jumps drift under the diffusive scaling)";
    throw std::invalid_argument(os.str());
  }
  double second_moment = 0.0;
  for (const auto& [value, prob] : support_) {
    second_moment += prob * value * value;
  }
  variance_ = second_moment - mean * mean;
  if (!(variance_ > 0.0)) {
    throw std::invalid_argument("JumpDistribution: variance must be positive");
  }
}

JumpDistribution JumpDistribution::rademacher(double sigma) {
  if (!(sigma > 0.0)) {
    throw std::invalid_argument("JumpDistribution::rademacher: sigma must be positive");
  }
  return JumpDistribution(Kind::Rademacher, {{sigma, 0.5}, {-sigma, 0.5}});
}

JumpDistribution JumpDistribution::two_point(double a, double b, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("JumpDistribution::two_point: p must lie in [0,1]");
  }
  return JumpDistribution(Kind::TwoPoint, {{a, p}, {b, 1.0 - p}});
}

JumpDistribution JumpDistribution::discrete_uniform(std::vector<double> values) {
  if (values.empty()) {
    throw std::invalid_argument("JumpDistribution::discrete_uniform: no values");
  }
  const double prob = 1.0 / static_cast<double>(values.size());
  std::vector<std::pair<double, double>> support;
  support.reserve(values.size());
  for (double v : values) support.emplace_back(v, prob);
  return JumpDistribution(Kind::DiscreteUniform, std::move(support));
}

Complex JumpDistribution::char_function(double theta) const {
  Complex sum(0.0, 0.0);
  for (const auto& [value, prob] : support_) {
    sum += prob * std::polar(1.0, -theta * value);
  }
  return sum;
}

std::string to_string(JumpDistribution::Kind kind) {
  switch (kind) {
    case JumpDistribution::Kind::Rademacher: return "rademacher";
    case JumpDistribution::Kind::TwoPoint: return "two_point";
    case JumpDistribution::Kind::DiscreteUniform: return "discrete_uniform";
  }
  return "unknown";
}

PeriodicGridFunction convolution_apply(const PeriodicGridFunction& u,
                                       const ShiftProcessSpec& spec, double t) {
  if (t < 0.0) {
    throw std::invalid_argument("convolution_apply: t must be nonnegative");
  }
  if (t == 0.0) return u;
  const double step = std::sqrt(t);
  const double rate = 2.0 * std::numbers::pi * step / u.period();
  return u.apply_mass_preserving_multiplier([&](long m) {
    return spec.jump.char_function(rate * static_cast<double>(m));
  });
}

PeriodicGridFunction clt_compose(const PeriodicGridFunction& u, const ShiftProcessSpec& spec,
                                 double t, int n) {
  if (n < 1) {
    throw std::invalid_argument("clt_compose: n must be >= 1");
  }
  if (t < 0.0) {
    throw std::invalid_argument("clt_compose: t must be nonnegative");
  }
  if (t == 0.0) return u;
  const double step = std::sqrt(t / static_cast<double>(n));
  const double rate = 2.0 * std::numbers::pi * step / u.period();
  return u.apply_mass_preserving_multiplier([&](long m) {
    return ipow(spec.jump.char_function(rate * static_cast<double>(m)), n);
  });
}

PeriodicGridFunction heat_apply(const PeriodicGridFunction& u, double t, double variance) {
  if (t < 0.0) {
    throw std::invalid_argument("heat_apply: t must be nonnegative");
  }
  if (!(variance > 0.0)) {
    throw std::invalid_argument("heat_apply: variance must be positive");
  }
  if (t == 0.0) return u;
  const double rate = 2.0 * std::numbers::pi / u.period();
  return u.apply_mass_preserving_multiplier([&](long m) {
    const double omega = rate * static_cast<double>(m);
    return Complex(std::exp(-0.5 * variance * omega * omega * t), 0.0);
  });
}

std::vector<CltErrorRow> clt_error(const PeriodicGridFunction& u, const ShiftProcessSpec& spec,
                                   double t, const std::vector<int>& n_schedule) {
  if (n_schedule.empty()) {
    throw std::invalid_argument("clt_error: schedule is empty");
  }
  for (std::size_t k = 0; k < n_schedule.size(); ++k) {
    if (n_schedule[k] < 1) {
      throw std::invalid_argument("clt_error: schedule entries must be >= 1");
    }
    if (k > 0 && n_schedule[k] <= n_schedule[k - 1]) {
      throw std::invalid_argument("clt_error: schedule must be strictly increasing");
    }
  }
  if (!(t > 0.0)) {
    throw std::invalid_argument("clt_error: t must be positive");
  }

  const PeriodicGridFunction reference = heat_apply(u, t, spec.variance());
  std::vector<CltErrorRow> rows;
  rows.reserve(n_schedule.size());
  for (int n : n_schedule) {
    const PeriodicGridFunction composed = clt_compose(u, spec, t, n);
    double worst = 0.0;
    for (Eigen::Index j = 0; j < u.size(); ++j) {
      worst = std::max(worst, std::abs(composed.values()[j] - reference.values()[j]));
    }
    rows.push_back({n, worst});
  }
  return rows;
}

std::string clt_error_to_csv(const std::vector<CltErrorRow>& rows) {
  std::ostringstream out;
  out << "n,error\n";
  for (const CltErrorRow& row : rows) {
    out << row.n << ',' << format_double(row.error) << '\n';
  }
  return out.str();
}

}  // namespace semilab
