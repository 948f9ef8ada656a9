// Copyright (c) 2026 semilab developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "semilab/operator_core.hpp"

namespace semilab {

/// Complex samples at x_j = j L / N on a periodic interval of length L,
/// stored together with their discrete Fourier transform.  N must be a power
/// of two, N >= 4.  The band-limited interpolant carries signed mode
/// frequencies m in (-N/2, N/2] with the shared mode at +N/2, so every
/// spectral operation is a plain per-mode multiplier and compositions of
/// operations are exact up to roundoff.
class PeriodicGridFunction {
 public:
  static PeriodicGridFunction from_values(double period, Eigen::VectorXcd values);
  static PeriodicGridFunction from_spectrum(double period, Eigen::VectorXcd spectrum);

  /// Samples fn at the N grid points.
  static PeriodicGridFunction sample(double period, Eigen::Index n,
                                     const std::function<Complex(double)>& fn);

  double period() const { return period_; }
  Eigen::Index size() const { return values_.size(); }

  const Eigen::VectorXcd& values() const { return values_; }
  /// Unnormalized forward DFT: spectrum[k] = sum_j values[j] e^{-2 pi i jk/N}.
  const Eigen::VectorXcd& spectrum() const { return spectrum_; }

  double x(Eigen::Index j) const {
    return period_ * static_cast<double>(j) / static_cast<double>(size());
  }

  /// Signed frequency of DFT bin k: k for k <= N/2, k - N above.
  long mode_frequency(Eigen::Index k) const;

  /// Amplitude of e^{2 pi i m x / L} in the interpolant (spectrum[k]/N with
  /// k = m wrapped mod N).
  Complex coefficient(long m) const;

  /// max_j |values[j]|
  double sup_norm() const;

  /// New function with spectrum[k] *= multiplier(m_k) for every nonzero
  /// mode; the zero mode is copied untouched.  All operators built on this
  /// class fix constants analytically, and the copy makes that bit-exact.
  PeriodicGridFunction apply_mass_preserving_multiplier(
      const std::function<Complex(long)>& multiplier) const;

  /// Rows `x,re,im`, one per grid point.
  std::string to_csv() const;

 private:
  PeriodicGridFunction(double period, Eigen::VectorXcd values, Eigen::VectorXcd spectrum);

  double period_;
  Eigen::VectorXcd values_;
  Eigen::VectorXcd spectrum_;
};

/// Exact shift of the band-limited interpolant: mode m picks up
/// e^{-2 pi i m s / L}.  s is arbitrary real; whole-period shifts return the
/// input unchanged.  Norm-preserving, and composes additively in s up to
/// roundoff.
PeriodicGridFunction fourier_shift(const PeriodicGridFunction& u, double s);

/// One real Fourier mode of a trig polynomial on [0, L).
struct TrigMode {
  long k = 0;  // 0 <= k < N/2
  double cos_coeff = 0.0;
  double sin_coeff = 0.0;
};

/// cos_coeff * cos(2 pi k x / L) + sin_coeff * sin(2 pi k x / L), summed
/// over modes (repeated k accumulate), built directly in spectrum space so
/// the coefficients are exact.
PeriodicGridFunction trig_polynomial(double period, Eigen::Index n,
                                     const std::vector<TrigMode>& modes);

}  // namespace semilab
