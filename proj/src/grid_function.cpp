// Copyright (c) 2026 semilab developers.
// SPDX-License-Identifier: Apache-2.0
#include "semilab/grid_function.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "semilab/textio.hpp"

namespace semilab {

namespace {

bool is_power_of_two(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

// Iterative radix-2 transform, in place. sign = -1 forward, +1 inverse
// (inverse scaling applied by the caller). Hand-rolled so the power-of-two
// contract and the butterfly evaluation order are fixed here, making
// repeated runs bit-identical.
void fft_radix2(Eigen::VectorXcd& a, int sign) {
  const Eigen::Index n = a.size();
  for (Eigen::Index i = 1, j = 0; i < n; ++i) {
    Eigen::Index bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j |= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (Eigen::Index len = 2; len <= n; len <<= 1) {
    const double angle = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
    const Complex w_len = std::polar(1.0, angle);
    for (Eigen::Index block = 0; block < n; block += len) {
      Complex w(1.0, 0.0);
      for (Eigen::Index k = 0; k < len / 2; ++k) {
        const Complex even = a[block + k];
        const Complex odd = a[block + k + len / 2] * w;
        a[block + k] = even + odd;
        a[block + k + len / 2] = even - odd;
        w *= w_len;
      }
    }
  }
}

void validate_grid(double period, const Eigen::VectorXcd& data, const char* what) {
  if (!(period > 0.0)) {
    throw std::invalid_argument(std::string(what) + ": period must be positive");
  }
  const Eigen::Index n = data.size();
  if (n < 4 || !is_power_of_two(n)) {
    std::ostringstream os;
    os << what << ": size must be a power of two >= 4, got " << n;
    throw std::invalid_argument(os.str());
  }
  if (!data.allFinite()) {
    throw std::invalid_argument(std::string(what) + ": entries must be finite");
  }
}

}  // namespace

PeriodicGridFunction::PeriodicGridFunction(double period, Eigen::VectorXcd values,
                                           Eigen::VectorXcd spectrum)
    : period_(period), values_(std::move(values)), spectrum_(std::move(spectrum)) {}

PeriodicGridFunction PeriodicGridFunction::from_values(double period,
                                                       Eigen::VectorXcd values) {
  validate_grid(period, values, "PeriodicGridFunction::from_values");
  Eigen::VectorXcd spectrum = values;
  fft_radix2(spectrum, -1);
  return PeriodicGridFunction(period, std::move(values), std::move(spectrum));
}

PeriodicGridFunction PeriodicGridFunction::from_spectrum(double period,
                                                         Eigen::VectorXcd spectrum) {
  validate_grid(period, spectrum, "PeriodicGridFunction::from_spectrum");
  Eigen::VectorXcd values = spectrum;
  fft_radix2(values, +1);
  values /= static_cast<double>(values.size());
  return PeriodicGridFunction(period, std::move(values), std::move(spectrum));
}

PeriodicGridFunction PeriodicGridFunction::sample(double period, Eigen::Index n,
                                                  const std::function<Complex(double)>& fn) {
  if (!fn) {
    throw std::invalid_argument("PeriodicGridFunction::sample: empty function");
  }
  Eigen::VectorXcd values(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    values[j] = fn(period * static_cast<double>(j) / static_cast<double>(n));
  }
  return from_values(period, std::move(values));
}

long PeriodicGridFunction::mode_frequency(Eigen::Index k) const {
  const Eigen::Index n = size();
  if (k < 0 || k >= n) {
    throw std::out_of_range("PeriodicGridFunction::mode_frequency: bin out of range");
  }
  return k <= n / 2 ? static_cast<long>(k) : static_cast<long>(k - n);
}

Complex PeriodicGridFunction::coefficient(long m) const {
  const long n = static_cast<long>(size());
  const long k = ((m % n) + n) % n;
  return spectrum_[static_cast<Eigen::Index>(k)] / static_cast<double>(n);
}

double PeriodicGridFunction::sup_norm() const {
  double worst = 0.0;
  for (Eigen::Index j = 0; j < values_.size(); ++j) {
    worst = std::max(worst, std::abs(values_[j]));
  }
  return worst;
}

PeriodicGridFunction PeriodicGridFunction::apply_mass_preserving_multiplier(
    const std::function<Complex(long)>& multiplier) const {
  Eigen::VectorXcd spectrum(size());
  spectrum[0] = spectrum_[0];
  for (Eigen::Index k = 1; k < size(); ++k) {
    spectrum[k] = spectrum_[k] * multiplier(mode_frequency(k));
  }
  return from_spectrum(period_, std::move(spectrum));
}

std::string PeriodicGridFunction::to_csv() const {
  std::ostringstream out;
  out << "x,re,im\n";
  for (Eigen::Index j = 0; j < size(); ++j) {
    out << format_double(x(j)) << ',' << format_double(values_[j].real()) << ','
        << format_double(values_[j].imag()) << '\n';
  }
  return out.str();
}

PeriodicGridFunction fourier_shift(const PeriodicGridFunction& u, double s) {
  if (std::fmod(s, u.period()) == 0.0) {
    return u;
  }
  const double rate = -2.0 * std::numbers::pi * s / u.period();
  return u.apply_mass_preserving_multiplier(
      [rate](long m) { return std::polar(1.0, rate * static_cast<double>(m)); });
}

PeriodicGridFunction trig_polynomial(double period, Eigen::Index n,
                                     const std::vector<TrigMode>& modes) {
  Eigen::VectorXcd spectrum = Eigen::VectorXcd::Zero(n);
  validate_grid(period, spectrum, "trig_polynomial");
  const double scale = static_cast<double>(n);
  for (const TrigMode& mode : modes) {
    if (mode.k < 0 || mode.k >= static_cast<long>(n) / 2) {
      std::ostringstream os;
      os << "trig_polynomial: mode " << mode.k << " outside [0, " << n / 2 << ")";
      throw std::invalid_argument(os.str());
    }
    if (mode.k == 0) {
      spectrum[0] += scale * mode.cos_coeff;
      continue;
    }
    const Eigen::Index pos = static_cast<Eigen::Index>(mode.k);
    const Eigen::Index neg = n - pos;
    spectrum[pos] += scale * Complex(0.5 * mode.cos_coeff, -0.5 * mode.sin_coeff);
    spectrum[neg] += scale * Complex(0.5 * mode.cos_coeff, 0.5 * mode.sin_coeff);
  }
  return PeriodicGridFunction::from_spectrum(period, std::move(spectrum));
}

}  // namespace semilab
