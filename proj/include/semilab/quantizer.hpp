// Copyright (c) 2026 semilab developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semilab/operator_core.hpp"

namespace semilab {

/// Classical Hamilton function h(q, p) as a finite sum of monomials
/// c * q^a * p^b with real coefficients. Total degree a + b is capped at 8.
struct PolynomialSymbol {
  struct Term {
    int q_power = 0;
    int p_power = 0;
    double coeff = 0.0;
  };

  std::vector<Term> terms;

  static constexpr int kMaxDegree = 8;

  /// Parses the compact text form, e.g. "1.0*q^2*p^2 + 0.5*q".
  /// Terms are separated by +/-, factors are an optional real coefficient
  /// and powers q^a, p^b; whitespace is insignificant. Throws
  /// std::invalid_argument with a character position on bad input.
  static PolynomialSymbol parse(std::string_view text);

  std::string to_string() const;
  void validate() const;
};

/// Truncated number-state basis: dimension N and the action scale hbar.
struct OscillatorBasis {
  int n = 2;
  double hbar = 1.0;

  void validate() const;
};

enum class QuantizationRule { Weyl, BornJordan };

const char* to_string(QuantizationRule rule);

/// Position and momentum on the truncated basis, built from the lowering
/// matrix A with A[j-1, j] = sqrt(j):
///   Q = sqrt(hbar/2) (A + A^dagger),  P = i sqrt(hbar/2) (A^dagger - A).
/// The canonical commutator [Q, P] = i hbar I holds exactly on the
/// top-left (N-1) block; the corner deviation is the truncation artifact.
std::pair<HermitianOperator, HermitianOperator> position_momentum(const OscillatorBasis& basis);

/// Orders one classical monomial q^a p^b into an operator:
///   Weyl:         2^-a  sum_k C(a,k) Q^k P^b Q^(a-k)
///   Born-Jordan:  (a+1)^-1 sum_k   Q^k P^b Q^(a-k)
/// and sums terms linearly. Both rules agree whenever a = 0 or b = 0.
/// The result must come out Hermitian; a violation indicates an internal
/// bug and throws hermiticity_error.
HermitianOperator quantize(const PolynomialSymbol& symbol, QuantizationRule rule,
                           const OscillatorBasis& basis);

/// Probability law over quantization rules applied to one symbol; the atoms
/// are the quantized Hermitian matrices. Plugs into HamiltonianEnsemble.
class QuantizationEnsemble {
 public:
  QuantizationEnsemble(PolynomialSymbol symbol,
                       std::vector<std::pair<QuantizationRule, double>> rules,
                       OscillatorBasis basis);

  const PolynomialSymbol& symbol() const { return symbol_; }
  const std::vector<std::pair<QuantizationRule, double>>& rules() const { return rules_; }
  const OscillatorBasis& basis() const { return basis_; }
  const std::vector<std::pair<HermitianOperator, double>>& atoms() const { return atoms_; }
  Eigen::Index dim() const { return basis_.n; }

 private:
  PolynomialSymbol symbol_;
  std::vector<std::pair<QuantizationRule, double>> rules_;
  OscillatorBasis basis_;
  std::vector<std::pair<HermitianOperator, double>> atoms_;
};

QuantizationEnsemble quantization_ensemble(
    PolynomialSymbol symbol, std::vector<std::pair<QuantizationRule, double>> rules,
    OscillatorBasis basis);

}  // namespace semilab
