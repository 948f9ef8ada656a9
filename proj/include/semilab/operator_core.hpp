// Copyright (c) 2026 semilab developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>

namespace semilab {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

// Input failed the Hermiticity check; inputs are rejected, never symmetrized,
// so that ensemble-construction bugs surface at the boundary.
struct hermiticity_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Eigendecomposition did not converge.
struct eigensolver_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An arithmetic result contains NaN or Inf entries.
struct nonfinite_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_finite(const ComplexMatrix& m);
bool is_finite(const StateVector& v);

// max_ij |m_ij|
double max_entry_norm(const ComplexMatrix& m);

/// Self-adjoint matrix, validated at construction.
///
/// The tolerance is relative: ||M - M^dagger||_max <= tol * ||M||_max.
class HermitianOperator {
 public:
  static constexpr double kDefaultTol = 1e-12;

  explicit HermitianOperator(ComplexMatrix m, double hermiticity_tol = kDefaultTol);

  const ComplexMatrix& matrix() const { return matrix_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  double hermiticity_tol() const { return tol_; }

 private:
  ComplexMatrix matrix_;
  double tol_;
};

/// Matrix validated to satisfy ||U^dagger U - I||_max <= 1e-10.
class UnitaryOperator {
 public:
  static constexpr double kUnitarityTol = 1e-10;

  explicit UnitaryOperator(ComplexMatrix m);

  const ComplexMatrix& matrix() const { return matrix_; }
  Eigen::Index dim() const { return matrix_.rows(); }

 private:
  ComplexMatrix matrix_;
};

/// Strongly continuous operator-valued map t -> B(X) on [0, t_max] with
/// F(0) = I (checked at construction, 1e-12 entrywise). t_max may be
/// infinity for maps defined on the whole half-line.
class OperatorFunction {
 public:
  using Evaluator = std::function<ComplexMatrix(double)>;

  OperatorFunction(Eigen::Index dim, double t_max, Evaluator evaluator);

  // Evaluates F(t); throws std::domain_error outside [0, t_max].
  ComplexMatrix operator()(double t) const;

  Eigen::Index dim() const { return dim_; }
  double t_max() const { return t_max_; }

 private:
  Eigen::Index dim_;
  double t_max_;
  Evaluator eval_;
};

/// exp(i t H) via the real eigendecomposition H = V diag(lambda) V^dagger.
UnitaryOperator expm_hermitian(const HermitianOperator& h, double t);

/// The semigroup t -> exp(i t H) as an OperatorFunction with a cached
/// eigendecomposition (one factorization, reused for every t).
OperatorFunction hamiltonian_semigroup(const HermitianOperator& h);

/// A^n by repeated squaring, n >= 1. Deterministic for fixed input.
ComplexMatrix operator_power(const ComplexMatrix& a, long n);

/// sup over the uniform grid {k T / (grid_points-1)} of ||F(t) u||_2.
/// A lower bound on the continuum supremum; converges under grid refinement.
double seminorm_rho(const OperatorFunction& f, const StateVector& u, double T,
                    int grid_points);

}  // namespace semilab
