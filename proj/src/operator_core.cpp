// Copyright (c) 2026 semilab developers.
// SPDX-License-Identifier: Apache-2.0
#include "semilab/operator_core.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <sstream>

namespace semilab {

bool is_finite(const ComplexMatrix& m) {
  return m.allFinite();
}

bool is_finite(const StateVector& v) {
  return v.allFinite();
}

double max_entry_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

HermitianOperator::HermitianOperator(ComplexMatrix m, double hermiticity_tol)
    : matrix_(std::move(m)), tol_(hermiticity_tol) {
  if (matrix_.rows() < 1 || matrix_.rows() != matrix_.cols()) {
    throw std::invalid_argument("HermitianOperator: matrix must be square with dim >= 1");
  }
  if (tol_ < 0.0) {
    throw std::invalid_argument("HermitianOperator: hermiticity_tol must be nonnegative");
  }
  if (!is_finite(matrix_)) {
    throw std::invalid_argument("HermitianOperator: matrix has non-finite entries");
  }
  const double scale = max_entry_norm(matrix_);
  const double defect = max_entry_norm(matrix_ - matrix_.adjoint());
  if (defect > tol_ * scale) {
    std::ostringstream os;
    os << "HermitianOperator: rejected non-Hermitian input, ||M - M^H||_max = " << defect
       << " exceeds " << tol_ << " * ||M||_max = " << tol_ * scale;
    throw hermiticity_error(os.str());
  }
}

UnitaryOperator::UnitaryOperator(ComplexMatrix m) : matrix_(std::move(m)) {
  if (matrix_.rows() < 1 || matrix_.rows() != matrix_.cols()) {
    throw std::invalid_argument("UnitaryOperator: matrix must be square with dim >= 1");
  }
  if (!is_finite(matrix_)) {
    throw std::invalid_argument("UnitaryOperator: matrix has non-finite entries");
  }
  const ComplexMatrix defect =
      matrix_.adjoint() * matrix_ - ComplexMatrix::Identity(matrix_.rows(), matrix_.cols());
  const double dev = max_entry_norm(defect);
  if (dev > kUnitarityTol) {
    std::ostringstream os;
    os << "UnitaryOperator: ||U^H U - I||_max = " << dev << " exceeds " << kUnitarityTol;
    throw std::invalid_argument(os.str());
  }
}

OperatorFunction::OperatorFunction(Eigen::Index dim, double t_max, Evaluator evaluator)
    : dim_(dim), t_max_(t_max), eval_(std::move(evaluator)) {
  if (dim_ < 1) throw std::invalid_argument("OperatorFunction: dim must be >= 1");
  if (!(t_max_ > 0.0)) throw std::invalid_argument("OperatorFunction: t_max must be positive");
  if (!eval_) throw std::invalid_argument("OperatorFunction: empty evaluator");
  const ComplexMatrix at_zero = eval_(0.0);
  if (at_zero.rows() != dim_ || at_zero.cols() != dim_) {
    throw std::invalid_argument("OperatorFunction: evaluator dimension mismatch");
  }
  const double dev =
      max_entry_norm(at_zero - ComplexMatrix::Identity(dim_, dim_));
  if (dev > 1e-12) {
    std::ostringstream os;
    os << "OperatorFunction: F(0) differs from identity by " << dev << " (> 1e-12)";
    throw std::invalid_argument(os.str());
  }
}

ComplexMatrix OperatorFunction::operator()(double t) const {
  if (!(t >= 0.0) || t > t_max_) {
    std::ostringstream os;
    os << "OperatorFunction: t = " << t << " outside domain [0, " << t_max_ << "]";
    throw std::domain_error(os.str());
  }
  return eval_(t);
}

namespace {

struct EigenSystem {
  Eigen::VectorXd values;
  ComplexMatrix vectors;
};

EigenSystem decompose(const HermitianOperator& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h.matrix());
  if (solver.info() != Eigen::Success) {
    std::ostringstream os;
    os << "eigendecomposition failed to converge for dim " << h.dim()
       << " matrix, ||H||_max = " << max_entry_norm(h.matrix());
    throw eigensolver_error(os.str());
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix phase_reconstruct(const EigenSystem& es, double t) {
  const Eigen::Index n = es.values.size();
  Eigen::VectorXcd phases(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    phases[k] = std::exp(Complex(0.0, t * es.values[k]));
  }
  return (es.vectors * phases.asDiagonal()) * es.vectors.adjoint();
}

}  // namespace

UnitaryOperator expm_hermitian(const HermitianOperator& h, double t) {
  return UnitaryOperator(phase_reconstruct(decompose(h), t));
}

OperatorFunction hamiltonian_semigroup(const HermitianOperator& h) {
  auto es = std::make_shared<EigenSystem>(decompose(h));
  return OperatorFunction(
      h.dim(), std::numeric_limits<double>::infinity(),
      [es](double t) { return phase_reconstruct(*es, t); });
}

ComplexMatrix operator_power(const ComplexMatrix& a, long n) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("operator_power: matrix must be square");
  }
  if (n < 1) throw std::invalid_argument("operator_power: n must be >= 1");
  ComplexMatrix base = a;
  ComplexMatrix result = ComplexMatrix::Identity(a.rows(), a.cols());
  long m = n;
  while (m > 0) {
    if (m & 1) result = result * base;
    m >>= 1;
    if (m > 0) base = base * base;
  }
  if (!is_finite(result)) {
    throw nonfinite_error("operator_power: result has non-finite entries");
  }
  return result;
}

double seminorm_rho(const OperatorFunction& f, const StateVector& u, double T,
                    int grid_points) {
  if (!(T > 0.0)) throw std::invalid_argument("seminorm_rho: T must be positive");
  if (grid_points < 2) throw std::invalid_argument("seminorm_rho: grid_points must be >= 2");
  if (u.size() != f.dim()) throw std::invalid_argument("seminorm_rho: vector dimension mismatch");
  if (T > f.t_max()) throw std::domain_error("seminorm_rho: T exceeds the domain of F");
  double sup = 0.0;
  for (int k = 0; k < grid_points; ++k) {
    const double t = T * static_cast<double>(k) / static_cast<double>(grid_points - 1);
    ComplexMatrix ft;
    try {
      ft = f(t);
    } catch (const std::exception& e) {
      std::ostringstream os;
      os << "seminorm_rho: evaluation failed at t = " << t << ": " << e.what();
      throw std::runtime_error(os.str());
    }
    sup = std::max(sup, (ft * u).norm());
  }
  return sup;
}

}  // namespace semilab
