#include "framerecon/numerics.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace framerecon::numerics {

HermitianMatrix::HermitianMatrix(const Eigen::MatrixXcd& entries) {
  if (entries.rows() != entries.cols() || entries.rows() < 1)
    throw std::invalid_argument("HermitianMatrix: square nonempty matrix required");
  const double scale = entries.cwiseAbs().maxCoeff();
  const double asym = (entries - entries.adjoint()).cwiseAbs().maxCoeff();
  if (scale > 0.0 && asym > 1e-13 * scale * 2.0)
    throw std::invalid_argument("HermitianMatrix: input exceeds 1e-13 relative asymmetry");
  mat_ = 0.5 * (entries + entries.adjoint());
}

namespace {
Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eigensolve(const HermitianMatrix& m, bool vectors) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver;
  solver.compute(m.matrix(), vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw NumericalFailure("Hermitian eigensolver failed to converge (dim=" +
                           std::to_string(m.dimension()) + ")");
  return solver;
}
}  // namespace

double min_eigenvalue(const HermitianMatrix& m) {
  return eigensolve(m, false).eigenvalues().minCoeff();
}

double max_eigenvalue(const HermitianMatrix& m) {
  return eigensolve(m, false).eigenvalues().maxCoeff();
}

PseudoInverseResult pseudo_inverse_apply(const RectMatrix& m, const CoefficientVector& rhs,
                                         double rel_tol) {
  if (rhs.size() != m.rows())
    throw std::invalid_argument("pseudo_inverse_apply: rhs length must equal row count");
  if (rel_tol < 0.0) throw std::invalid_argument("pseudo_inverse_apply: rel_tol must be >= 0");

  Eigen::BDCSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (svd.info() != Eigen::Success)
    throw NumericalFailure("SVD failed to converge (" + std::to_string(m.rows()) + "x" +
                           std::to_string(m.cols()) + ")");

  const auto& sigma = svd.singularValues();
  PseudoInverseResult out;
  out.sigma_max = sigma.size() > 0 ? sigma(0) : 0.0;
  const double cut = rel_tol * out.sigma_max;

  Eigen::VectorXcd projected = svd.matrixU().adjoint() * rhs;
  double sigma_min_kept = 0.0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > cut && sigma(i) > 0.0) {
      projected(i) /= sigma(i);
      sigma_min_kept = sigma(i);
      ++out.effective_rank;
    } else {
      projected(i) = Complex(0.0, 0.0);
    }
  }
  out.rank_deficient = out.effective_rank < std::min(m.rows(), m.cols());
  out.condition = (out.effective_rank > 0) ? out.sigma_max / sigma_min_kept
                                           : std::numeric_limits<double>::infinity();
  out.solution = svd.matrixV() * projected;
  return out;
}

HermitianSolveResult solve_hermitian(const HermitianMatrix& m, const CoefficientVector& rhs,
                                     double rel_tol) {
  if (rhs.size() != m.dimension())
    throw std::invalid_argument("solve_hermitian: rhs length must equal dimension");
  const HermitianSolveMatrixResult r = solve_hermitian(m, Eigen::MatrixXcd(rhs), rel_tol);
  return {r.solution.col(0), r.was_singular, r.effective_rank, r.condition, r.lambda_min,
          r.lambda_max};
}

HermitianSolveMatrixResult solve_hermitian(const HermitianMatrix& m, const Eigen::MatrixXcd& rhs,
                                           double rel_tol) {
  if (rhs.rows() != m.dimension())
    throw std::invalid_argument("solve_hermitian: rhs rows must equal dimension");

  const auto solver = eigensolve(m, true);
  const auto& evals = solver.eigenvalues();

  HermitianSolveMatrixResult out;
  out.lambda_min = evals.minCoeff();
  out.lambda_max = evals.maxCoeff();
  const double scale = evals.cwiseAbs().maxCoeff();
  const double cut = rel_tol * scale;

  Eigen::MatrixXcd projected = solver.eigenvectors().adjoint() * rhs;
  double min_kept = 0.0;
  for (Eigen::Index i = 0; i < evals.size(); ++i) {
    if (std::abs(evals(i)) > cut) {
      projected.row(i) /= evals(i);
      min_kept = (min_kept == 0.0) ? std::abs(evals(i)) : std::min(min_kept, std::abs(evals(i)));
      ++out.effective_rank;
    } else {
      projected.row(i).setZero();
      out.was_singular = true;
    }
  }
  out.condition = (out.effective_rank > 0) ? scale / min_kept
                                           : std::numeric_limits<double>::infinity();
  out.solution = solver.eigenvectors() * projected;
  return out;
}

}  // namespace framerecon::numerics
