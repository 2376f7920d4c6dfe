#pragma once

#include <Eigen/Dense>

#include "framerecon/types.hpp"

namespace framerecon::numerics {

using RectMatrix = Eigen::MatrixXcd;

/// Default relative tolerance wherever a caller does not supply one.
/// Polar/spiral Grams are exactly the singular cases; a documented cutoff
/// turns silent NaN propagation into flagged rank deficiency.
inline constexpr double kDefaultRelTol = 1e-11;

/// Dense Hermitian matrix, symmetrized on construction; rejects inputs that
/// are not Hermitian to within 1e-13 relative.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(const Eigen::MatrixXcd& entries);

  int dimension() const { return static_cast<int>(mat_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return mat_; }

 private:
  Eigen::MatrixXcd mat_;
};

/// Smallest eigenvalue of the symmetrized matrix. May be <= 0 for
/// numerically singular Grams.
double min_eigenvalue(const HermitianMatrix& m);
double max_eigenvalue(const HermitianMatrix& m);

struct PseudoInverseResult {
  CoefficientVector solution;
  int effective_rank = 0;
  double condition = 0.0;  // of the retained singular block
  double sigma_max = 0.0;
  bool rank_deficient = false;
};

/// Moore-Penrose application via SVD: singular values below
/// rel_tol * sigma_max are dropped.
PseudoInverseResult pseudo_inverse_apply(const RectMatrix& m, const CoefficientVector& rhs,
                                         double rel_tol = kDefaultRelTol);

struct HermitianSolveResult {
  CoefficientVector solution;
  bool was_singular = false;  // some eigenvalue fell below rel_tol * lambda_max
  int effective_rank = 0;
  double condition = 0.0;
  double lambda_min = 0.0;
  double lambda_max = 0.0;
};

/// Minimum-norm least-squares solve through eigendecomposition with
/// eigenvalue thresholding at rel_tol * max|lambda|.
HermitianSolveResult solve_hermitian(const HermitianMatrix& m, const CoefficientVector& rhs,
                                     double rel_tol = kDefaultRelTol);

struct HermitianSolveMatrixResult {
  Eigen::MatrixXcd solution;
  bool was_singular = false;
  int effective_rank = 0;
  double condition = 0.0;
  double lambda_min = 0.0;
  double lambda_max = 0.0;
};

/// Same thresholded solve applied to every column of a matrix right-hand
/// side, reusing one eigendecomposition.
HermitianSolveMatrixResult solve_hermitian(const HermitianMatrix& m, const Eigen::MatrixXcd& rhs,
                                           double rel_tol = kDefaultRelTol);

}  // namespace framerecon::numerics
