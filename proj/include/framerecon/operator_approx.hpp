#pragma once

#include <vector>

#include "framerecon/frame_core.hpp"
#include "framerecon/numerics.hpp"
#include "framerecon/patterns.hpp"
#include "framerecon/types.hpp"

namespace framerecon::operator_approx {

/// Per-axis index bounds (n1, n2) or (m1, m2).
struct Size2 {
  int v1 = 1;
  int v2 = 1;

  friend bool operator==(const Size2&, const Size2&) = default;
};

/// Truncation record: reconstruction bounds n, data bounds m, and the
/// constants the choice was based on. m >= n componentwise, always.
struct TruncationPlan {
  Size2 n;
  Size2 m;
  double A_mn = 0.0;
  double B_mn = 0.0;
  double lambda_min_used = 0.0;
  frame_core::FrameBounds bounds_used;
};

/// Finite-section truncation constant of the sampling-frame pipeline:
///   2 s gamma^2 / ((s-1)^2 lambda_min) * n1 n2 *
///     [ (m1-n1)^-(s-1) + (m2-n2)^-(s-1) ].
double constant_A_mn(Size2 n, Size2 m, double gamma, double s, double lambda_min);

/// Data bound such that constant_A_mn(n, m, ...) <= A/2 (ceiling makes the
/// exact equality an inequality): m_i = n_i + ceil(8 s gamma^2 n1 n2 /
/// (A (s-1)^2 lambda_min)).
Size2 choose_m_cc(Size2 n, double gamma, double s, double A, double lambda_min);

/// Admissible-pipeline truncation constant:
///   4 s gamma1^2 / ((2s-1)^2 lambda_min_phi) * n1 n2 *
///     [ (m1-n1)^-(2s-1) + (m2-n2)^-(2s-1) ].
double constant_B_mn(Size2 n, Size2 m, double gamma1, double s, double lambda_min_phi);

/// Data bound meeting the admissible-pipeline target
///   B_mn <= A/2 (n1^-(t-1)/2 + n2^-(t-1)/2):
/// m_j = n_j + ceil(E * n_j^((t-1)/(2(2s-1)))) with
/// E = (8 s gamma1^2 n1 n2 / (A (2s-1)^2 lambda_min))^(1/(2s-1)).
/// Pass (gamma1, lambda_min of the reconstruction Gram) for the
/// internally-consistent variant the plug-back identity needs, or
/// (gamma, lambda_min of the sampling Gram) for the verbatim variant.
Size2 choose_m_af(Size2 n, double t, double s, double gamma1, double A, double lambda_min);

/// Same forward map with the scalar prefactor supplied directly:
/// E = (scale * n1 * n2)^(1/(2s-1)), scale = 8 s gamma1^2 / (A (2s-1)^2
/// lambda_min). This is the form the table harness bisects.
Size2 choose_m_af_scaled(Size2 n, double t, double s, double scale);

/// Node ids (into pattern order) forming the data block of size m1*m2:
/// grid-like kinds take the centered m-box; curve patterns take the m1*m2
/// lowest-frequency nodes (sorted by |lambda|, original order as tie-break).
std::vector<int> select_block(const patterns::SamplingPattern& pattern, Size2 size);

struct OperatorMatrices {
  Eigen::MatrixXcd V;          // CC operator on psi-coefficients of the n-block
  Eigen::MatrixXcd W;          // AF frame operator omega^* omega on phi-coefficients
  numerics::RectMatrix omega;  // cross Gram, m-block rows x n-grid columns
  Eigen::VectorXd omega_singular_values;
  std::vector<int> m_node_ids;             // psi data block
  std::vector<int> n_node_ids;             // psi basis of H_n (CC only)
  std::vector<GridIndex> n_grid_indices;   // phi basis map (AF only)
  bool psi_gram_singular = false;
};

/// V = PsiN^-1 * PsiNM * PsiMN on the psi-coefficients of the n-block,
/// where PsiMN[k,l] = <psi_l, psi_k> maps H_n coefficients to data and
/// PsiNM = PsiMN^*. A numerically singular PsiN is flagged and handled by
/// the thresholded solve.
OperatorMatrices build_cc_operator(const patterns::SamplingPattern& pattern, Size2 n, Size2 m,
                                   double rel_tol = numerics::kDefaultRelTol);

/// W = omega^* omega over the m-block rows; the direct object for the
/// frame-operator identity checks. The production path is af_reconstruct.
OperatorMatrices build_af_operator(const patterns::SamplingPattern& pattern, Size2 n, Size2 m);

struct CcResult {
  bool singular_operator = false;  // rendered as NaN downstream
  CoefficientVector coefficients;  // psi-basis, n-block order (empty when singular)
  std::vector<int> n_node_ids;
  bool psi_gram_singular = false;
  double psi_condition = 0.0;
  double v_condition = 0.0;
  double psi_lambda_min = 0.0;
};

/// d = V^-1 PsiN^-1 PsiNM data: the psi-coefficients of the C-C
/// reconstruction from the first m-block of the data vector (pattern order).
CcResult cc_reconstruct(const CoefficientVector& data, const patterns::SamplingPattern& pattern,
                        Size2 n, Size2 m, double rel_tol = numerics::kDefaultRelTol);

struct AfResult {
  CoefficientVector coefficients;  // phi/2-basis, row-major over the n-grid
  IndexRange2 grid;
  bool rank_deficient = false;
  int effective_rank = 0;
  double condition = 0.0;
  double sigma_max = 0.0;
};

/// c = pinv(omega) * data over the full pattern. Rank deficiency degrades
/// gracefully instead of failing.
AfResult af_reconstruct(const CoefficientVector& data, const patterns::SamplingPattern& pattern,
                        Size2 n, double rel_tol = numerics::kDefaultRelTol);

}  // namespace framerecon::operator_approx
