#pragma once

#include <optional>
#include <string>
#include <vector>

#include "framerecon/kernels.hpp"
#include "framerecon/numerics.hpp"
#include "framerecon/patterns.hpp"
#include "framerecon/types.hpp"

namespace framerecon::frame_core {

/// Localization parameters of a frame family: |<a_j, a_l>| <= gamma *
/// (1 + ||j-l||)^(-rate). Fitted empirically on finite sections.
struct LocalizationFit {
  double gamma_hat = 0.0;
  double rate_hat = 0.0;  // +inf sentinel when all off-diagonal mass vanishes
  bool satisfied = false;
};

enum class BoundsMethod { FiniteSection, KadecAnalytic };

struct FrameBounds {
  double A = 0.0;
  double B = 0.0;
  BoundsMethod method = BoundsMethod::FiniteSection;
  bool ill_posed = false;
  /// Analytic 1D Kadec pair, reported for jittered patterns with bound <= 1/4.
  std::optional<std::pair<double, double>> kadec_1d;
};

/// Gram of the sampling atoms: entry (j,l) = <psi_j, psi_l>.
numerics::HermitianMatrix assemble_sampling_gram(const patterns::SamplingPattern& pattern);

/// Same, restricted to a subset of pattern nodes (by index into the pattern).
numerics::HermitianMatrix assemble_sampling_gram(const patterns::SamplingPattern& pattern,
                                                 const std::vector<int>& node_ids);

/// Cross Gram against the orthonormalized reconstruction basis phi_l / 2:
/// entry (j,l) = 2 sinc(lambda_j1 - l1) sinc(lambda_j2 - l2). Rows follow
/// pattern order, columns are row-major over the grid.
numerics::RectMatrix assemble_cross_gram(const patterns::SamplingPattern& pattern,
                                         const IndexRange2& grid);
numerics::RectMatrix assemble_cross_gram(const patterns::SamplingPattern& pattern,
                                         const std::vector<int>& node_ids,
                                         const IndexRange2& grid);

/// Exact frame bounds of the pattern atoms restricted to the span of the
/// probe-grid basis: A = lambda_min(F*F), B = lambda_max(F*F) for
/// F[j,l] = <phi_l/2, psi_j>. Finite-section surrogate for the frame
/// constants; flagged ill_posed when A collapses.
FrameBounds estimate_frame_bounds(const patterns::SamplingPattern& pattern,
                                  const IndexRange2& probe_grid);

/// gamma_hat = max |G_jl| (1 + ||j-l||)^exponent plus a log-log shell
/// regression for the empirical decay rate.
LocalizationFit verify_localization(const numerics::HermitianMatrix& gram,
                                    const std::vector<GridIndex>& index_map, double exponent);

struct SmoothnessFit {
  double c0_hat = 0.0;
};

/// c0_hat = max |coeff_j| * ||j||^s over nonzero indices.
SmoothnessFit verify_smoothness_decay(const CoefficientVector& coeffs,
                                      const std::vector<GridIndex>& index_map, double s);

/// Gram export for external inspection: rows of re,im pairs.
std::string gram_to_csv(const Eigen::MatrixXcd& m);

}  // namespace framerecon::frame_core
