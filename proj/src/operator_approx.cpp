#include "framerecon/operator_approx.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include <Eigen/SVD>

namespace framerecon::operator_approx {

namespace {
void check_mchoice_inputs(Size2 n, double lambda_min) {
  if (n.v1 < 1 || n.v2 < 1) throw std::invalid_argument("n components must be >= 1");
  if (lambda_min <= 0.0) throw std::invalid_argument("singular Gram: lambda_min must be > 0");
}

int ceil_increment(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite truncation increment");
  return std::max(1, static_cast<int>(std::ceil(x)));
}

// Cross-Gram block between two node subsets: entry (k,l) = <psi_l, psi_k>.
Eigen::MatrixXcd psi_block(const patterns::SamplingPattern& pattern, const std::vector<int>& rows,
                           const std::vector<int>& cols) {
  Eigen::MatrixXcd out(static_cast<Eigen::Index>(rows.size()),
                       static_cast<Eigen::Index>(cols.size()));
  for (size_t k = 0; k < rows.size(); ++k) {
    const kernels::AtomSpec row_atom{pattern.nodes[static_cast<size_t>(rows[k])]};
    for (size_t l = 0; l < cols.size(); ++l) {
      const kernels::AtomSpec col_atom{pattern.nodes[static_cast<size_t>(cols[l])]};
      out(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l)) =
          kernels::atom_inner_product(col_atom, row_atom);
    }
  }
  return out;
}
}  // namespace

double constant_A_mn(Size2 n, Size2 m, double gamma, double s, double lambda_min) {
  check_mchoice_inputs(n, lambda_min);
  if (s <= 2.0) throw std::invalid_argument("constant_A_mn: localized regime requires s > 2");
  if (m.v1 <= n.v1 || m.v2 <= n.v2)
    throw std::invalid_argument("constant_A_mn: m must exceed n componentwise");
  const double lead = 2.0 * s * gamma * gamma /
                      ((s - 1.0) * (s - 1.0) * lambda_min) * n.v1 * n.v2;
  return lead * (std::pow(double(m.v1 - n.v1), -(s - 1.0)) +
                 std::pow(double(m.v2 - n.v2), -(s - 1.0)));
}

Size2 choose_m_cc(Size2 n, double gamma, double s, double A, double lambda_min) {
  check_mchoice_inputs(n, lambda_min);
  if (s <= 2.0) throw std::invalid_argument("choose_m_cc: localized regime requires s > 2");
  if (A <= 0.0) throw std::invalid_argument("choose_m_cc: A must be > 0");
  const double inc = 8.0 * s * gamma * gamma * n.v1 * n.v2 /
                     (A * (s - 1.0) * (s - 1.0) * lambda_min);
  const int d = ceil_increment(inc);
  return {n.v1 + d, n.v2 + d};
}

double constant_B_mn(Size2 n, Size2 m, double gamma1, double s, double lambda_min_phi) {
  check_mchoice_inputs(n, lambda_min_phi);
  if (s <= 0.5) throw std::invalid_argument("constant_B_mn: requires s > 1/2");
  if (m.v1 <= n.v1 || m.v2 <= n.v2)
    throw std::invalid_argument("constant_B_mn: m must exceed n componentwise");
  const double two_s1 = 2.0 * s - 1.0;
  const double lead = 4.0 * s * gamma1 * gamma1 / (two_s1 * two_s1 * lambda_min_phi) * n.v1 * n.v2;
  return lead * (std::pow(double(m.v1 - n.v1), -two_s1) + std::pow(double(m.v2 - n.v2), -two_s1));
}

Size2 choose_m_af(Size2 n, double t, double s, double gamma1, double A, double lambda_min) {
  check_mchoice_inputs(n, lambda_min);
  if (A <= 0.0) throw std::invalid_argument("choose_m_af: A must be > 0");
  const double two_s1 = 2.0 * s - 1.0;
  return choose_m_af_scaled(n, t, s,
                            8.0 * s * gamma1 * gamma1 / (A * two_s1 * two_s1 * lambda_min));
}

Size2 choose_m_af_scaled(Size2 n, double t, double s, double scale) {
  if (n.v1 < 1 || n.v2 < 1) throw std::invalid_argument("n components must be >= 1");
  if (s <= 0.5) throw std::invalid_argument("choose_m_af: requires s > 1/2");
  if (t <= 2.0) throw std::invalid_argument("choose_m_af: admissible regime requires t > 2");
  if (scale <= 0.0) throw std::invalid_argument("choose_m_af: scale must be > 0");
  const double two_s1 = 2.0 * s - 1.0;
  const double e = std::pow(scale * n.v1 * n.v2, 1.0 / two_s1);
  const double axis_exp = (t - 1.0) / (2.0 * two_s1);
  return {n.v1 + ceil_increment(e * std::pow(double(n.v1), axis_exp)),
          n.v2 + ceil_increment(e * std::pow(double(n.v2), axis_exp))};
}

std::vector<int> select_block(const patterns::SamplingPattern& pattern, Size2 size) {
  const int want = size.v1 * size.v2;
  if (want > pattern.size())
    throw std::invalid_argument("select_block: pattern has fewer nodes than requested block");

  const bool grid_like = !pattern.grid_indices.empty();
  if (grid_like) {
    const IndexRange2 box = centered_range(size.v1, size.v2);
    std::vector<int> ids;
    ids.reserve(static_cast<size_t>(want));
    for (int i = 0; i < pattern.size(); ++i) {
      const GridIndex g = pattern.grid_indices[static_cast<size_t>(i)];
      if (g.j1 >= box.lo1 && g.j1 < box.hi1 && g.j2 >= box.lo2 && g.j2 < box.hi2)
        ids.push_back(i);
    }
    if (static_cast<int>(ids.size()) != want)
      throw std::invalid_argument("select_block: centered box not covered by the pattern grid");
    return ids;
  }

  // Curve patterns have no rectangular index structure; take the block in
  // low-frequency-first order with the original index as tie-break.
  std::vector<int> ids(static_cast<size_t>(pattern.size()));
  std::iota(ids.begin(), ids.end(), 0);
  std::stable_sort(ids.begin(), ids.end(), [&](int a, int b) {
    const Node2& na = pattern.nodes[static_cast<size_t>(a)];
    const Node2& nb = pattern.nodes[static_cast<size_t>(b)];
    const double ra = std::hypot(na.lambda1, na.lambda2);
    const double rb = std::hypot(nb.lambda1, nb.lambda2);
    if (ra != rb) return ra < rb;
    return a < b;
  });
  ids.resize(static_cast<size_t>(want));
  return ids;
}

OperatorMatrices build_cc_operator(const patterns::SamplingPattern& pattern, Size2 n, Size2 m,
                                   double rel_tol) {
  if (m.v1 < n.v1 || m.v2 < n.v2)
    throw std::invalid_argument("build_cc_operator: m must dominate n componentwise");
  OperatorMatrices out;
  out.m_node_ids = select_block(pattern, m);
  out.n_node_ids = select_block(pattern, n);

  const auto psi_n = frame_core::assemble_sampling_gram(pattern, out.n_node_ids);
  const Eigen::MatrixXcd psi_mn = psi_block(pattern, out.m_node_ids, out.n_node_ids);
  const Eigen::MatrixXcd gram_m = psi_mn.adjoint() * psi_mn;  // Psi_nm * Psi_mn

  const auto solve = numerics::solve_hermitian(psi_n, gram_m, rel_tol);
  out.V = solve.solution;
  out.psi_gram_singular = solve.was_singular;
  return out;
}

OperatorMatrices build_af_operator(const patterns::SamplingPattern& pattern, Size2 n, Size2 m) {
  if (m.v1 < n.v1 || m.v2 < n.v2)
    throw std::invalid_argument("build_af_operator: m must dominate n componentwise");
  OperatorMatrices out;
  out.m_node_ids = select_block(pattern, m);
  const IndexRange2 grid = centered_range(n.v1, n.v2);
  out.n_grid_indices = grid.indices();
  out.omega = frame_core::assemble_cross_gram(pattern, out.m_node_ids, grid);
  out.W = out.omega.adjoint() * out.omega;
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(out.omega);
  if (svd.info() != Eigen::Success) throw NumericalFailure("build_af_operator: SVD failed");
  out.omega_singular_values = svd.singularValues();
  return out;
}

CcResult cc_reconstruct(const CoefficientVector& data, const patterns::SamplingPattern& pattern,
                        Size2 n, Size2 m, double rel_tol) {
  if (data.size() < static_cast<Eigen::Index>(m.v1) * m.v2)
    throw std::invalid_argument("cc_reconstruct: data shorter than the m-block");

  CcResult out;
  out.n_node_ids = select_block(pattern, n);
  const std::vector<int> m_ids = select_block(pattern, m);

  CoefficientVector data_m(static_cast<Eigen::Index>(m_ids.size()));
  for (size_t k = 0; k < m_ids.size(); ++k)
    data_m(static_cast<Eigen::Index>(k)) = data(m_ids[k]);

  const auto psi_n = frame_core::assemble_sampling_gram(pattern, out.n_node_ids);
  const Eigen::MatrixXcd psi_mn = psi_block(pattern, m_ids, out.n_node_ids);

  // P_n S_m f in psi-coefficients, then V, both through the same
  // thresholded inverse of Psi_n.
  Eigen::MatrixXcd rhs(psi_mn.cols(), psi_mn.cols() + 1);
  rhs.leftCols(psi_mn.cols()) = psi_mn.adjoint() * psi_mn;
  rhs.col(psi_mn.cols()) = psi_mn.adjoint() * data_m;
  const auto solve = numerics::solve_hermitian(psi_n, rhs, rel_tol);
  out.psi_gram_singular = solve.was_singular;
  out.psi_condition = solve.condition;
  out.psi_lambda_min = solve.lambda_min;

  const Eigen::MatrixXcd v = solve.solution.leftCols(psi_mn.cols());
  const CoefficientVector projected = solve.solution.col(psi_mn.cols());

  const auto v_solve = numerics::pseudo_inverse_apply(v, projected, rel_tol);
  out.v_condition = v_solve.condition;
  if (solve.was_singular || v_solve.rank_deficient) {
    out.singular_operator = true;  // reported as the NaN sentinel in tables
    return out;
  }
  out.coefficients = v_solve.solution;
  return out;
}

AfResult af_reconstruct(const CoefficientVector& data, const patterns::SamplingPattern& pattern,
                        Size2 n, double rel_tol) {
  if (data.size() != pattern.size())
    throw std::invalid_argument("af_reconstruct: data length must equal pattern node count");
  AfResult out;
  out.grid = centered_range(n.v1, n.v2);
  const numerics::RectMatrix omega = frame_core::assemble_cross_gram(pattern, out.grid);
  const auto pinv = numerics::pseudo_inverse_apply(omega, data, rel_tol);
  out.coefficients = pinv.solution;
  out.rank_deficient = pinv.rank_deficient;
  out.effective_rank = pinv.effective_rank;
  out.condition = pinv.condition;
  out.sigma_max = pinv.sigma_max;
  return out;
}

}  // namespace framerecon::operator_approx
