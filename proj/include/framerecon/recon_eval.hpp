#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "framerecon/kernels.hpp"
#include "framerecon/operator_approx.hpp"
#include "framerecon/patterns.hpp"
#include "framerecon/types.hpp"

namespace framerecon::recon_eval {

/// Uniform evaluation grid on [-1,1]^2, endpoints included.
struct EvalGrid {
  int count1 = 128;
  int count2 = 128;

  EvalGrid() = default;
  EvalGrid(int c1, int c2);

  std::vector<double> axis1() const;
  std::vector<double> axis2() const;
};

/// Expansion basis for evaluate(): either the orthonormalized integer-grid
/// basis phi_l/2 (row-major over the grid) or sampling atoms at explicit
/// nodes.
struct Basis {
  enum class Kind { PhiGrid, PsiAtoms };
  Kind kind = Kind::PhiGrid;
  IndexRange2 grid;           // PhiGrid
  std::vector<Node2> atoms;   // PsiAtoms

  static Basis phi(const IndexRange2& g) { return {Kind::PhiGrid, g, {}}; }
  static Basis psi(std::vector<Node2> nodes) { return {Kind::PsiAtoms, {}, std::move(nodes)}; }
  int count() const;
};

/// Pointwise sum of c_l * atom_l(x) over the evaluation grid; row p is
/// x1 = axis1[p], column q is x2 = axis2[q].
Eigen::MatrixXcd evaluate(const CoefficientVector& coeffs, const Basis& basis,
                          const EvalGrid& grid);

/// Mean over grid points of |recon - truth|^2 (full complex deviation).
double mse(const Eigen::MatrixXcd& recon, const kernels::TestFunction& truth,
           const EvalGrid& grid);

struct CrossSectionRow {
  double coordinate;
  Complex recon;
  double truth;
};

/// Grid line nearest the requested coordinate on the fixed axis (1 or 2);
/// the returned coordinate column runs along the other axis.
std::vector<CrossSectionRow> cross_section(const Eigen::MatrixXcd& recon,
                                           const kernels::TestFunction& truth,
                                           const EvalGrid& grid, int fixed_axis, double value);
std::string cross_section_to_csv(const std::vector<CrossSectionRow>& rows);

/// Constant profile for inverting the data-size map M -> N. The rates are
/// the sinc cross-decay (s = 1) and the minimal admissible localization
/// (t = 3); the scale is calibrated once so the resulting ladder matches
/// the reference behaviour at M = 8^2..64^2 (see README).
struct MChoiceProfile {
  double s = 1.0;
  double t = 3.0;
  double scale = 3.0 / 512.0;
};

/// Largest per-axis n whose forward m-choice stays within the per-axis data
/// count; integer bisection on the monotone forward map.
int choose_n_for_data(int m_per_axis, const MChoiceProfile& profile = {});

enum class Method { AF, CC };
const char* method_name(Method m);

struct ReconstructionResult {
  Method method = Method::AF;
  CoefficientVector coefficients;
  Basis basis;
  Eigen::MatrixXcd grid_values;
  double mse_value = 0.0;  // NaN sentinel when singular
  bool singular = false;
  bool rank_deficient = false;
  operator_approx::Size2 n;
  operator_approx::Size2 m;
  double lambda_min_psi = 0.0;
  double condition = 0.0;  // omega condition (AF) or V condition (CC)
  double psi_condition = 0.0;
  int effective_rank = 0;
  double wall_seconds = 0.0;
};

/// One table cell: frame data -> reconstruction -> grid evaluation -> MSE.
ReconstructionResult reconstruct_cell(const kernels::TestFunction& f,
                                      const patterns::SamplingPattern& pattern, Method method,
                                      operator_approx::Size2 n, operator_approx::Size2 m,
                                      double rel_tol, const EvalGrid& grid);

struct TableOptions {
  kernels::TestFunction example = kernels::TestFunction::f1();
  std::vector<patterns::PatternKind> kinds = {
      patterns::PatternKind::Jittered, patterns::PatternKind::Rosette,
      patterns::PatternKind::Spiral, patterns::PatternKind::Polar};
  std::vector<int> m_values = {8, 16, 32, 64};  // per-axis; M = m^2
  std::uint64_t seed = 42;
  double jitter_bound = 0.25;
  double rel_tol = numerics::kDefaultRelTol;
  EvalGrid grid;
  MChoiceProfile profile;
};

struct TableCell {
  patterns::PatternKind kind;
  int m_per_axis = 0;
  int n_per_axis = 0;
  Method method = Method::AF;
  double mse_value = 0.0;  // NaN when singular
  bool singular = false;
  bool rank_deficient = false;
};

struct TableResult {
  kernels::TestFunction example;
  std::vector<TableCell> cells;  // fixed (kind, M, method) order
};

/// The full harness: per (pattern, M) generate the pattern, take frame
/// data, choose n, run both methods. Cell failures become NaN cells, never
/// aborts. Cells are independent jobs; output order is fixed regardless of
/// the worker pool.
TableResult run_table(const TableOptions& options);

std::string table_to_csv(const TableResult& table);
std::string table_to_text(const TableResult& table);

}  // namespace framerecon::recon_eval
