#include "framerecon/recon_eval.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "framerecon/io.hpp"
#include "framerecon/threading.hpp"

namespace framerecon::recon_eval {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<double> uniform_axis(int count) {
  std::vector<double> xs(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i)
    xs[static_cast<size_t>(i)] = -1.0 + 2.0 * i / (count - 1);
  return xs;
}

// E[p, k] = exp(-i pi freq_k * x_p)
Eigen::MatrixXcd phase_table(const std::vector<double>& xs, const std::vector<double>& freqs) {
  Eigen::MatrixXcd e(static_cast<Eigen::Index>(xs.size()), static_cast<Eigen::Index>(freqs.size()));
  for (size_t p = 0; p < xs.size(); ++p)
    for (size_t k = 0; k < freqs.size(); ++k) {
      const double phase = -kPi * freqs[k] * xs[p];
      e(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(k)) =
          Complex(std::cos(phase), std::sin(phase));
    }
  return e;
}
}  // namespace

EvalGrid::EvalGrid(int c1, int c2) : count1(c1), count2(c2) {
  if (c1 < 2 || c2 < 2) throw std::invalid_argument("EvalGrid: counts must be >= 2");
}

std::vector<double> EvalGrid::axis1() const { return uniform_axis(count1); }
std::vector<double> EvalGrid::axis2() const { return uniform_axis(count2); }

int Basis::count() const {
  return kind == Kind::PhiGrid ? grid.count() : static_cast<int>(atoms.size());
}

Eigen::MatrixXcd evaluate(const CoefficientVector& coeffs, const Basis& basis,
                          const EvalGrid& grid) {
  if (coeffs.size() != basis.count())
    throw std::invalid_argument("evaluate: coefficient count must match basis count");
  const auto xs = grid.axis1();
  const auto ys = grid.axis2();

  if (basis.kind == Basis::Kind::PhiGrid) {
    std::vector<double> f1(static_cast<size_t>(basis.grid.count1()));
    std::vector<double> f2(static_cast<size_t>(basis.grid.count2()));
    for (int a = 0; a < basis.grid.count1(); ++a) f1[static_cast<size_t>(a)] = basis.grid.lo1 + a;
    for (int b = 0; b < basis.grid.count2(); ++b) f2[static_cast<size_t>(b)] = basis.grid.lo2 + b;
    Eigen::MatrixXcd c(static_cast<Eigen::Index>(f1.size()), static_cast<Eigen::Index>(f2.size()));
    for (Eigen::Index a = 0; a < c.rows(); ++a)
      for (Eigen::Index b = 0; b < c.cols(); ++b) c(a, b) = coeffs(a * c.cols() + b);
    // phi_l / 2 is the orthonormalized basis, hence the global 1/2.
    return 0.5 * (phase_table(xs, f1) * c * phase_table(ys, f2).transpose());
  }

  std::vector<double> f1(basis.atoms.size());
  std::vector<double> f2(basis.atoms.size());
  for (size_t j = 0; j < basis.atoms.size(); ++j) {
    f1[j] = basis.atoms[j].lambda1;
    f2[j] = basis.atoms[j].lambda2;
  }
  return phase_table(xs, f1) * coeffs.asDiagonal() * phase_table(ys, f2).transpose();
}

double mse(const Eigen::MatrixXcd& recon, const kernels::TestFunction& truth,
           const EvalGrid& grid) {
  if (recon.rows() != grid.count1 || recon.cols() != grid.count2)
    throw std::invalid_argument("mse: field shape does not match grid");
  const auto xs = grid.axis1();
  const auto ys = grid.axis2();
  std::vector<double> deviations(static_cast<size_t>(grid.count1) * grid.count2);
  for (int p = 0; p < grid.count1; ++p)
    for (int q = 0; q < grid.count2; ++q) {
      const Complex d = recon(p, q) - truth(xs[static_cast<size_t>(p)], ys[static_cast<size_t>(q)]);
      deviations[static_cast<size_t>(p) * grid.count2 + q] = std::norm(d);
    }
  return kernels::pairwise_sum(std::span<const double>(deviations)) /
         static_cast<double>(deviations.size());
}

std::vector<CrossSectionRow> cross_section(const Eigen::MatrixXcd& recon,
                                           const kernels::TestFunction& truth,
                                           const EvalGrid& grid, int fixed_axis, double value) {
  if (fixed_axis != 1 && fixed_axis != 2)
    throw std::invalid_argument("cross_section: axis must be 1 or 2");
  if (value < -1.0 || value > 1.0)
    throw std::invalid_argument("cross_section: value must lie in [-1,1]");
  const auto xs = grid.axis1();
  const auto ys = grid.axis2();
  const auto& fixed = (fixed_axis == 1) ? xs : ys;
  size_t pick = 0;
  for (size_t i = 1; i < fixed.size(); ++i)
    if (std::abs(fixed[i] - value) < std::abs(fixed[pick] - value)) pick = i;

  std::vector<CrossSectionRow> rows;
  if (fixed_axis == 1) {
    rows.reserve(ys.size());
    for (size_t q = 0; q < ys.size(); ++q)
      rows.push_back({ys[q], recon(static_cast<Eigen::Index>(pick), static_cast<Eigen::Index>(q)),
                      truth(fixed[pick], ys[q])});
  } else {
    rows.reserve(xs.size());
    for (size_t p = 0; p < xs.size(); ++p)
      rows.push_back({xs[p], recon(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(pick)),
                      truth(xs[p], fixed[pick])});
  }
  return rows;
}

std::string cross_section_to_csv(const std::vector<CrossSectionRow>& rows) {
  std::ostringstream os;
  os << "coordinate,recon_re,recon_im,truth\n";
  for (const auto& r : rows)
    os << io::fmt17(r.coordinate) << "," << io::fmt17(r.recon.real()) << ","
       << io::fmt17(r.recon.imag()) << "," << io::fmt17(r.truth) << "\n";
  return os.str();
}

int choose_n_for_data(int m_per_axis, const MChoiceProfile& profile) {
  if (m_per_axis < 2) return 1;
  const auto fits = [&](int n) {
    const auto m = operator_approx::choose_m_af_scaled({n, n}, profile.t, profile.s, profile.scale);
    return m.v1 <= m_per_axis && m.v2 <= m_per_axis;
  };
  int lo = 1, hi = m_per_axis - 1;
  if (!fits(lo)) return 1;
  while (lo < hi) {  // forward map is strictly increasing in n
    const int mid = (lo + hi + 1) / 2;
    if (fits(mid))
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

const char* method_name(Method m) { return m == Method::AF ? "af" : "cc"; }

ReconstructionResult reconstruct_cell(const kernels::TestFunction& f,
                                      const patterns::SamplingPattern& pattern, Method method,
                                      operator_approx::Size2 n, operator_approx::Size2 m,
                                      double rel_tol, const EvalGrid& grid) {
  const auto start = std::chrono::steady_clock::now();
  ReconstructionResult out;
  out.method = method;
  out.n = n;
  out.m = m;

  const CoefficientVector data = kernels::frame_coefficients(f, pattern);

  if (method == Method::AF) {
    const auto af = operator_approx::af_reconstruct(data, pattern, n, rel_tol);
    out.coefficients = af.coefficients;
    out.basis = Basis::phi(af.grid);
    out.rank_deficient = af.rank_deficient;
    out.condition = af.condition;
    out.effective_rank = af.effective_rank;
    out.grid_values = evaluate(out.coefficients, out.basis, grid);
    out.mse_value = mse(out.grid_values, f, grid);
  } else {
    const auto cc = operator_approx::cc_reconstruct(data, pattern, n, m, rel_tol);
    out.lambda_min_psi = cc.psi_lambda_min;
    out.psi_condition = cc.psi_condition;
    out.condition = cc.v_condition;
    if (cc.singular_operator) {
      out.singular = true;
      out.mse_value = kNaN;
    } else {
      out.coefficients = cc.coefficients;
      std::vector<Node2> atoms;
      atoms.reserve(cc.n_node_ids.size());
      for (const int id : cc.n_node_ids) atoms.push_back(pattern.nodes[static_cast<size_t>(id)]);
      out.basis = Basis::psi(std::move(atoms));
      out.grid_values = evaluate(out.coefficients, out.basis, grid);
      out.mse_value = mse(out.grid_values, f, grid);
    }
  }
  out.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

TableResult run_table(const TableOptions& options) {
  TableResult table;
  table.example = options.example;

  struct Job {
    patterns::PatternKind kind;
    int m_per_axis;
  };
  std::vector<Job> jobs;
  for (const auto kind : options.kinds)
    for (const int m : options.m_values) jobs.push_back({kind, m});

  table.cells.resize(jobs.size() * 2);
  threading::parallel_for(jobs.size(), [&](std::size_t ji) {
    const Job job = jobs[ji];
    const int n = choose_n_for_data(job.m_per_axis, options.profile);
    TableCell af_cell{job.kind, job.m_per_axis, n, Method::AF, kNaN, false, false};
    TableCell cc_cell{job.kind, job.m_per_axis, n, Method::CC, kNaN, false, false};
    const operator_approx::Size2 n2{n, n};
    const operator_approx::Size2 m2{job.m_per_axis, job.m_per_axis};

    // Per-cell failures leave the NaN sentinel in place; the table never
    // aborts on a cell.
    try {
      const auto pattern =
          patterns::preset(job.kind, job.m_per_axis, options.jitter_bound, options.seed);
      try {
        const auto af = reconstruct_cell(options.example, pattern, Method::AF, n2, m2,
                                         options.rel_tol, options.grid);
        af_cell.mse_value = af.mse_value;
        af_cell.rank_deficient = af.rank_deficient;
      } catch (const std::exception&) {
      }
      try {
        const auto cc = reconstruct_cell(options.example, pattern, Method::CC, n2, m2,
                                         options.rel_tol, options.grid);
        cc_cell.mse_value = cc.mse_value;
        cc_cell.singular = cc.singular;
      } catch (const std::exception&) {
      }
    } catch (const std::exception&) {
    }
    table.cells[2 * ji] = af_cell;
    table.cells[2 * ji + 1] = cc_cell;
  });
  return table;
}

std::string table_to_csv(const TableResult& table) {
  std::ostringstream os;
  os << "example,pattern,M,m_per_axis,n_per_axis,method,mse\n";
  for (const auto& cell : table.cells) {
    os << table.example.name() << "," << patterns::kind_name(cell.kind) << ","
       << cell.m_per_axis * cell.m_per_axis << "," << cell.m_per_axis << "," << cell.n_per_axis
       << "," << method_name(cell.method) << ","
       << (std::isnan(cell.mse_value) ? "NaN" : io::fmt17(cell.mse_value)) << "\n";
  }
  return os.str();
}

std::string table_to_text(const TableResult& table) {
  // One row per data size, A-F and C-C columns per pattern.
  std::vector<int> m_values;
  std::vector<patterns::PatternKind> kinds;
  for (const auto& cell : table.cells) {
    if (std::find(m_values.begin(), m_values.end(), cell.m_per_axis) == m_values.end())
      m_values.push_back(cell.m_per_axis);
    if (std::find(kinds.begin(), kinds.end(), cell.kind) == kinds.end())
      kinds.push_back(cell.kind);
  }
  std::sort(m_values.begin(), m_values.end());

  auto lookup = [&](patterns::PatternKind kind, int m, Method method) -> std::string {
    for (const auto& cell : table.cells)
      if (cell.kind == kind && cell.m_per_axis == m && cell.method == method) {
        if (std::isnan(cell.mse_value)) return "NaN";
        char buf[24];
        std::snprintf(buf, sizeof(buf), "%.1E", cell.mse_value);
        return buf;
      }
    return "-";
  };

  std::ostringstream os;
  os << "Mean square errors, example " << table.example.name() << "\n";
  os << "M";
  for (const auto kind : kinds)
    os << "\t" << patterns::kind_name(kind) << ":A-F\t" << patterns::kind_name(kind) << ":C-C";
  os << "\n";
  for (const int m : m_values) {
    os << m << "^2";
    for (const auto kind : kinds)
      os << "\t" << lookup(kind, m, Method::AF) << "\t" << lookup(kind, m, Method::CC);
    os << "\n";
  }
  return os.str();
}

}  // namespace framerecon::recon_eval
