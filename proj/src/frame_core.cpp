#include "framerecon/frame_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include "framerecon/io.hpp"
#include "framerecon/threading.hpp"

namespace framerecon::frame_core {

namespace {
constexpr double kPi = std::numbers::pi;

std::vector<int> all_node_ids(const patterns::SamplingPattern& p) {
  std::vector<int> ids(static_cast<size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) ids[static_cast<size_t>(i)] = i;
  return ids;
}
}  // namespace

numerics::HermitianMatrix assemble_sampling_gram(const patterns::SamplingPattern& pattern) {
  return assemble_sampling_gram(pattern, all_node_ids(pattern));
}

numerics::HermitianMatrix assemble_sampling_gram(const patterns::SamplingPattern& pattern,
                                                 const std::vector<int>& node_ids) {
  if (node_ids.empty()) throw std::invalid_argument("assemble_sampling_gram: empty pattern");
  const auto n = static_cast<Eigen::Index>(node_ids.size());
  Eigen::MatrixXcd gram(n, n);
  threading::parallel_for(static_cast<std::size_t>(n), [&](std::size_t jj) {
    const auto j = static_cast<Eigen::Index>(jj);
    const kernels::AtomSpec a{pattern.nodes[static_cast<size_t>(node_ids[jj])]};
    for (Eigen::Index l = 0; l < n; ++l) {
      const kernels::AtomSpec b{pattern.nodes[static_cast<size_t>(node_ids[static_cast<size_t>(l)])]};
      gram(j, l) = kernels::atom_inner_product(a, b);
    }
  });
  return numerics::HermitianMatrix(gram);
}

numerics::RectMatrix assemble_cross_gram(const patterns::SamplingPattern& pattern,
                                         const IndexRange2& grid) {
  return assemble_cross_gram(pattern, all_node_ids(pattern), grid);
}

numerics::RectMatrix assemble_cross_gram(const patterns::SamplingPattern& pattern,
                                         const std::vector<int>& node_ids,
                                         const IndexRange2& grid) {
  if (node_ids.empty()) throw std::invalid_argument("assemble_cross_gram: empty pattern");
  if (grid.count() < 1) throw std::invalid_argument("assemble_cross_gram: empty grid");
  const auto rows = static_cast<Eigen::Index>(node_ids.size());
  const auto cols = static_cast<Eigen::Index>(grid.count());
  const auto grid_indices = grid.indices();
  numerics::RectMatrix omega(rows, cols);
  threading::parallel_for(static_cast<std::size_t>(rows), [&](std::size_t jj) {
    const auto j = static_cast<Eigen::Index>(jj);
    const Node2 node = pattern.nodes[static_cast<size_t>(node_ids[jj])];
    for (Eigen::Index l = 0; l < cols; ++l) {
      const GridIndex g = grid_indices[static_cast<size_t>(l)];
      omega(j, l) = Complex(
          2.0 * kernels::sinc(node.lambda1 - g.j1) * kernels::sinc(node.lambda2 - g.j2), 0.0);
    }
  });
  return omega;
}

FrameBounds estimate_frame_bounds(const patterns::SamplingPattern& pattern,
                                  const IndexRange2& probe_grid) {
  const numerics::RectMatrix f = assemble_cross_gram(pattern, probe_grid);
  const numerics::HermitianMatrix gram(f.adjoint() * f);

  FrameBounds out;
  out.method = BoundsMethod::FiniteSection;
  out.A = numerics::min_eigenvalue(gram);
  out.B = numerics::max_eigenvalue(gram);
  out.ill_posed = out.A < 1e-10 * std::max(out.B, 1.0);

  if (pattern.kind == patterns::PatternKind::Jittered) {
    double bound = 0.0;
    for (const auto& [key, value] : pattern.params)
      if (key == "bound") bound = value;
    if (bound <= 0.25) {
      // 1D Kadec pair for perturbation delta, on the ||atom||^2 = 2 scale of
      // one axis: A1 = 2 (cos pi d - sin pi d)^2, B1 = 2 (2 - cos pi d + sin pi d)^2.
      const double cd = std::cos(kPi * bound);
      const double sd = std::sin(kPi * bound);
      out.kadec_1d = {2.0 * (cd - sd) * (cd - sd), 2.0 * (2.0 - cd + sd) * (2.0 - cd + sd)};
    }
  }
  return out;
}

LocalizationFit verify_localization(const numerics::HermitianMatrix& gram,
                                    const std::vector<GridIndex>& index_map, double exponent) {
  if (exponent <= 0.0) throw std::invalid_argument("verify_localization: exponent must be > 0");
  const auto& g = gram.matrix();
  if (static_cast<Eigen::Index>(index_map.size()) != g.rows())
    throw std::invalid_argument("verify_localization: index map size mismatch");

  LocalizationFit fit;
  double max_diag = 0.0;
  std::map<int, double> shell_max;  // rounded distance -> max |entry|
  for (Eigen::Index j = 0; j < g.rows(); ++j) {
    for (Eigen::Index l = 0; l < g.cols(); ++l) {
      const double d1 = index_map[static_cast<size_t>(j)].j1 - index_map[static_cast<size_t>(l)].j1;
      const double d2 = index_map[static_cast<size_t>(j)].j2 - index_map[static_cast<size_t>(l)].j2;
      const double dist = std::hypot(d1, d2);
      const double mag = std::abs(g(j, l));
      fit.gamma_hat = std::max(fit.gamma_hat, mag * std::pow(1.0 + dist, exponent));
      if (j == l) max_diag = std::max(max_diag, mag);
      const int shell = static_cast<int>(std::lround(dist));
      if (shell >= 1) {
        auto [it, inserted] = shell_max.emplace(shell, mag);
        if (!inserted) it->second = std::max(it->second, mag);
      }
    }
  }
  fit.satisfied = std::isfinite(fit.gamma_hat);

  // Empirical decay rate: log-log regression of shell maxima against 1 + d.
  // All-zero off-diagonal mass (orthogonal atoms) reports the +inf sentinel.
  const double floor = 1e-13 * std::max(max_diag, 1.0);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (const auto& [shell, mag] : shell_max) {
    if (mag < floor) continue;
    const double x = std::log(1.0 + shell);
    const double y = std::log(mag);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
  }
  if (count < 2) {
    fit.rate_hat = std::numeric_limits<double>::infinity();
  } else {
    const double denom = count * sxx - sx * sx;
    fit.rate_hat = -(count * sxy - sx * sy) / denom;
  }
  return fit;
}

SmoothnessFit verify_smoothness_decay(const CoefficientVector& coeffs,
                                      const std::vector<GridIndex>& index_map, double s) {
  if (s <= 0.0) throw std::invalid_argument("verify_smoothness_decay: s must be > 0");
  if (static_cast<Eigen::Index>(index_map.size()) != coeffs.size())
    throw std::invalid_argument("verify_smoothness_decay: index map size mismatch");
  SmoothnessFit fit;
  for (Eigen::Index j = 0; j < coeffs.size(); ++j) {
    const GridIndex g = index_map[static_cast<size_t>(j)];
    if (g.j1 == 0 && g.j2 == 0) continue;
    const double norm = std::hypot(double(g.j1), double(g.j2));
    fit.c0_hat = std::max(fit.c0_hat, std::abs(coeffs(j)) * std::pow(norm, s));
  }
  return fit;
}

std::string gram_to_csv(const Eigen::MatrixXcd& m) {
  std::ostringstream os;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c > 0) os << ",";
      os << io::fmt17(m(r, c).real()) << "," << io::fmt17(m(r, c).imag());
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace framerecon::frame_core
