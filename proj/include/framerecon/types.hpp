#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace framerecon {

using Complex = std::complex<double>;

/// Coefficient vectors are complex and index-ordered; the ordering is owned
/// by whoever built the vector (pattern order or row-major grid order).
using CoefficientVector = Eigen::VectorXcd;

/// A single 2D frequency node, in half-cycles over [-1,1].
struct Node2 {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
};

/// Integer grid index (j1, j2).
struct GridIndex {
  int j1 = 0;
  int j2 = 0;

  friend bool operator==(const GridIndex&, const GridIndex&) = default;
};

/// Centered per-axis integer ranges: j1 in [lo1, hi1), j2 in [lo2, hi2),
/// enumerated row-major (j1 outer, j2 inner).
struct IndexRange2 {
  int lo1 = 0, hi1 = 0;
  int lo2 = 0, hi2 = 0;

  int count1() const { return hi1 - lo1; }
  int count2() const { return hi2 - lo2; }
  int count() const { return count1() * count2(); }

  std::vector<GridIndex> indices() const {
    std::vector<GridIndex> out;
    out.reserve(static_cast<size_t>(count()));
    for (int a = lo1; a < hi1; ++a)
      for (int b = lo2; b < hi2; ++b) out.push_back({a, b});
    return out;
  }
};

/// Centered range covering [-n/2, n/2) per axis: n even gives -n/2..n/2-1,
/// n odd gives -(n-1)/2..(n-1)/2.
inline IndexRange2 centered_range(int n1, int n2) {
  if (n1 < 1 || n2 < 1) throw std::invalid_argument("grid counts must be >= 1");
  const int lo1 = -(n1 / 2);
  const int lo2 = -(n2 / 2);
  return IndexRange2{lo1, lo1 + n1, lo2, lo2 + n2};
}

/// Eigensolver / SVD non-convergence. Carries whatever diagnostics the
/// backend exposes.
class NumericalFailure : public std::runtime_error {
 public:
  explicit NumericalFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace framerecon
