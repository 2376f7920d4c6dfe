#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

#include "framerecon/kernels.hpp"
#include "framerecon/types.hpp"

namespace test_support {

using framerecon::Complex;
using framerecon::Node2;

/// Quadrature-oracle inner product of two exponential atoms. Goes through
/// quadrature_inner_product with the first atom as the integrand, so it
/// never touches the sinc closed form.
inline Complex quad_atom_inner_product(const Node2& a, const Node2& b,
                                       const framerecon::kernels::QuadratureRule& rule) {
  auto psi_a = [&](double x1, double x2) {
    const double phase = -M_PI * (a.lambda1 * x1 + a.lambda2 * x2);
    return Complex(std::cos(phase), std::sin(phase));
  };
  return framerecon::kernels::quadrature_inner_product(psi_a, {b}, rule);
}

/// Deterministic uniform double in [lo, hi) from a seeded engine.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  int uniform_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
  }
  Complex complex_unit() { return {uniform(-1.0, 1.0), uniform(-1.0, 1.0)}; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace test_support
