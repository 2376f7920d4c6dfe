#pragma once

#include <functional>
#include <span>
#include <vector>

#include "framerecon/patterns.hpp"
#include "framerecon/types.hpp"

namespace framerecon::kernels {

/// Pairwise (cascade) summation. Deterministic for a fixed input order and
/// noticeably better error constants than a running sum at n ~ 4096.
double pairwise_sum(std::span<const double> xs);
Complex pairwise_sum(std::span<const Complex> xs);

/// sin(pi*u)/(pi*u) with the removable singularity handled by a short series
/// below |u| = 1e-8.
double sinc(double u);

/// Integral of sin(k*pi*x) * exp(i*pi*lambda*x) over [-1,1], k a positive
/// integer. Equals i*(sinc(lambda-k) - sinc(lambda+k)).
Complex sine_line_integral(double lambda, int k);

/// Integral of (x^2-1)^2 * exp(i*pi*lambda*x) over [-1,1]. Real and even in
/// lambda. The closed form is grouped to limit cancellation and a Taylor
/// series takes over for small |lambda| where the closed form sheds digits.
double poly_weight_integral(double lambda);

/// An exponential atom exp(-i*pi*node.x) on [-1,1]^2. Unnormalized:
/// ||atom||^2 = 4.
struct AtomSpec {
  Node2 node;
};

/// <psi_a, psi_b> = 4*sinc(d1)*sinc(d2) with d = a.node - b.node. Real by
/// the closed form; returned complex for uniformity with the quadrature path.
Complex atom_inner_product(const AtomSpec& a, const AtomSpec& b);

enum class TestFunctionId { F1, F2 };

/// The two benchmark functions on [-1,1]^2:
///   f1(x) = sin(4 pi x1) sin(2 pi x2)
///   f2(x) = sin(4 pi x1) (x2^2 - 1)^2
struct TestFunction {
  TestFunctionId id = TestFunctionId::F1;

  double operator()(double x1, double x2) const;
  static TestFunction f1() { return {TestFunctionId::F1}; }
  static TestFunction f2() { return {TestFunctionId::F2}; }
  const char* name() const { return id == TestFunctionId::F1 ? "f1" : "f2"; }
};

/// Frame data <f, psi_j> for every node of the pattern, in pattern order.
/// Closed form per test function (sine line integrals and the polynomial
/// weight integral above).
CoefficientVector frame_coefficients(const TestFunction& f, const patterns::SamplingPattern& pattern);

/// Single-node closed-form coefficient.
Complex frame_coefficient(const TestFunction& f, const Node2& node);

/// Tensorized Gauss-Legendre rule on [-1,1]^2.
class QuadratureRule {
 public:
  explicit QuadratureRule(int order);

  int order() const { return order_; }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  int order_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Tensor-quadrature approximation of integral of g(x) * exp(+i pi a.x) over
/// [-1,1]^2. Independent of every closed form above; this is the oracle the
/// closed forms are checked against.
Complex quadrature_inner_product(const std::function<Complex(double, double)>& g,
                                 const AtomSpec& a, const QuadratureRule& rule);

}  // namespace framerecon::kernels
