#include "framerecon/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace framerecon::kernels {

namespace {
constexpr double kPi = std::numbers::pi;

double pairwise_sum_impl(const double* xs, std::size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += xs[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum_impl(xs, half) + pairwise_sum_impl(xs + half, n - half);
}

Complex pairwise_sum_impl(const Complex* xs, std::size_t n) {
  if (n <= 8) {
    Complex s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += xs[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum_impl(xs, half) + pairwise_sum_impl(xs + half, n - half);
}
}  // namespace

double pairwise_sum(std::span<const double> xs) { return pairwise_sum_impl(xs.data(), xs.size()); }
Complex pairwise_sum(std::span<const Complex> xs) { return pairwise_sum_impl(xs.data(), xs.size()); }

double sinc(double u) {
  const double a = kPi * u;
  if (std::abs(u) < 1e-8) {
    const double a2 = a * a;
    return 1.0 - a2 / 6.0 + a2 * a2 / 120.0;
  }
  return std::sin(a) / a;
}

Complex sine_line_integral(double lambda, int k) {
  return Complex(0.0, 1.0) * (sinc(lambda - k) - sinc(lambda + k));
}

double poly_weight_integral(double lambda) {
  const double a = kPi * lambda;
  if (std::abs(lambda) < 0.15) {
    // sum_k (-1)^k a^{2k} * 16 / ((2k)! (2k+1)(2k+3)(2k+5)), six terms.
    // Truncation < 2e-15 at the switch-over; the closed form below loses
    // ~4*log10(1/a) digits, so it only takes over once |a| is moderate.
    double term = 16.0 / 15.0;  // k = 0
    double sum = term;
    const double a2 = a * a;
    for (int k = 1; k < 6; ++k) {
      term *= -a2 / (2.0 * k * (2.0 * k + 5.0));
      sum += term;
    }
    return sum;
  }
  const double s = std::sin(a);
  const double c = std::cos(a);
  const double a2 = a * a;
  // 48 sin a / a^5 - 48 cos a / a^4 - 16 sin a / a^3, grouped so the two
  // large near-cancelling pieces meet once instead of three times.
  return (48.0 * (s - a * c) - 16.0 * a2 * s) / (a2 * a2 * a);
}

Complex atom_inner_product(const AtomSpec& a, const AtomSpec& b) {
  const double d1 = a.node.lambda1 - b.node.lambda1;
  const double d2 = a.node.lambda2 - b.node.lambda2;
  return Complex(4.0 * sinc(d1) * sinc(d2), 0.0);
}

double TestFunction::operator()(double x1, double x2) const {
  const double s1 = std::sin(4.0 * kPi * x1);
  if (id == TestFunctionId::F1) return s1 * std::sin(2.0 * kPi * x2);
  const double w = x2 * x2 - 1.0;
  return s1 * w * w;
}

Complex frame_coefficient(const TestFunction& f, const Node2& node) {
  const Complex factor1 = sine_line_integral(node.lambda1, 4);
  if (f.id == TestFunctionId::F1) return factor1 * sine_line_integral(node.lambda2, 2);
  return factor1 * poly_weight_integral(node.lambda2);
}

CoefficientVector frame_coefficients(const TestFunction& f, const patterns::SamplingPattern& pattern) {
  CoefficientVector out(pattern.size());
  for (int j = 0; j < pattern.size(); ++j) out(j) = frame_coefficient(f, pattern.nodes[static_cast<size_t>(j)]);
  return out;
}

QuadratureRule::QuadratureRule(int order) : order_(order) {
  if (order < 2) throw std::invalid_argument("quadrature order must be >= 2");
  nodes_.resize(static_cast<size_t>(order));
  weights_.resize(static_cast<size_t>(order));
  // Newton iteration on P_n with the Chebyshev-angle initial guess; standard
  // Golub-Welsch-free construction, fine up to a few hundred points.
  const int n = order;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double p_prime = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      p_prime = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / p_prime;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * p_prime * p_prime);
    nodes_[static_cast<size_t>(i)] = -x;
    nodes_[static_cast<size_t>(n - 1 - i)] = x;
    weights_[static_cast<size_t>(i)] = w;
    weights_[static_cast<size_t>(n - 1 - i)] = w;
  }
}

Complex quadrature_inner_product(const std::function<Complex(double, double)>& g,
                                 const AtomSpec& a, const QuadratureRule& rule) {
  const auto& xs = rule.nodes();
  const auto& ws = rule.weights();
  const std::size_t n = xs.size();
  std::vector<Complex> row_sums(n);
  std::vector<Complex> row(n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      const double phase = kPi * (a.node.lambda1 * xs[p] + a.node.lambda2 * xs[q]);
      row[q] = ws[q] * g(xs[p], xs[q]) * Complex(std::cos(phase), std::sin(phase));
    }
    row_sums[p] = ws[p] * pairwise_sum(std::span<const Complex>(row));
  }
  return pairwise_sum(std::span<const Complex>(row_sums));
}

}  // namespace framerecon::kernels
