#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "framerecon/kernels.hpp"
#include "framerecon/patterns.hpp"
#include "test_support.hpp"

using namespace framerecon;
using namespace framerecon::kernels;
using test_support::quad_atom_inner_product;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("pairwise_sum matches the exact sum of an arithmetic series") {
  std::vector<double> xs(4097);
  for (size_t i = 0; i < xs.size(); ++i) xs[i] = double(i + 1);
  const double expected = 4097.0 * 4098.0 / 2.0;
  CHECK(pairwise_sum(std::span<const double>(xs)) == doctest::Approx(expected).epsilon(1e-15));
}

TEST_CASE("sinc pinned values") {
  CHECK(sinc(0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(sinc(1.0)) < 1e-15);
  CHECK(sinc(0.5) == doctest::Approx(2.0 / kPi).epsilon(1e-15));
}

TEST_CASE("sinc series and direct branches agree at the switch-over") {
  for (const double u : {1e-8, -1e-8}) {
    const double direct = std::sin(kPi * u) / (kPi * u);
    CHECK(std::abs(sinc(u) - direct) <= 1e-15);
  }
}

TEST_CASE("quadrature rule: positive weights summing to 2 per axis") {
  for (const int order : {2, 8, 17, 64}) {
    const QuadratureRule rule(order);
    double sum = 0.0;
    for (const double w : rule.weights()) {
      CHECK(w > 0.0);
      sum += w;
    }
    CHECK(sum == doctest::Approx(2.0).epsilon(1e-14));
  }
  CHECK_THROWS_AS(QuadratureRule(1), std::invalid_argument);
}

TEST_CASE("quadrature of constants against exponential atoms") {
  const auto one = [](double, double) { return Complex(1.0, 0.0); };
  const QuadratureRule rule8(8);
  const Complex area = quadrature_inner_product(one, {{0.0, 0.0}}, rule8);
  CHECK(std::abs(area - Complex(4.0, 0.0)) < 1e-14);

  const QuadratureRule rule64(64);
  const Complex ortho = quadrature_inner_product(one, {{1.0, 0.0}}, rule64);
  CHECK(std::abs(ortho) < 1e-13);
}

TEST_CASE("atom inner product pinned values") {
  const AtomSpec a{{0.3, -0.7}};
  CHECK(atom_inner_product(a, a).real() == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(std::abs(atom_inner_product({{0.0, 0.0}}, {{1.0, 0.0}})) < 1e-15);

  // Frozen from adaptive-quadrature evaluation of the defining integral.
  const Complex v = atom_inner_product(a, {{1.0, 2.0}});
  CHECK(v.real() == doctest::Approx(0.1403504246328096).epsilon(1e-13));
  CHECK(v.imag() == 0.0);
}

TEST_CASE("atom inner product agrees with the order-64 oracle") {
  const QuadratureRule rule(64);
  const Complex closed = atom_inner_product({{0.3, -0.7}}, {{1.0, 2.0}});
  const Complex quad = quad_atom_inner_product({0.3, -0.7}, {1.0, 2.0}, rule);
  CHECK(std::abs(closed - quad) < 1e-12);
}

TEST_CASE("atom inner product: conjugate symmetry and Cauchy-Schwarz bound") {
  test_support::Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const AtomSpec a{{rng.uniform(-20, 20), rng.uniform(-20, 20)}};
    const AtomSpec b{{rng.uniform(-20, 20), rng.uniform(-20, 20)}};
    const Complex ab = atom_inner_product(a, b);
    const Complex ba = atom_inner_product(b, a);
    CHECK(ab == std::conj(ba));  // exact: sinc is even
    CHECK(std::abs(ab) <= 4.0 + 1e-14);
  }
}

TEST_CASE("closed form vs quadrature across separations up to 8") {
  const QuadratureRule rule(64);
  test_support::Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Node2 lambda{rng.uniform(-8, 8), rng.uniform(-8, 8)};
    const Node2 l{double(rng.uniform_int(-4, 4)), double(rng.uniform_int(-4, 4))};
    const Complex closed = atom_inner_product({lambda}, {l});
    const Complex quad = quad_atom_inner_product(lambda, l, rule);
    CHECK(std::abs(closed - quad) < 1e-10);
  }
}

TEST_CASE("sine line integral sign convention") {
  // Frozen from adaptive quadrature: integral of sin(pi x) e^{i pi x / 2}
  // over [-1,1] is +0.8488263631567752 i.
  const Complex v = sine_line_integral(0.5, 1);
  CHECK(v.real() == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(v.imag() == doctest::Approx(0.8488263631567752).epsilon(1e-13));
}

TEST_CASE("test functions evaluate as specified") {
  const auto f1 = TestFunction::f1();
  const auto f2 = TestFunction::f2();
  CHECK(f1(0.125, 0.25) ==
        doctest::Approx(std::sin(0.5 * kPi) * std::sin(0.5 * kPi)).epsilon(1e-15));
  CHECK(f2(0.125, 0.5) == doctest::Approx(std::sin(0.5 * kPi) * 0.5625).epsilon(1e-15));
}

TEST_CASE("frame coefficients: pinned trivial and derived values") {
  const auto f1 = TestFunction::f1();
  const auto f2 = TestFunction::f2();

  // Spectral line of f1: at the integer node (4, 2) the coefficient is -1.
  const Complex line = frame_coefficient(f1, {4.0, 2.0});
  CHECK(line.real() == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(std::abs(line.imag()) < 1e-15);

  CHECK(std::abs(frame_coefficient(f1, {0.0, 0.0})) < 1e-15);
  CHECK(std::abs(frame_coefficient(f2, {0.0, 0.0})) < 1e-15);

  // Frozen from adaptive quadrature.
  const Complex c1 = frame_coefficient(f1, {0.5, 0.25});
  CHECK(c1.real() == doctest::Approx(-0.036968694147693035).epsilon(1e-12));
  CHECK(std::abs(c1.imag()) < 1e-15);
  const Complex c2 = frame_coefficient(f2, {0.5, 0.25});
  CHECK(std::abs(c2.real()) < 1e-15);
  CHECK(c2.imag() == doctest::Approx(-0.16499023928613668).epsilon(1e-12));
}

TEST_CASE("frame coefficients agree with the order-64 oracle") {
  const QuadratureRule rule(64);
  for (const auto f : {TestFunction::f1(), TestFunction::f2()}) {
    auto g = [&](double x1, double x2) { return Complex(f(x1, x2), 0.0); };
    test_support::Rng rng(11);
    for (int trial = 0; trial < 25; ++trial) {
      const Node2 node{rng.uniform(-8, 8), rng.uniform(-8, 8)};
      const Complex closed = frame_coefficient(f, node);
      const Complex quad = quadrature_inner_product(g, {node}, rule);
      CHECK(std::abs(closed - quad) < 1e-12);
    }
  }
}

TEST_CASE("polynomial weight integral: value at zero and oracle sweep") {
  CHECK(poly_weight_integral(0.0) == doctest::Approx(16.0 / 15.0).epsilon(1e-15));

  // Frozen from adaptive quadrature of (x^2-1)^2 cos(pi lambda x).
  const struct {
    double lambda, expected;
  } sweep[] = {
      {1e-5, 1.06666666659147},      {1e-3, 1.0666659146970137}, {0.05, 1.064788030017298},
      {0.1, 1.059167552956662},      {0.149, 1.0500734586653242}, {0.1501, 1.0498290718830927},
      {0.25, 1.0204663684464683},    {0.5, 0.8910885482804656},  {1.0, 0.49276714822484813},
      {2.5, -0.03141940007376265},   {8.0, -0.0001203044795470001},
  };
  for (const auto& [lambda, expected] : sweep) {
    CHECK(poly_weight_integral(lambda) == doctest::Approx(expected).epsilon(5e-13));
    CHECK(poly_weight_integral(-lambda) == poly_weight_integral(lambda));
  }
}

TEST_CASE("polynomial weight integral: series and closed branches agree at the seam") {
  // Both branches evaluated just either side of the 0.15 switch-over.
  const double below = poly_weight_integral(0.1499999999);
  const double above = poly_weight_integral(0.1500000001);
  CHECK(std::abs(below - above) < 1e-9 * std::abs(below));
  // And directly against the oracle at the seam.
  const QuadratureRule rule(64);
  auto g = [](double, double x2) {
    const double w = x2 * x2 - 1.0;
    return Complex(w * w, 0.0);
  };
  const Complex quad = quadrature_inner_product(g, {{0.0, 0.15}}, rule);
  CHECK(poly_weight_integral(0.15) == doctest::Approx(quad.real() / 2.0).epsilon(1e-13));
}
