#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <set>
#include <sstream>

#include "framerecon/patterns.hpp"

using namespace framerecon;
using namespace framerecon::patterns;

namespace {
constexpr double kPi = std::numbers::pi;

bool nodes_identical(const std::vector<Node2>& a, const std::vector<Node2>& b) {
  if (a.size() != b.size()) return false;
  return std::memcmp(a.data(), b.data(), a.size() * sizeof(Node2)) == 0;
}
}  // namespace

TEST_CASE("jittered with zero bound is exactly the centered integer grid") {
  const auto p = generate_jittered({2, 2, 0.0}, 7);
  REQUIRE(p.size() == 4);
  const Node2 expected[] = {{-1, -1}, {-1, 0}, {0, -1}, {0, 0}};  // row-major in j
  for (int i = 0; i < 4; ++i) {
    CHECK(p.nodes[size_t(i)].lambda1 == expected[i].lambda1);
    CHECK(p.nodes[size_t(i)].lambda2 == expected[i].lambda2);
  }

  const auto grid = generate_integer_grid(5, 3);
  const auto jit = generate_jittered({5, 3, 0.0}, 123);
  CHECK(nodes_identical(grid.nodes, jit.nodes));
}

TEST_CASE("jittered nodes stay within Chebyshev distance bound of their grid point") {
  const auto p = generate_jittered({16, 16, 0.25}, 42);
  REQUIRE(p.size() == 256);
  REQUIRE(p.grid_indices.size() == 256);
  for (int i = 0; i < p.size(); ++i) {
    const auto g = p.grid_indices[size_t(i)];
    CHECK(std::abs(p.nodes[size_t(i)].lambda1 - g.j1) <= 0.25);
    CHECK(std::abs(p.nodes[size_t(i)].lambda2 - g.j2) <= 0.25);
  }
}

TEST_CASE("jittered generation is deterministic in (params, seed)") {
  const auto a = generate_jittered({8, 8, 0.25}, 1);
  const auto b = generate_jittered({8, 8, 0.25}, 1);
  CHECK(nodes_identical(a.nodes, b.nodes));
  const auto c = generate_jittered({8, 8, 0.25}, 2);
  CHECK_FALSE(nodes_identical(a.nodes, c.nodes));
}

TEST_CASE("jittered jitter depends only on (seed, j), not on grid size") {
  const auto small = generate_jittered({4, 4, 0.25}, 99);
  const auto large = generate_jittered({8, 8, 0.25}, 99);
  for (int i = 0; i < small.size(); ++i) {
    const auto g = small.grid_indices[size_t(i)];
    for (int k = 0; k < large.size(); ++k) {
      if (large.grid_indices[size_t(k)] == g) {
        CHECK(large.nodes[size_t(k)].lambda1 == small.nodes[size_t(i)].lambda1);
        CHECK(large.nodes[size_t(k)].lambda2 == small.nodes[size_t(i)].lambda2);
      }
    }
  }
}

TEST_CASE("jittered parameter validation") {
  CHECK_THROWS_AS(generate_jittered({0, 4, 0.1}, 1), std::invalid_argument);
  CHECK_THROWS_AS(generate_jittered({4, 4, -0.1}, 1), std::invalid_argument);
  CHECK(generate_jittered({4, 4, 0.25}, 1).warning.empty());
  const auto over = generate_jittered({4, 4, 0.3}, 1);
  CHECK_FALSE(over.warning.empty());  // generated anyway, guarantee void
  CHECK(over.size() == 16);
}

TEST_CASE("rosette pinned nodes and radius bound") {
  const auto p = generate_rosette(1.0, kPi, kPi, {0.0});
  REQUIRE(p.size() == 1);
  CHECK(p.nodes[0].lambda1 == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(p.nodes[0].lambda2) < 1e-15);

  const auto q = generate_rosette(5.0, 2.0, 7.0, {0.1, 0.9, 2.4, 5.0});
  for (const auto& node : q.nodes)
    CHECK(std::hypot(node.lambda1, node.lambda2) <= 5.0 + 1e-12);

  CHECK_THROWS_AS(generate_rosette(1.0, 1.0, 1.0, {}), std::invalid_argument);
  CHECK_THROWS_AS(generate_rosette(-1.0, 1.0, 1.0, {0.0}), std::invalid_argument);
}

TEST_CASE("rosette matches an independent per-point evaluation") {
  std::vector<double> ts(4096);
  for (size_t j = 0; j < ts.size(); ++j) ts[j] = 2.0 * kPi * double(j) / 4095.0;
  const auto p = generate_rosette(32.0, 3.0, 5.0, ts);
  REQUIRE(p.size() == 4096);
  for (size_t j = 0; j < ts.size(); ++j) {
    const double radial = 32.0 * std::cos(3.0 * ts[j]);
    CHECK(p.nodes[j].lambda1 == doctest::Approx(radial * std::cos(5.0 * ts[j])).epsilon(1e-15));
    CHECK(p.nodes[j].lambda2 == doctest::Approx(radial * std::sin(5.0 * ts[j])).epsilon(1e-15));
  }
}

TEST_CASE("spiral pinned nodes, monotone radii, validation") {
  const auto p = generate_spiral(1.0, {1.0});
  CHECK(p.nodes[0].lambda1 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(p.nodes[0].lambda2) < 1e-12);

  const auto q = generate_spiral(2.0, {0.25});
  CHECK(std::abs(q.nodes[0].lambda1) < 1e-15);
  CHECK(q.nodes[0].lambda2 == doctest::Approx(0.5).epsilon(1e-15));

  std::vector<double> thetas(1024);
  for (size_t j = 0; j < thetas.size(); ++j) thetas[j] = 16.0 * double(j + 1) / 1024.0;
  const auto s = generate_spiral(1.0, thetas);
  double prev = 0.0;
  for (const auto& node : s.nodes) {
    const double r = std::hypot(node.lambda1, node.lambda2);
    CHECK(r >= prev - 1e-12);
    prev = r;
  }

  CHECK_THROWS_AS(generate_spiral(1.0, {0.5, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(generate_spiral(0.0, {1.0}), std::invalid_argument);
}

TEST_CASE("polar pinned node set at R = T = 2") {
  const auto p = generate_polar(1.0, 2, 2);
  REQUIRE(p.size() == 4);
  // j1 in {-1, 0}, j2 in {-1, 0}: {(0, 1/2), (-1/2, 0), (0,0), (0,0)}.
  std::vector<std::pair<double, double>> remaining;
  for (const auto& node : p.nodes) remaining.push_back({node.lambda1, node.lambda2});
  const std::pair<double, double> expected[] = {{0.0, 0.5}, {-0.5, 0.0}, {0.0, 0.0}, {0.0, 0.0}};
  for (const auto& [e1, e2] : expected) {
    bool found = false;
    for (auto it = remaining.begin(); it != remaining.end(); ++it) {
      if (std::abs(it->first - e1) < 1e-15 && std::abs(it->second - e2) < 1e-15) {
        remaining.erase(it);
        found = true;
        break;
      }
    }
    CHECK(found);
  }
  CHECK(remaining.empty());
}

TEST_CASE("polar radius bound and reflection symmetry") {
  const auto p = generate_polar(64.0, 64, 64);
  REQUIRE(p.size() == 4096);
  for (const auto& node : p.nodes)
    CHECK(std::hypot(node.lambda1, node.lambda2) <= 32.0 + 1e-12);

  // The set without the unmatched j1 = -R/2 row is symmetric under negation.
  std::set<std::pair<double, double>> kept;
  int skipped = 0;
  for (const auto& node : p.nodes) {
    const double r = std::hypot(node.lambda1, node.lambda2);
    if (r > 31.0 + 0.5) {
      ++skipped;  // the j1 = -32 ring has no mirror
      continue;
    }
    kept.insert({node.lambda1 + 0.0, node.lambda2 + 0.0});
  }
  CHECK(skipped == 64);
  for (const auto& [l1, l2] : kept)
    CHECK(kept.count({-l1 + 0.0, -l2 + 0.0}) == 1);
}

TEST_CASE("presets produce M nodes covering the integer-grid frequency box") {
  for (const auto kind : {PatternKind::Jittered, PatternKind::Rosette, PatternKind::Spiral,
                          PatternKind::Polar}) {
    const auto p = preset(kind, 16, 0.25, 7);
    CHECK(p.size() == 256);
    double max_r = 0.0;
    for (const auto& node : p.nodes)
      max_r = std::max(max_r, std::max(std::abs(node.lambda1), std::abs(node.lambda2)));
    CHECK(max_r <= 8.0 + 0.25 + 1e-12);
  }
}

TEST_CASE("pattern CSV round-trips nodes bit-exactly") {
  for (const auto kind : {PatternKind::Jittered, PatternKind::Rosette, PatternKind::Spiral,
                          PatternKind::Polar}) {
    const auto p = preset(kind, 8, 0.25, 3);
    std::stringstream ss;
    write_csv(p, ss);
    const auto q = read_csv(ss);
    CHECK(q.kind == p.kind);
    CHECK(nodes_identical(p.nodes, q.nodes));
    if (kind == PatternKind::Jittered) CHECK(q.seed == p.seed);
  }
}

TEST_CASE("identical generation twice writes identical CSV bytes") {
  std::stringstream a, b;
  write_csv(generate_jittered({16, 16, 0.25}, 42), a);
  write_csv(generate_jittered({16, 16, 0.25}, 42), b);
  CHECK(a.str() == b.str());
  CHECK(a.str().find("kind=jittered") == 0);
}
