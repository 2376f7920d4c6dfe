#include "framerecon/patterns.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "framerecon/io.hpp"

namespace framerecon::patterns {

namespace {
constexpr double kPi = std::numbers::pi;

// SplitMix64 finalizer. The per-node stream is keyed on (seed, j1, j2) so a
// node's jitter never depends on how the grid is enumerated.
std::uint64_t sm_mix(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t zigzag(int v) {
  const auto s = static_cast<std::int64_t>(v);
  return static_cast<std::uint64_t>((s << 1) ^ (s >> 63));
}

double unit_double(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

// Two uniforms in [0,1) for node (j1, j2) under the given seed.
std::pair<double, double> node_uniforms(std::uint64_t seed, int j1, int j2) {
  std::uint64_t s = sm_mix(seed ^ (zigzag(j1) * 0xA24BAED4963EE407ull));
  s = sm_mix(s ^ (zigzag(j2) * 0x9FB21C651E98DF25ull));
  const std::uint64_t a = sm_mix(s);
  const std::uint64_t b = sm_mix(a);
  return {unit_double(a), unit_double(b)};
}
}  // namespace

const char* kind_name(PatternKind k) {
  switch (k) {
    case PatternKind::Jittered: return "jittered";
    case PatternKind::Rosette: return "rosette";
    case PatternKind::Spiral: return "spiral";
    case PatternKind::Polar: return "polar";
    case PatternKind::IntegerGrid: return "integer_grid";
  }
  return "unknown";
}

PatternKind kind_from_name(const std::string& name) {
  if (name == "jittered") return PatternKind::Jittered;
  if (name == "rosette") return PatternKind::Rosette;
  if (name == "spiral") return PatternKind::Spiral;
  if (name == "polar") return PatternKind::Polar;
  if (name == "integer_grid") return PatternKind::IntegerGrid;
  throw std::invalid_argument("unknown pattern kind: " + name);
}

SamplingPattern generate_jittered(const JitterParams& params, std::uint64_t seed) {
  if (params.m1 < 1 || params.m2 < 1) throw std::invalid_argument("jittered: m1, m2 must be >= 1");
  if (params.bound < 0.0) throw std::invalid_argument("jittered: bound must be >= 0");

  SamplingPattern p;
  p.kind = PatternKind::Jittered;
  p.seed = seed;
  p.params = {{"m1", double(params.m1)}, {"m2", double(params.m2)}, {"bound", params.bound}};
  if (params.bound > 0.25)
    p.warning = "bound exceeds 1/4: the frame guarantee does not apply";

  const IndexRange2 range = centered_range(params.m1, params.m2);
  p.nodes.reserve(static_cast<size_t>(range.count()));
  p.grid_indices.reserve(static_cast<size_t>(range.count()));
  for (int j1 = range.lo1; j1 < range.hi1; ++j1) {
    for (int j2 = range.lo2; j2 < range.hi2; ++j2) {
      const auto [u1, u2] = node_uniforms(seed, j1, j2);
      p.nodes.push_back({j1 + params.bound * (2.0 * u1 - 1.0),
                         j2 + params.bound * (2.0 * u2 - 1.0)});
      p.grid_indices.push_back({j1, j2});
    }
  }
  return p;
}

SamplingPattern generate_integer_grid(int m1, int m2) {
  if (m1 < 1 || m2 < 1) throw std::invalid_argument("integer_grid: m1, m2 must be >= 1");
  SamplingPattern p;
  p.kind = PatternKind::IntegerGrid;
  p.params = {{"m1", double(m1)}, {"m2", double(m2)}};
  const IndexRange2 range = centered_range(m1, m2);
  for (int j1 = range.lo1; j1 < range.hi1; ++j1)
    for (int j2 = range.lo2; j2 < range.hi2; ++j2) {
      p.nodes.push_back({double(j1), double(j2)});
      p.grid_indices.push_back({j1, j2});
    }
  return p;
}

SamplingPattern generate_rosette(double k_max, double w1, double w2,
                                 const std::vector<double>& t_values) {
  if (k_max <= 0.0) throw std::invalid_argument("rosette: k_max must be > 0");
  if (w1 <= 0.0 || w2 <= 0.0) throw std::invalid_argument("rosette: w1, w2 must be > 0");
  if (t_values.empty()) throw std::invalid_argument("rosette: t_values must be nonempty");
  SamplingPattern p;
  p.kind = PatternKind::Rosette;
  p.params = {{"k_max", k_max}, {"w1", w1}, {"w2", w2}, {"count", double(t_values.size())}};
  p.nodes.reserve(t_values.size());
  for (const double t : t_values) {
    const double radial = k_max * std::cos(w1 * t);
    p.nodes.push_back({radial * std::cos(w2 * t), radial * std::sin(w2 * t)});
  }
  return p;
}

SamplingPattern generate_spiral(double c, const std::vector<double>& theta_values) {
  if (c <= 0.0) throw std::invalid_argument("spiral: c must be > 0");
  if (theta_values.empty()) throw std::invalid_argument("spiral: theta_values must be nonempty");
  SamplingPattern p;
  p.kind = PatternKind::Spiral;
  p.params = {{"c", c}, {"count", double(theta_values.size())}};
  p.nodes.reserve(theta_values.size());
  for (const double t : theta_values) {
    if (t <= 0.0) throw std::invalid_argument("spiral: theta values must be > 0");
    p.nodes.push_back({c * t * std::cos(2.0 * kPi * t), c * t * std::sin(2.0 * kPi * t)});
  }
  return p;
}

SamplingPattern generate_polar(double c, int R, int T) {
  if (c <= 0.0) throw std::invalid_argument("polar: c must be > 0");
  if (R < 1 || T < 1) throw std::invalid_argument("polar: R, T must be >= 1");
  SamplingPattern p;
  p.kind = PatternKind::Polar;
  p.params = {{"c", c}, {"R", double(R)}, {"T", double(T)}};
  const IndexRange2 range = centered_range(R, T);
  for (int j1 = range.lo1; j1 < range.hi1; ++j1) {
    const double r = double(j1) / R;
    for (int j2 = range.lo2; j2 < range.hi2; ++j2) {
      const double th = kPi * double(j2) / T;
      p.nodes.push_back({c * r * std::cos(th), c * r * std::sin(th)});
    }
  }
  return p;
}

SamplingPattern preset(PatternKind kind, int m_per_axis, double jitter_bound,
                       std::uint64_t seed) {
  if (m_per_axis < 1) throw std::invalid_argument("preset: m_per_axis must be >= 1");
  const int m = m_per_axis;
  const int count = m * m;
  switch (kind) {
    case PatternKind::Jittered:
      return generate_jittered({m, m, jitter_bound}, seed);
    case PatternKind::IntegerGrid:
      return generate_integer_grid(m, m);
    case PatternKind::Rosette: {
      std::vector<double> ts(static_cast<size_t>(count));
      for (int j = 0; j < count; ++j) ts[static_cast<size_t>(j)] = 2.0 * kPi * j / count;
      return generate_rosette(m / 2.0, 3.0, 5.0, ts);
    }
    case PatternKind::Spiral: {
      // Archimedean spiral with unit radial pitch: theta_max = m/2 turns,
      // radius c*theta <= m/2, matching the integer grid's coverage box.
      const double theta_max = m / 2.0;
      std::vector<double> ts(static_cast<size_t>(count));
      for (int j = 1; j <= count; ++j) ts[static_cast<size_t>(j - 1)] = theta_max * j / count;
      return generate_spiral(1.0, ts);
    }
    case PatternKind::Polar:
      return generate_polar(double(m), m, m);
  }
  throw std::invalid_argument("preset: unknown kind");
}

void write_csv(const SamplingPattern& p, std::ostream& os) {
  os << "kind=" << kind_name(p.kind);
  for (const auto& [key, value] : p.params) os << "," << key << "=" << io::fmt17(value);
  if (p.kind == PatternKind::Jittered) os << ",seed=" << p.seed;
  os << "\n";
  for (const auto& node : p.nodes)
    os << io::fmt17(node.lambda1) << "," << io::fmt17(node.lambda2) << "\n";
}

void write_csv_file(const SamplingPattern& p, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  write_csv(p, os);
}

SamplingPattern read_csv(std::istream& is) {
  SamplingPattern p;
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("pattern csv: empty input");
  std::stringstream header(line);
  std::string field;
  bool first = true;
  while (std::getline(header, field, ',')) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) throw std::runtime_error("pattern csv: malformed header field: " + field);
    const std::string key = field.substr(0, eq);
    const std::string value = field.substr(eq + 1);
    if (first) {
      if (key != "kind") throw std::runtime_error("pattern csv: header must start with kind=");
      p.kind = kind_from_name(value);
      first = false;
    } else if (key == "seed") {
      p.seed = std::stoull(value);
    } else {
      p.params.emplace_back(key, std::stod(value));
    }
  }
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw std::runtime_error("pattern csv: malformed node row: " + line);
    p.nodes.push_back({std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1))});
  }
  return p;
}

SamplingPattern read_csv_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open for reading: " + path);
  return read_csv(is);
}

}  // namespace framerecon::patterns
