#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "framerecon/types.hpp"

namespace framerecon::patterns {

enum class PatternKind { Jittered, Rosette, Spiral, Polar, IntegerGrid };

const char* kind_name(PatternKind k);
PatternKind kind_from_name(const std::string& name);

struct JitterParams {
  int m1 = 1, m2 = 1;
  double bound = 0.25;  // per-coordinate jitter magnitude; frame guarantee holds for <= 1/4
};

struct RosetteParams {
  double k_max = 1.0;
  double w1 = 1.0, w2 = 1.0;
  std::vector<double> t_values;
};

struct SpiralParams {
  double c = 1.0;
  std::vector<double> theta_values;
};

struct PolarParams {
  double c = 1.0;
  int R = 1, T = 1;
};

/// A finite family of frequency nodes plus everything needed to regenerate
/// it bit-identically: kind, parameter record, and the jitter seed.
struct SamplingPattern {
  PatternKind kind = PatternKind::IntegerGrid;
  std::vector<Node2> nodes;
  /// Grid index per node for grid-like kinds (Jittered / IntegerGrid);
  /// empty otherwise.
  std::vector<GridIndex> grid_indices;
  /// Kind parameters, serialized as key=value for the CSV header.
  std::vector<std::pair<std::string, double>> params;
  std::uint64_t seed = 0;
  std::string warning;  // nonempty when generated outside a guarantee range

  int size() const { return static_cast<int>(nodes.size()); }
};

/// j + eps_j over the centered m1 x m2 grid, eps_j i.i.d. uniform on
/// [-bound, bound]^2. Each node's jitter is derived only from (seed, j), so
/// the result is independent of enumeration order. bound > 1/4 generates
/// with a warning (the frame guarantee is void); bound < 0 throws.
SamplingPattern generate_jittered(const JitterParams& params, std::uint64_t seed);

/// Exact integer grid (jittered with zero bound, without the PRNG).
SamplingPattern generate_integer_grid(int m1, int m2);

/// k_max * (cos(w1 t) cos(w2 t), cos(w1 t) sin(w2 t)) for each t.
SamplingPattern generate_rosette(double k_max, double w1, double w2,
                                 const std::vector<double>& t_values);

/// (c t cos(2 pi t), c t sin(2 pi t)) for each theta value t > 0.
SamplingPattern generate_spiral(double c, const std::vector<double>& theta_values);

/// (c r cos th, c r sin th) over r = j1/R in [-1/2,1/2), th = pi j2/T in
/// [-pi/2, pi/2). The source formula prints cos in both slots; the second
/// coordinate uses sin here (see README).
SamplingPattern generate_polar(double c, int R, int T);

/// Presets used by the CLI and the table harness: M = m^2 nodes covering
/// the same frequency box as the m x m integer grid (radius ~ m/2).
SamplingPattern preset(PatternKind kind, int m_per_axis, double jitter_bound,
                       std::uint64_t seed);

void write_csv(const SamplingPattern& p, std::ostream& os);
void write_csv_file(const SamplingPattern& p, const std::string& path);
SamplingPattern read_csv(std::istream& is);
SamplingPattern read_csv_file(const std::string& path);

}  // namespace framerecon::patterns
