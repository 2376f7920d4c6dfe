#pragma once

#include <string>
#include <vector>

#include "framerecon/types.hpp"

namespace framerecon::io {

/// Shortest decimal with 17 significant digits; round-trips doubles exactly
/// and keeps rerun output byte-identical.
std::string fmt17(double v);

/// JSON scalar for a possibly-NaN value: NaN serializes as the string "NaN"
/// (strict JSON has no NaN literal), everything else as a number.
std::string json_number_or_nan(double v);

struct ImageField {
  int width = 0;
  int height = 0;
  std::vector<double> values;  // row-major, height rows of width
};

/// 8-bit binary PGM, min-max scaled (constant fields map to 0).
void write_pgm(const ImageField& field, const std::string& path);

/// 8-bit binary PPM with a fixed blue-to-red ramp, min-max scaled.
void write_ppm(const ImageField& field, const std::string& path);

void write_text_file(const std::string& path, const std::string& contents);

}  // namespace framerecon::io
