#include "framerecon/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace framerecon::io {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string json_number_or_nan(double v) {
  if (std::isnan(v)) return "\"NaN\"";
  if (std::isinf(v)) return v > 0 ? "\"Inf\"" : "\"-Inf\"";
  return fmt17(v);
}

namespace {
std::pair<double, double> value_range(const std::vector<double>& values) {
  double lo = values.empty() ? 0.0 : values[0];
  double hi = lo;
  for (const double v : values) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return {lo, hi};
}

unsigned char to_byte(double v, double lo, double hi) {
  if (!(hi > lo)) return 0;
  const double t = (v - lo) / (hi - lo);
  return static_cast<unsigned char>(std::clamp(t * 255.0 + 0.5, 0.0, 255.0));
}
}  // namespace

void write_pgm(const ImageField& field, const std::string& path) {
  if (field.width * field.height != static_cast<int>(field.values.size()))
    throw std::invalid_argument("write_pgm: size mismatch");
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  os << "P5\n" << field.width << " " << field.height << "\n255\n";
  const auto [lo, hi] = value_range(field.values);
  for (const double v : field.values) {
    const unsigned char b = to_byte(v, lo, hi);
    os.write(reinterpret_cast<const char*>(&b), 1);
  }
}

void write_ppm(const ImageField& field, const std::string& path) {
  if (field.width * field.height != static_cast<int>(field.values.size()))
    throw std::invalid_argument("write_ppm: size mismatch");
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  os << "P6\n" << field.width << " " << field.height << "\n255\n";
  const auto [lo, hi] = value_range(field.values);
  for (const double v : field.values) {
    const unsigned char b = to_byte(v, lo, hi);
    const unsigned char rgb[3] = {b, static_cast<unsigned char>(b / 2),
                                  static_cast<unsigned char>(255 - b)};
    os.write(reinterpret_cast<const char*>(rgb), 3);
  }
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  os << contents;
}

}  // namespace framerecon::io
