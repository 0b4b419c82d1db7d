#include "hiernote/common.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hiernote {

std::uint64_t fnv1a64(const void* data, std::size_t size) {
  const auto* bytes = static_cast<const unsigned char*>(data);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::size_t i = 0; i < size; ++i) {
    h ^= bytes[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t fnv1a64(const std::string& s) { return fnv1a64(s.data(), s.size()); }

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write file: " + path);
  out << content;
  if (!out) throw ConfigError("write failed: " + path);
}

std::uint64_t file_checksum(const std::string& path) {
  return fnv1a64(read_text_file(path));
}

std::string format_metric(double value) {
  // Scale to thousandths and resolve exact halves to the even neighbour.
  // The half test uses a small window so that values like 0.6245, which land a
  // few ulps off the true half after scaling, still take the half path.
  double scaled = value * 1000.0;
  double lower = std::floor(scaled);
  double frac = scaled - lower;
  long long units;
  if (std::fabs(frac - 0.5) < 1e-9) {
    auto lo = static_cast<long long>(lower);
    units = (lo % 2 == 0) ? lo : lo + 1;
  } else {
    units = static_cast<long long>(std::llround(scaled));
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%s0.%03lld",
                units < 0 ? "-" : "", units < 0 ? -units : units);
  std::string s = buf;
  // Values >= 1 (e.g. perfect scores) still need the integer part.
  if (units >= 1000 || units <= -1000) {
    long long mag = units < 0 ? -units : units;
    std::snprintf(buf, sizeof(buf), "%s%lld.%03lld",
                  units < 0 ? "-" : "", mag / 1000, mag % 1000);
    s = buf;
  }
  return s;
}

double median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median of empty set");
  std::sort(values.begin(), values.end());
  std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

std::string lowercase_ascii(const std::string& s) {
  std::string out = s;
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace hiernote
