#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hiernote {

// Configuration / input-file problems. CLI maps these to exit code 2.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed data encountered while parsing an artifact file.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& path, std::size_t line, const std::string& what)
      : std::runtime_error(path + ":" + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

// Non-finite loss during training; the run is aborted and recorded.
class DivergenceError : public std::runtime_error {
public:
  explicit DivergenceError(const std::string& what) : std::runtime_error(what) {}
};

// FNV-1a, used for file checksums and config hashes in run manifests.
std::uint64_t fnv1a64(const void* data, std::size_t size);
std::uint64_t fnv1a64(const std::string& s);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
std::uint64_t file_checksum(const std::string& path);

// Fixed three-decimal rendering with round-half-even, e.g. 0.6245 -> "0.624".
std::string format_metric(double value);

// Median with the usual even-count average; input copied and sorted.
double median(std::vector<double> values);

std::string lowercase_ascii(const std::string& s);

}  // namespace hiernote
