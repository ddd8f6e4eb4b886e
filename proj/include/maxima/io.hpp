#pragma once

// Text formats: TSV points (one per line, tab- or space-separated decimals)
// and sequence files (one ASCII sequence per line).

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "maxima/point.hpp"

namespace maxima {

/// Malformed input (exit status 2). `line()` is 1-based, 0 when not tied to a line.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& what, std::size_t line = 0);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Dimension comes from the first non-blank line and is enforced after that.
/// Blank lines are skipped; NaN and infinities are rejected.
std::vector<Point> read_points(std::istream& in);
std::vector<Point> read_points_file(const std::string& path);

/// Shortest round-trip decimal for each coordinate, tab separated.
std::string format_point(const Point& p);
void write_points(std::ostream& out, std::span<const Point> points);

/// Blank lines are skipped; whitespace inside a sequence is an error.
std::vector<std::string> read_sequences(std::istream& in);
std::vector<std::string> read_sequences_file(const std::string& path);

}  // namespace maxima
