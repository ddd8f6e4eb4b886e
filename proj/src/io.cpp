#include "maxima/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

namespace maxima {

namespace {

std::string with_line(const std::string& what, std::size_t line) {
  return line == 0 ? what : "line " + std::to_string(line) + ": " + what;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return in;
}

}  // namespace

InputError::InputError(const std::string& what, std::size_t line)
    : std::runtime_error(with_line(what, line)), line_(line) {}

std::vector<Point> read_points(std::istream& in) {
  std::vector<Point> points;
  std::size_t dim = 0;
  std::string text;
  std::size_t line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    std::vector<double> coords;
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && is_space(text[i])) ++i;
      if (i == text.size()) break;
      std::size_t j = i;
      while (j < text.size() && !is_space(text[j])) ++j;
      const char* first = text.data() + i;
      const char* last = text.data() + j;
      if (*first == '+') ++first;  // from_chars rejects a leading plus
      double value = 0.0;
      const auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc() || ptr != last) {
        throw InputError("not a number: '" + text.substr(i, j - i) + "'", line_no);
      }
      if (!std::isfinite(value)) throw InputError("non-finite coordinate", line_no);
      coords.push_back(value);
      i = j;
    }
    if (coords.empty()) continue;
    if (dim == 0) {
      dim = coords.size();
    } else if (coords.size() != dim) {
      throw InputError("expected " + std::to_string(dim) + " coordinates, found " + std::to_string(coords.size()),
                       line_no);
    }
    const std::size_t index = points.size();
    points.emplace_back(std::move(coords), index);
  }
  return points;
}

std::vector<Point> read_points_file(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  return read_points(in);
}

std::string format_point(const Point& p) {
  std::string out;
  char buf[64];
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    if (i) out.push_back('\t');
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, p.coords[i]);
    out.append(buf, ptr);
  }
  return out;
}

void write_points(std::ostream& out, std::span<const Point> points) {
  for (const Point& p : points) out << format_point(p) << '\n';
}

std::vector<std::string> read_sequences(std::istream& in) {
  std::vector<std::string> seqs;
  std::string text;
  std::size_t line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.find_first_not_of(" \t") == std::string::npos) continue;
    for (char c : text) {
      if (is_space(c)) throw InputError("whitespace inside a sequence", line_no);
      if (static_cast<unsigned char>(c) > 127) throw InputError("non-ASCII byte in sequence", line_no);
    }
    seqs.push_back(text);
  }
  return seqs;
}

std::vector<std::string> read_sequences_file(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  return read_sequences(in);
}

}  // namespace maxima
