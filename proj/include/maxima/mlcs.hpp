#pragma once

// Multiple longest common subsequence by dominant-point layers.
//
// A match is a tuple of 1-based positions, one per string, all holding the
// same symbol. Layer C_1 holds the minimal matches reachable from the virtual
// origin (0,..,0); C_{k+1} holds the minima of the successors of C_k. The LCS
// length is the number of non-empty layers.

#include <array>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "maxima/point.hpp"

namespace maxima {

struct MatchPoint {
  static constexpr std::size_t no_parent = std::numeric_limits<std::size_t>::max();

  std::vector<std::size_t> positions;  // 1-based, one per string
  char symbol = '\0';
  std::size_t parent = no_parent;  // position in the previous layer

  friend bool operator==(const MatchPoint& a, const MatchPoint& b) {
    return a.positions == b.positions && a.symbol == b.symbol;
  }
};

/// next(t, c, i): smallest 1-based j > i with s_t[j] == c. Only symbols that
/// occur in every string are tracked; anything else has no successor.
class SuccessorTable {
 public:
  static constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

  explicit SuccessorTable(std::span<const std::string> strings);

  std::size_t next(std::size_t string, char symbol, std::size_t position) const;
  /// Symbols common to all strings, ascending by byte value.
  const std::string& alphabet() const noexcept { return alphabet_; }
  std::size_t strings() const noexcept { return tables_.size(); }
  std::size_t length(std::size_t string) const noexcept { return lengths_[string]; }

 private:
  std::string alphabet_;
  std::array<int, 256> symbol_id_{};
  std::vector<std::size_t> lengths_;
  // tables_[t][i * sigma + id] for i in 0..len_t
  std::vector<std::vector<std::size_t>> tables_;
};

struct LcsResult {
  std::size_t length = 0;
  std::string witness;
  std::vector<std::size_t> layer_sizes;
  std::vector<std::vector<MatchPoint>> layers;  // each sorted by positions
};

enum class LcsEngine { HakataImai, Maxima };

/// Minima (componentwise-smaller orientation) by the mark-based double loop.
/// Output in input order.
std::vector<Point> hakata_imai_minima(std::span<const Point> points, CostCounter& counter);

/// Minima via the k-d tree engine on coordinate-negated points.
std::vector<Point> kd_minima(std::span<const Point> points, CostCounter& counter);

LcsResult mlcs(std::span<const std::string> strings, LcsEngine engine, CostCounter& counter);

}  // namespace maxima
