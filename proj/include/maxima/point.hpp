#pragma once

// Points, the dominance order and comparison accounting.
//
// Orientation: p dominates q when p - q is coordinatewise nonnegative and not
// identically zero. Equal points never dominate each other, so duplicates can
// both be maxima.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace maxima {

/// Raised when a caller breaks a documented precondition (dimension mismatch,
/// wrong tree mode, out-of-domain arguments).
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Point {
  std::vector<double> coords;
  std::size_t index = 0;  // position in the original input

  Point() = default;
  Point(std::vector<double> c, std::size_t idx) : coords(std::move(c)), index(idx) {}
  Point(std::initializer_list<double> c, std::size_t idx = 0) : coords(c), index(idx) {}

  std::size_t dim() const noexcept { return coords.size(); }
  double operator[](std::size_t i) const noexcept { return coords[i]; }

  friend bool operator==(const Point&, const Point&) = default;
};

/// Tally threaded through every algorithm run. Never shared between runs.
struct CostCounter {
  std::uint64_t scalar_comparisons = 0;
  std::uint64_t dominated_calls = 0;

  CostCounter& operator+=(const CostCounter& o) noexcept {
    scalar_comparisons += o.scalar_comparisons;
    dominated_calls += o.dominated_calls;
    return *this;
  }
};

enum class DominanceOutcome { FirstDominates, SecondDominates, Incomparable, Equal };

std::string to_string(DominanceOutcome outcome);

/// True iff `p` dominates `q`. Coordinates are scanned in index order and the
/// scan stops at the first coordinate with p_i < q_i; every coordinate looked
/// at costs one scalar comparison.
bool dominates(std::span<const double> p, std::span<const double> q, CostCounter& counter);

inline bool dominates(const Point& p, const Point& q, CostCounter& counter) {
  return dominates(std::span<const double>(p.coords), std::span<const double>(q.coords), counter);
}

/// Single-pass classification of an ordered pair. Stops as soon as both
/// directions have a strict coordinate (Incomparable).
DominanceOutcome compare(std::span<const double> p, std::span<const double> q, CostCounter& counter);

inline DominanceOutcome compare(const Point& p, const Point& q, CostCounter& counter) {
  return compare(std::span<const double>(p.coords), std::span<const double>(q.coords), counter);
}

/// Pairwise double loop: q_i is kept unless some q_j (j != i) dominates it.
/// Output follows input order.
std::vector<Point> naive_maxima(std::span<const Point> points, CostCounter& counter);

/// Wraps raw rows as points indexed 0..n-1, rejecting ragged or non-finite rows.
std::vector<Point> make_points(const std::vector<std::vector<double>>& rows);

double l1_norm(std::span<const double> coords) noexcept;

}  // namespace maxima
