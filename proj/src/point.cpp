#include "maxima/point.hpp"

#include <cmath>

namespace maxima {

namespace {

void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b) {
    throw ContractViolation("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

std::string to_string(DominanceOutcome outcome) {
  switch (outcome) {
    case DominanceOutcome::FirstDominates: return "FirstDominates";
    case DominanceOutcome::SecondDominates: return "SecondDominates";
    case DominanceOutcome::Incomparable: return "Incomparable";
    case DominanceOutcome::Equal: return "Equal";
  }
  return "?";
}

bool dominates(std::span<const double> p, std::span<const double> q, CostCounter& counter) {
  require_same_dim(p.size(), q.size());
  bool strict = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    ++counter.scalar_comparisons;
    if (p[i] < q[i]) return false;
    if (p[i] > q[i]) strict = true;
  }
  return strict;
}

DominanceOutcome compare(std::span<const double> p, std::span<const double> q, CostCounter& counter) {
  require_same_dim(p.size(), q.size());
  bool p_ahead = false;
  bool q_ahead = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    ++counter.scalar_comparisons;
    if (p[i] > q[i]) {
      p_ahead = true;
    } else if (p[i] < q[i]) {
      q_ahead = true;
    }
    if (p_ahead && q_ahead) return DominanceOutcome::Incomparable;
  }
  if (p_ahead) return DominanceOutcome::FirstDominates;
  if (q_ahead) return DominanceOutcome::SecondDominates;
  return DominanceOutcome::Equal;
}

std::vector<Point> naive_maxima(std::span<const Point> points, CostCounter& counter) {
  std::vector<Point> result;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (i != j && dominates(points[j], points[i], counter)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) result.push_back(points[i]);
  }
  return result;
}

std::vector<Point> make_points(const std::vector<std::vector<double>>& rows) {
  std::vector<Point> points;
  points.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty()) throw ContractViolation("point " + std::to_string(i) + " has no coordinates");
    if (rows[i].size() != rows.front().size()) {
      throw ContractViolation("point " + std::to_string(i) + " has dimension " +
                              std::to_string(rows[i].size()) + ", expected " +
                              std::to_string(rows.front().size()));
    }
    for (double x : rows[i]) {
      if (!std::isfinite(x)) throw ContractViolation("point " + std::to_string(i) + " has a non-finite coordinate");
    }
    points.emplace_back(rows[i], i);
  }
  return points;
}

double l1_norm(std::span<const double> coords) noexcept {
  double sum = 0.0;
  for (double x : coords) sum += std::fabs(x);
  return sum;
}

}  // namespace maxima
