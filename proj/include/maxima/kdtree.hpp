#pragma once

// k-d tree over points with a per-subtree bounding box.
//
// Every node stores the componentwise max (upper bound) of its subtree, and in
// UpperAndLower mode also the componentwise min. A dominance query skips any
// child whose upper bound does not dominate the query; a deletion sweep skips
// any child whose lower bound is not dominated by the sweeping point.
//
// Nodes live in a flat arena in insertion order; node 0 is the root. No
// rebalancing is ever done, balance comes from the randomness of the input.

#include <cstddef>
#include <limits>
#include <span>
#include <unordered_set>
#include <vector>

#include "maxima/point.hpp"

namespace maxima {

enum class BoundsMode { UpperOnly, UpperAndLower };

/// Point indices (Point::index) of the currently unmarked nodes.
using LiveSet = std::unordered_set<std::size_t>;

class KdTree {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  explicit KdTree(std::size_t dim, BoundsMode mode = BoundsMode::UpperOnly);

  /// Builds a fresh tree by inserting `points` in order.
  static KdTree rebuild_from(std::span<const Point> points, std::size_t dim, CostCounter& counter,
                             BoundsMode mode = BoundsMode::UpperOnly);

  /// Descends from the root, widening bounds along the path. Equal
  /// discriminator coordinates go right. Costs one scalar comparison per
  /// level descended plus d per bound vector widened.
  void insert(const Point& p, CostCounter& counter);

  /// True iff some node (marked or not) dominates `p`. Each visited node is
  /// one Dominated call.
  bool is_dominated(const Point& p, CostCounter& counter) const;

  /// Marks every unmarked node dominated by `p` and erases its index from
  /// `live`. Requires UpperAndLower mode.
  void delete_dominated(const Point& p, LiveSet& live, CostCounter& counter);

  std::size_t dim() const noexcept { return dim_; }
  BoundsMode mode() const noexcept { return mode_; }
  std::size_t size() const noexcept { return index_.size(); }
  bool empty() const noexcept { return index_.empty(); }
  std::size_t root() const noexcept { return empty() ? npos : 0; }

  // Node accessors, by arena id.
  std::span<const double> point(std::size_t node) const noexcept {
    return {coords_.data() + node * dim_, dim_};
  }
  std::span<const double> upper(std::size_t node) const noexcept {
    return {upper_.data() + node * dim_, dim_};
  }
  /// Empty span in UpperOnly mode.
  std::span<const double> lower(std::size_t node) const noexcept {
    if (mode_ == BoundsMode::UpperOnly) return {};
    return {lower_.data() + node * dim_, dim_};
  }
  std::size_t point_index(std::size_t node) const noexcept { return index_[node]; }
  /// 1-based coordinate used to split at this node.
  std::size_t discriminator(std::size_t node) const noexcept { return disc_[node]; }
  std::size_t left(std::size_t node) const noexcept { return left_[node]; }
  std::size_t right(std::size_t node) const noexcept { return right_[node]; }
  bool marked(std::size_t node) const noexcept { return marked_[node] != 0; }

  Point node_point(std::size_t node) const;

 private:
  std::size_t add_node(const Point& p, std::size_t discriminator);
  void widen(std::size_t node, const Point& p, CostCounter& counter);

  std::size_t dim_;
  BoundsMode mode_;
  std::vector<double> coords_;
  std::vector<double> upper_;
  std::vector<double> lower_;
  std::vector<std::size_t> index_;
  std::vector<std::size_t> disc_;
  std::vector<std::size_t> left_;
  std::vector<std::size_t> right_;
  std::vector<unsigned char> marked_;
};

}  // namespace maxima
