#pragma once

// Maximal layers (non-dominated sorting): L_1 = Max(input),
// L_k = Max(input minus L_1..L_{k-1}).

#include <cstddef>
#include <span>
#include <vector>

#include "maxima/point.hpp"

namespace maxima {

/// Layers as sets of Point::index values, each sorted ascending.
struct LayerPartition {
  std::vector<std::vector<std::size_t>> layers;

  std::size_t count() const noexcept { return layers.size(); }
  friend bool operator==(const LayerPartition&, const LayerPartition&) = default;
};

enum class PeelEngine { Maxima, Naive };

/// Repeated maxima extraction. The Maxima engine reverses the remainder after
/// each layer; the Naive engine keeps the remainder in its current order.
LayerPartition peel_layers(std::span<const Point> points, PeelEngine engine, CostCounter& counter);

/// Per-point dominator count and dominated set, as used by NSGA-II sorting.
struct DebState {
  std::vector<std::size_t> rank;                    // number of dominators
  std::vector<std::vector<std::size_t>> dominated;  // positions dominated by each point
};

/// All-pairs pass building DebState (positions refer to `points`).
DebState deb_state(std::span<const Point> points, CostCounter& counter);

/// NSGA-II style layering: peel zero-rank points, decrement the ranks of what
/// they dominate, repeat.
LayerPartition deb_layers(std::span<const Point> points, CostCounter& counter);

}  // namespace maxima
