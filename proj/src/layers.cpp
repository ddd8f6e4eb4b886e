#include "maxima/layers.hpp"

#include <algorithm>
#include <unordered_set>

#include "maxima/algorithms.hpp"

namespace maxima {

namespace {

std::vector<std::size_t> sorted_indices(const std::vector<Point>& pts) {
  std::vector<std::size_t> ids;
  ids.reserve(pts.size());
  for (const Point& p : pts) ids.push_back(p.index);
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace

LayerPartition peel_layers(std::span<const Point> points, PeelEngine engine, CostCounter& counter) {
  LayerPartition partition;
  std::vector<Point> remainder(points.begin(), points.end());
  while (!remainder.empty()) {
    std::vector<Point> layer = engine == PeelEngine::Maxima
                                   ? two_phase_maxima(remainder, MaximaConfig{}, counter)
                                   : naive_maxima(remainder, counter);
    std::unordered_set<std::size_t> taken;
    taken.reserve(layer.size());
    for (const Point& p : layer) taken.insert(p.index);
    std::erase_if(remainder, [&](const Point& p) { return taken.contains(p.index); });
    if (engine == PeelEngine::Maxima) std::reverse(remainder.begin(), remainder.end());
    partition.layers.push_back(sorted_indices(layer));
  }
  return partition;
}

DebState deb_state(std::span<const Point> points, CostCounter& counter) {
  DebState state;
  const std::size_t n = points.size();
  state.rank.assign(n, 0);
  state.dominated.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      switch (compare(points[i], points[j], counter)) {
        case DominanceOutcome::FirstDominates:
          state.dominated[i].push_back(j);
          ++state.rank[j];
          break;
        case DominanceOutcome::SecondDominates:
          state.dominated[j].push_back(i);
          ++state.rank[i];
          break;
        default:
          break;
      }
    }
  }
  return state;
}

LayerPartition deb_layers(std::span<const Point> points, CostCounter& counter) {
  DebState state = deb_state(points, counter);
  LayerPartition partition;
  std::vector<std::size_t> front;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (state.rank[i] == 0) front.push_back(i);
  }
  while (!front.empty()) {
    std::vector<std::size_t> next;
    std::vector<std::size_t> ids;
    ids.reserve(front.size());
    for (std::size_t i : front) {
      ids.push_back(points[i].index);
      for (std::size_t j : state.dominated[i]) {
        if (--state.rank[j] == 0) next.push_back(j);
      }
    }
    std::sort(ids.begin(), ids.end());
    partition.layers.push_back(std::move(ids));
    front = std::move(next);
  }
  return partition;
}

}  // namespace maxima
