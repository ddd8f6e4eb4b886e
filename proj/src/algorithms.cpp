#include "maxima/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <list>
#include <string>

namespace maxima {

SieveState::SieveState(const Point& p) : sieve(p), norm(l1_norm(p.coords)) {}

bool SieveState::screen(const Point& p, CostCounter& counter) {
  if (dominates(sieve, p, counter)) return true;
  const double candidate = l1_norm(p.coords);
  ++counter.scalar_comparisons;
  if (norm < candidate) {
    sieve = p;
    norm = candidate;
  }
  return false;
}

std::optional<std::size_t> prune_index(const PruneTrigger& trigger, std::size_t n) {
  std::size_t at = 0;
  if (const auto* frac = std::get_if<PruneAtFraction>(&trigger)) {
    if (frac->lambda <= 1) throw ContractViolation("prune fraction lambda must be an integer > 1");
    at = n / static_cast<std::size_t>(frac->lambda);
  } else if (const auto* power = std::get_if<PruneAtPower>(&trigger)) {
    if (!(power->delta > 0.0 && power->delta < 1.0)) {
      throw ContractViolation("prune power delta must lie in (0,1)");
    }
    // Nudge so exact powers such as 1000^(2/3) do not round down.
    at = static_cast<std::size_t>(std::floor(std::pow(static_cast<double>(n), power->delta) * (1.0 + 1e-12)));
  } else {
    return std::nullopt;
  }
  if (at == 0 || at > n) return std::nullopt;
  return at;
}

std::pair<KdTree, RecordList> prune(const RecordList& record_list, std::size_t dim, CostCounter& counter) {
  KdTree tree(dim);
  RecordList survivors;
  for (auto it = record_list.entries.rbegin(); it != record_list.entries.rend(); ++it) {
    if (tree.empty() || !tree.is_dominated(*it, counter)) {
      tree.insert(*it, counter);
      survivors.entries.push_back(*it);
    }
  }
  std::reverse(survivors.entries.begin(), survivors.entries.end());
  return {std::move(tree), std::move(survivors)};
}

namespace {

RecordList phase_one(std::span<const Point> points, const MaximaConfig& config, CostCounter& counter,
                     PhaseOneStats& stats) {
  RecordList list;
  if (points.empty()) return list;
  const std::size_t dim = points.front().dim();
  KdTree tree(dim);
  tree.insert(points.front(), counter);
  list.entries.push_back(points.front());
  stats.records_inserted = 1;

  std::optional<SieveState> sieve;
  if (config.use_sieve) sieve.emplace(points.front());

  const auto trigger = prune_index(config.prune, points.size());
  auto maybe_prune = [&](std::size_t i) {
    if (trigger && *trigger == i && !stats.pruned) {
      auto [fresh, survivors] = prune(list, dim, counter);
      tree = std::move(fresh);
      list = std::move(survivors);
      stats.pruned = true;
    }
  };
  maybe_prune(1);

  for (std::size_t i = 2; i <= points.size(); ++i) {
    const Point& p = points[i - 1];
    if (sieve && sieve->screen(p, counter)) {
      ++stats.sieve_discards;
    } else if (!tree.is_dominated(p, counter)) {
      tree.insert(p, counter);
      list.entries.push_back(p);
      ++stats.records_inserted;
    }
    maybe_prune(i);
  }
  return list;
}

// Records of `seq` scanned back to front; results in scan order.
std::vector<Point> records_reversed(const std::vector<Point>& seq, std::size_t dim, CostCounter& counter) {
  std::vector<Point> out;
  if (seq.empty()) return out;
  KdTree tree(dim);
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    if (tree.empty() || !tree.is_dominated(*it, counter)) {
      tree.insert(*it, counter);
      out.push_back(*it);
    }
  }
  return out;
}

}  // namespace

RecordList records(std::span<const Point> points, bool use_sieve, CostCounter& counter) {
  PhaseOneStats stats;
  return phase_one(points, MaximaConfig{use_sieve, NoPrune{}}, counter, stats);
}

std::vector<Point> two_phase_maxima(std::span<const Point> points, const MaximaConfig& config,
                                    CostCounter& counter, PhaseOneStats* stats) {
  PhaseOneStats local;
  RecordList list = phase_one(points, config, counter, local);
  if (stats) *stats = local;
  if (list.entries.empty()) return {};
  return records_reversed(list.entries, points.front().dim(), counter);
}

std::vector<Point> online_maxima(std::span<const Point> points, CostCounter& counter,
                                 const OnlineObserver& observer, std::size_t* inserted) {
  if (points.empty()) return {};
  KdTree tree(points.front().dim(), BoundsMode::UpperAndLower);
  LiveSet live;
  std::size_t accepted = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Point& p = points[i];
    if (i == 0 || !tree.is_dominated(p, counter)) {
      tree.delete_dominated(p, live, counter);
      tree.insert(p, counter);
      if (!live.insert(p.index).second) {
        throw ContractViolation("duplicate point index " + std::to_string(p.index) + " in online stream");
      }
      ++accepted;
    }
    if (observer) observer(i + 1, live);
  }
  if (inserted) *inserted = accepted;
  std::vector<Point> out;
  out.reserve(live.size());
  for (std::size_t node = 0; node < tree.size(); ++node) {
    if (!tree.marked(node)) out.push_back(tree.node_point(node));
  }
  return out;
}

std::vector<Point> list_maxima(std::span<const Point> points, bool move_to_front, CostCounter& counter,
                               std::size_t* inserted) {
  std::list<std::size_t> current;
  std::size_t accepted = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Point& p = points[i];
    bool rejected = false;
    for (auto it = current.begin(); it != current.end();) {
      const DominanceOutcome outcome = compare(points[*it], p, counter);
      if (outcome == DominanceOutcome::FirstDominates) {
        rejected = true;
        if (move_to_front) current.splice(current.begin(), current, it);
        break;
      }
      if (outcome == DominanceOutcome::SecondDominates) {
        it = current.erase(it);
      } else {
        ++it;
      }
    }
    if (!rejected) {
      current.push_back(i);
      ++accepted;
    }
  }
  if (inserted) *inserted = accepted;
  std::vector<Point> out;
  out.reserve(current.size());
  for (std::size_t i : current) out.push_back(points[i]);
  return out;
}

}  // namespace maxima
