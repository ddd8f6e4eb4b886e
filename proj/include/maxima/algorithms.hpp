#pragma once

// Maxima-finding algorithms built on the record/k-d tree machinery, plus the
// list-based sequential baseline.
//
// A record is a point not dominated by any point earlier in the sequence.
// The maxima of a sequence are exactly the records of its reversed record
// list, which is what two_phase_maxima computes.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "maxima/kdtree.hpp"
#include "maxima/point.hpp"

namespace maxima {

/// Records q_1..q_k in input order.
struct RecordList {
  std::vector<Point> entries;
  std::size_t size() const noexcept { return entries.size(); }
};

/// The retained max-L1-norm point. The norm is the sum of absolute values.
struct SieveState {
  Point sieve;
  double norm = 0.0;

  explicit SieveState(const Point& p);
  /// True if the sieve dominates `p` (p should be skipped). Otherwise adopts
  /// `p` as the new sieve when its norm is strictly larger.
  bool screen(const Point& p, CostCounter& counter);
};

struct NoPrune {};
/// Prune once after processing point i = floor(n / lambda) (1-based).
struct PruneAtFraction {
  int lambda = 10;
};
/// Prune once after processing point i = floor(n^delta) (1-based).
struct PruneAtPower {
  double delta = 2.0 / 3.0;
};
using PruneTrigger = std::variant<NoPrune, PruneAtFraction, PruneAtPower>;

/// 1-based index after which the prune fires, or nullopt if it never does.
std::optional<std::size_t> prune_index(const PruneTrigger& trigger, std::size_t n);

struct MaximaConfig {
  bool use_sieve = false;
  PruneTrigger prune = NoPrune{};
};

/// Phase-1 bookkeeping visible to callers that want it.
struct PhaseOneStats {
  std::size_t records_inserted = 0;  // accepted points, the record count
  bool pruned = false;
  std::size_t sieve_discards = 0;
};

/// Records of `points` in input order, found with an UpperOnly k-d tree. With
/// `use_sieve`, a point dominated by the current sieve is skipped before the
/// tree is consulted.
RecordList records(std::span<const Point> points, bool use_sieve, CostCounter& counter);
inline RecordList records(std::span<const Point> points, CostCounter& counter) {
  return records(points, false, counter);
}

/// Rebuilds the record tree from the records in reverse order, keeping a
/// record only if the new tree does not already dominate it. The survivors
/// are the maxima of the records and come back in input order.
std::pair<KdTree, RecordList> prune(const RecordList& record_list, std::size_t dim, CostCounter& counter);

/// Phase 1 (records, optional sieve and one prune), then the records of the
/// reversed record list with a fresh tree. Output is in discovery order, i.e.
/// reverse record order.
std::vector<Point> two_phase_maxima(std::span<const Point> points, const MaximaConfig& config,
                                    CostCounter& counter, PhaseOneStats* stats = nullptr);

using OnlineObserver = std::function<void(std::size_t processed, const LiveSet& live)>;

/// Keeps the maxima of every prefix. Each arriving point that the tree does
/// not dominate sweeps out the points it dominates (marking them) and is then
/// inserted. `observer`, if set, sees the live set after every point.
/// Returns the final maxima in insertion order.
std::vector<Point> online_maxima(std::span<const Point> points, CostCounter& counter,
                                 const OnlineObserver& observer = {}, std::size_t* inserted = nullptr);

/// Linked-list sequential algorithm; `move_to_front` moves a dominator to the
/// list head when it rejects a point. Returns the list contents.
std::vector<Point> list_maxima(std::span<const Point> points, bool move_to_front, CostCounter& counter,
                               std::size_t* inserted = nullptr);

}  // namespace maxima
