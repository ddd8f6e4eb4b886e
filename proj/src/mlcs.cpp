#include "maxima/mlcs.hpp"

#include <algorithm>
#include <unordered_map>

#include "maxima/algorithms.hpp"

namespace maxima {

SuccessorTable::SuccessorTable(std::span<const std::string> strings) {
  symbol_id_.fill(-1);
  std::array<std::size_t, 256> seen_in{};
  for (const std::string& s : strings) {
    std::array<bool, 256> here{};
    for (char ch : s) here[static_cast<unsigned char>(ch)] = true;
    for (std::size_t c = 0; c < 256; ++c) seen_in[c] += here[c] ? 1 : 0;
  }
  for (std::size_t c = 0; c < 256; ++c) {
    if (!strings.empty() && seen_in[c] == strings.size()) {
      symbol_id_[c] = static_cast<int>(alphabet_.size());
      alphabet_.push_back(static_cast<char>(c));
    }
  }
  const std::size_t sigma = alphabet_.size();
  for (const std::string& s : strings) {
    const std::size_t len = s.size();
    lengths_.push_back(len);
    std::vector<std::size_t> table((len + 1) * sigma, none);
    // Row i holds next occurrences strictly after position i.
    for (std::size_t i = len; i-- > 0;) {
      std::copy_n(table.begin() + static_cast<std::ptrdiff_t>((i + 1) * sigma), sigma,
                  table.begin() + static_cast<std::ptrdiff_t>(i * sigma));
      const int id = symbol_id_[static_cast<unsigned char>(s[i])];
      if (id >= 0) table[i * sigma + static_cast<std::size_t>(id)] = i + 1;
    }
    tables_.push_back(std::move(table));
  }
}

std::size_t SuccessorTable::next(std::size_t string, char symbol, std::size_t position) const {
  const int id = symbol_id_[static_cast<unsigned char>(symbol)];
  if (id < 0 || position > lengths_[string]) return none;
  return tables_[string][position * alphabet_.size() + static_cast<std::size_t>(id)];
}

std::vector<Point> hakata_imai_minima(std::span<const Point> points, CostCounter& counter) {
  const std::size_t n = points.size();
  std::vector<char> marked(n, 0);
  std::vector<Point> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (marked[i]) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || marked[j]) continue;
      // In maxima orientation: SecondDominates means q_j >= q_i, so q_i is
      // the smaller one and q_j is not minimal.
      switch (compare(points[i], points[j], counter)) {
        case DominanceOutcome::SecondDominates: marked[j] = 1; break;
        case DominanceOutcome::FirstDominates: marked[i] = 1; break;
        default: break;
      }
    }
    if (!marked[i]) out.push_back(points[i]);
  }
  return out;
}

std::vector<Point> kd_minima(std::span<const Point> points, CostCounter& counter) {
  std::vector<Point> negated;
  negated.reserve(points.size());
  for (const Point& p : points) {
    std::vector<double> c(p.coords.size());
    std::transform(p.coords.begin(), p.coords.end(), c.begin(), [](double x) { return -x; });
    negated.emplace_back(std::move(c), p.index);
  }
  std::vector<Point> found = two_phase_maxima(negated, MaximaConfig{}, counter);
  for (Point& p : found) {
    for (double& x : p.coords) x = -x;
  }
  return found;
}

namespace {

struct PositionsHash {
  std::size_t operator()(const std::vector<std::size_t>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (std::size_t x : v) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// Successor candidates of `from` (or of the origin), deduplicated by position
// tuple. `from` is sorted, and a later generator overwrites the parent slot,
// so each candidate keeps its lexicographically largest (latest) generator.
std::vector<MatchPoint> successors(const std::vector<MatchPoint>& from, const SuccessorTable& table,
                                   bool from_origin) {
  std::vector<MatchPoint> out;
  std::unordered_map<std::vector<std::size_t>, std::size_t, PositionsHash> seen;
  const std::size_t d = table.strings();
  const std::size_t sources = from_origin ? 1 : from.size();
  for (std::size_t s = 0; s < sources; ++s) {
    for (char c : table.alphabet()) {
      std::vector<std::size_t> pos(d);
      bool ok = true;
      for (std::size_t t = 0; t < d && ok; ++t) {
        const std::size_t at = from_origin ? 0 : from[s].positions[t];
        pos[t] = table.next(t, c, at);
        ok = pos[t] != SuccessorTable::none;
      }
      if (!ok) continue;
      if (auto it = seen.find(pos); it != seen.end()) {
        out[it->second].parent = s;
        continue;
      }
      seen.emplace(pos, out.size());
      out.push_back(MatchPoint{std::move(pos), c, from_origin ? MatchPoint::no_parent : s});
    }
  }
  return out;
}

std::vector<MatchPoint> layer_minima(std::vector<MatchPoint> candidates, LcsEngine engine, CostCounter& counter) {
  std::vector<Point> pts;
  pts.reserve(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    std::vector<double> c(candidates[i].positions.begin(), candidates[i].positions.end());
    pts.emplace_back(std::move(c), i);
  }
  const std::vector<Point> minima =
      engine == LcsEngine::HakataImai ? hakata_imai_minima(pts, counter) : kd_minima(pts, counter);
  std::vector<MatchPoint> layer;
  layer.reserve(minima.size());
  for (const Point& p : minima) layer.push_back(std::move(candidates[p.index]));
  std::sort(layer.begin(), layer.end(),
            [](const MatchPoint& a, const MatchPoint& b) { return a.positions < b.positions; });
  return layer;
}

}  // namespace

LcsResult mlcs(std::span<const std::string> strings, LcsEngine engine, CostCounter& counter) {
  if (strings.size() < 2) throw ContractViolation("mlcs needs at least two strings");
  LcsResult result;
  for (const std::string& s : strings) {
    if (s.empty()) return result;
  }
  const SuccessorTable table(strings);
  std::vector<MatchPoint> candidates = successors({}, table, true);
  while (!candidates.empty()) {
    result.layers.push_back(layer_minima(std::move(candidates), engine, counter));
    candidates = successors(result.layers.back(), table, false);
  }
  result.length = result.layers.size();
  for (const auto& layer : result.layers) result.layer_sizes.push_back(layer.size());
  if (result.length == 0) return result;

  std::size_t at = 0;  // lexicographically smallest match of the last layer
  for (std::size_t k = result.length; k-- > 0;) {
    const MatchPoint& m = result.layers[k][at];
    result.witness.push_back(m.symbol);
    at = m.parent;
  }
  std::reverse(result.witness.begin(), result.witness.end());
  return result;
}

}  // namespace maxima
