#pragma once

// Slow reference implementations used only by tests. None of them touch the
// library's counters or data structures.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "maxima/kdtree.hpp"
#include "maxima/point.hpp"

namespace oracle {

using maxima::Point;

inline bool dom(const std::vector<double>& p, const std::vector<double>& q) {
  bool strict = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < q[i]) return false;
    if (p[i] > q[i]) strict = true;
  }
  return strict;
}

// Input positions of the maxima, sorted.
inline std::vector<std::size_t> maxima_positions(const std::vector<Point>& pts) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool hit = false;
    for (std::size_t j = 0; j < pts.size() && !hit; ++j) hit = dom(pts[j].coords, pts[i].coords);
    if (!hit) out.push_back(i);
  }
  return out;
}

// Points not dominated by any earlier point.
inline std::vector<std::size_t> record_positions(const std::vector<Point>& pts) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool hit = false;
    for (std::size_t j = 0; j < i && !hit; ++j) hit = dom(pts[j].coords, pts[i].coords);
    if (!hit) out.push_back(i);
  }
  return out;
}

inline std::vector<std::size_t> sorted_indices(const std::vector<Point>& pts) {
  std::vector<std::size_t> out;
  for (const Point& p : pts) out.push_back(p.index);
  std::sort(out.begin(), out.end());
  return out;
}

// Layer number (1-based) of every point: the longest dominance chain ending
// at it from above.
inline std::vector<std::size_t> layer_numbers(const std::vector<Point>& pts) {
  const std::size_t n = pts.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  // Sorting by decreasing coordinate sum puts every dominator first.
  auto sum = [&](std::size_t i) {
    double s = 0;
    for (double x : pts[i].coords) s += x;
    return s;
  };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sum(a) > sum(b); });
  std::vector<std::size_t> layer(n, 1);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      if (dom(pts[order[b]].coords, pts[order[a]].coords)) {
        layer[order[a]] = std::max(layer[order[a]], layer[order[b]] + 1);
      }
    }
  }
  return layer;
}

inline std::vector<std::vector<std::size_t>> layers(const std::vector<Point>& pts) {
  const std::vector<std::size_t> num = layer_numbers(pts);
  std::size_t k = 0;
  for (std::size_t x : num) k = std::max(k, x);
  std::vector<std::vector<std::size_t>> out(k);
  for (std::size_t i = 0; i < pts.size(); ++i) out[num[i] - 1].push_back(i);
  return out;
}

// Length of the longest strictly increasing subsequence (patience sorting).
inline std::size_t lis(const std::vector<double>& xs) {
  std::vector<double> tails;
  for (double x : xs) {
    auto it = std::lower_bound(tails.begin(), tails.end(), x);
    if (it == tails.end()) {
      tails.push_back(x);
    } else {
      *it = x;
    }
  }
  return tails.size();
}

// Multi-string LCS length by full d-dimensional dynamic programming.
inline std::size_t lcs_dp(const std::vector<std::string>& s) {
  const std::size_t d = s.size();
  std::vector<std::size_t> dims(d), stride(d);
  std::size_t total = 1;
  for (std::size_t t = d; t-- > 0;) {
    dims[t] = s[t].size() + 1;
    stride[t] = total;
    total *= dims[t];
  }
  std::vector<std::size_t> table(total, 0);
  std::vector<std::size_t> idx(d, 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rem = flat;
    bool zero = false;
    for (std::size_t t = 0; t < d; ++t) {
      idx[t] = rem / stride[t];
      rem %= stride[t];
      zero = zero || idx[t] == 0;
    }
    if (zero) continue;
    bool same = true;
    for (std::size_t t = 1; t < d && same; ++t) same = s[t][idx[t] - 1] == s[0][idx[0] - 1];
    if (same) {
      std::size_t back = flat;
      for (std::size_t t = 0; t < d; ++t) back -= stride[t];
      table[flat] = table[back] + 1;
    } else {
      std::size_t best = 0;
      for (std::size_t t = 0; t < d; ++t) best = std::max(best, table[flat - stride[t]]);
      table[flat] = best;
    }
  }
  return table[total - 1];
}

inline bool is_subsequence(const std::string& w, const std::string& s) {
  std::size_t i = 0;
  for (char c : s) {
    if (i < w.size() && w[i] == c) ++i;
  }
  return i == w.size();
}

inline long double harmonic_direct(std::uint64_t n, unsigned j) {
  long double s = 0;
  for (std::uint64_t i = n; i >= 1; --i) s += 1.0L / std::pow(static_cast<long double>(i), static_cast<int>(j));
  return s;
}

// Checks the partition property and recomputes every bounding box of the
// subtree rooted at `node`. Returns false on the first violation.
inline bool kd_invariants(const maxima::KdTree& tree, std::size_t node, std::vector<std::size_t>* members = nullptr) {
  if (node == maxima::KdTree::npos) return true;
  const std::size_t d = tree.dim();
  std::vector<std::size_t> sub{node};
  std::vector<std::size_t> left_nodes, right_nodes;
  if (!kd_invariants(tree, tree.left(node), &left_nodes)) return false;
  if (!kd_invariants(tree, tree.right(node), &right_nodes)) return false;
  const std::size_t k = tree.discriminator(node) - 1;
  const double split = tree.point(node)[k];
  for (std::size_t c : left_nodes) {
    if (!(tree.point(c)[k] < split)) return false;
  }
  for (std::size_t c : right_nodes) {
    if (!(tree.point(c)[k] >= split)) return false;
  }
  sub.insert(sub.end(), left_nodes.begin(), left_nodes.end());
  sub.insert(sub.end(), right_nodes.begin(), right_nodes.end());
  for (std::size_t i = 0; i < d; ++i) {
    double hi = tree.point(node)[i];
    double lo = hi;
    for (std::size_t c : sub) {
      hi = std::max(hi, tree.point(c)[i]);
      lo = std::min(lo, tree.point(c)[i]);
    }
    if (tree.upper(node)[i] != hi) return false;
    if (tree.mode() == maxima::BoundsMode::UpperAndLower && tree.lower(node)[i] != lo) return false;
  }
  if (members) *members = std::move(sub);
  return true;
}

// Random small-integer points: many ties and duplicates.
inline std::vector<Point> grid_points(std::mt19937_64& rng, std::size_t n, std::size_t d, int values) {
  std::uniform_int_distribution<int> coord(0, values - 1);
  std::vector<Point> pts;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> c(d);
    for (double& x : c) x = coord(rng);
    pts.emplace_back(std::move(c), i);
  }
  return pts;
}

}  // namespace oracle
