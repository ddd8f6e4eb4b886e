#include "maxima/kdtree.hpp"

#include <algorithm>
#include <string>

namespace maxima {

namespace {

void require_dim(std::size_t expected, std::size_t got) {
  if (expected != got) {
    throw ContractViolation("point of dimension " + std::to_string(got) + " used with a " +
                            std::to_string(expected) + "-d tree");
  }
}

}  // namespace

KdTree::KdTree(std::size_t dim, BoundsMode mode) : dim_(dim), mode_(mode) {
  if (dim == 0) throw ContractViolation("k-d tree dimension must be at least 1");
}

KdTree KdTree::rebuild_from(std::span<const Point> points, std::size_t dim, CostCounter& counter,
                            BoundsMode mode) {
  KdTree tree(dim, mode);
  for (const Point& p : points) tree.insert(p, counter);
  return tree;
}

std::size_t KdTree::add_node(const Point& p, std::size_t discriminator) {
  const std::size_t id = index_.size();
  coords_.insert(coords_.end(), p.coords.begin(), p.coords.end());
  upper_.insert(upper_.end(), p.coords.begin(), p.coords.end());
  if (mode_ == BoundsMode::UpperAndLower) lower_.insert(lower_.end(), p.coords.begin(), p.coords.end());
  index_.push_back(p.index);
  disc_.push_back(discriminator);
  left_.push_back(npos);
  right_.push_back(npos);
  marked_.push_back(0);
  return id;
}

void KdTree::widen(std::size_t node, const Point& p, CostCounter& counter) {
  double* up = upper_.data() + node * dim_;
  for (std::size_t i = 0; i < dim_; ++i) {
    ++counter.scalar_comparisons;
    if (p.coords[i] > up[i]) up[i] = p.coords[i];
  }
  if (mode_ == BoundsMode::UpperAndLower) {
    double* lo = lower_.data() + node * dim_;
    for (std::size_t i = 0; i < dim_; ++i) {
      ++counter.scalar_comparisons;
      if (p.coords[i] < lo[i]) lo[i] = p.coords[i];
    }
  }
}

void KdTree::insert(const Point& p, CostCounter& counter) {
  require_dim(dim_, p.dim());
  if (empty()) {
    add_node(p, 1);
    return;
  }
  std::size_t cur = 0;
  for (;;) {
    widen(cur, p, counter);
    const std::size_t axis = disc_[cur] - 1;
    const std::size_t next_disc = disc_[cur] % dim_ + 1;
    ++counter.scalar_comparisons;
    if (p.coords[axis] >= coords_[cur * dim_ + axis]) {
      if (right_[cur] == npos) {
        const std::size_t id = add_node(p, next_disc);
        right_[cur] = id;
        return;
      }
      cur = right_[cur];
    } else {
      if (left_[cur] == npos) {
        const std::size_t id = add_node(p, next_disc);
        left_[cur] = id;
        return;
      }
      cur = left_[cur];
    }
  }
}

bool KdTree::is_dominated(const Point& p, CostCounter& counter) const {
  require_dim(dim_, p.dim());
  if (empty()) return false;
  const std::span<const double> q(p.coords);

  // Explicit-stack form of the recursive search. The right child is examined
  // only after the left subtree came back empty, and the popped frame is
  // replaced by its right child.
  struct Frame {
    std::size_t node;
    bool left_done;
  };
  thread_local std::vector<Frame> stack;
  stack.clear();
  ++counter.dominated_calls;
  if (dominates(point(0), q, counter)) return true;
  stack.push_back({0, false});
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (!top.left_done) {
      top.left_done = true;
      const std::size_t l = left_[top.node];
      if (l != npos && dominates(upper(l), q, counter)) {
        ++counter.dominated_calls;
        if (dominates(point(l), q, counter)) return true;
        stack.push_back({l, false});
      }
      continue;
    }
    const std::size_t r = right_[top.node];
    stack.pop_back();
    if (r != npos && dominates(upper(r), q, counter)) {
      ++counter.dominated_calls;
      if (dominates(point(r), q, counter)) return true;
      stack.push_back({r, false});
    }
  }
  return false;
}

void KdTree::delete_dominated(const Point& p, LiveSet& live, CostCounter& counter) {
  if (mode_ != BoundsMode::UpperAndLower) {
    throw ContractViolation("delete_dominated needs lower bounds (UpperAndLower mode)");
  }
  require_dim(dim_, p.dim());
  if (empty()) return;
  const std::span<const double> q(p.coords);
  thread_local std::vector<std::size_t> stack;
  stack.assign(1, 0);
  while (!stack.empty()) {
    const std::size_t r = stack.back();
    stack.pop_back();
    if (dominates(q, point(r), counter) && !marked_[r]) {
      live.erase(index_[r]);
      marked_[r] = 1;
    }
    // Pushed right first so the left subtree is swept first.
    const std::size_t rt = right_[r];
    if (rt != npos && dominates(q, lower(rt), counter)) stack.push_back(rt);
    const std::size_t lt = left_[r];
    if (lt != npos && dominates(q, lower(lt), counter)) stack.push_back(lt);
  }
}

Point KdTree::node_point(std::size_t node) const {
  auto c = point(node);
  return Point(std::vector<double>(c.begin(), c.end()), index_[node]);
}

}  // namespace maxima
