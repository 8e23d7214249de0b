#pragma once

#include <cstdint>
#include <memory>
#include <utility>

#include "pareto/archive.hpp"

namespace pareto {

// Point-per-node tree keyed by successorship: a child edge carries the bitmask
// telling, objective by objective, whether the child's point is >= the node's
// point. Every point in a child's subtree shares that mask relative to the
// node, which is what makes subtree pruning sound. The all-zeros and all-ones
// masks cannot occur between mutually non-dominated points, so with p
// objectives a node has at most 2^p - 2 children. Removing a point detaches
// its whole subtree for re-insertion, the structural weakness of this layout.
// Supports up to 32 objectives (mask width).
class QuadTreeArchive final : public Archive {
 public:
  struct Node {
    Point point;
    std::vector<std::pair<std::uint32_t, std::unique_ptr<Node>>> children;
  };

  explicit QuadTreeArchive(ComparisonCounter& counter) : counter_(&counter) {}

  UpdateOutcome update(const Point& candidate) override;
  std::size_t size() const override { return size_; }
  std::vector<Point> points() const override;

  const Node* root() const { return root_.get(); }

 private:
  bool covered(const Node& n, const Point& candidate) const;
  void remove_dominated(std::unique_ptr<Node>& slot, const Point& candidate,
                        std::vector<Point>& evicted,
                        std::vector<Point>& loose);
  void reinsert(Point p, std::vector<Point>& evicted);
  void insert_point(Point p);

  ComparisonCounter* counter_;
  std::unique_ptr<Node> root_;
  std::size_t size_ = 0;
};

}  // namespace pareto
