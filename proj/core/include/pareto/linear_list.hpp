#pragma once

#include "pareto/archive.hpp"

namespace pareto {

// Plain unordered list. One full comparison per member scanned: stop at the
// first member covering the candidate, otherwise swap-remove every dominated
// member and append. The reference backend for equivalence checks.
class LinearListArchive final : public Archive {
 public:
  explicit LinearListArchive(ComparisonCounter& counter) : counter_(&counter) {}

  UpdateOutcome update(const Point& candidate) override;
  std::size_t size() const override { return points_.size(); }
  std::vector<Point> points() const override { return points_; }

 private:
  ComparisonCounter* counter_;
  std::vector<Point> points_;
};

}  // namespace pareto
