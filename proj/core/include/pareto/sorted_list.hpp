#pragma once

#include "pareto/archive.hpp"

namespace pareto {

// Bi-objective specialization. Mutual non-dominance makes the archive
// strictly increasing in the first objective and strictly decreasing in the
// second, so one binary search plus a predecessor check decides acceptance
// and dominated members form a contiguous run after the insertion point.
// Only p = 2 is supported; other dimensions are a configuration error.
class SortedListArchive final : public Archive {
 public:
  explicit SortedListArchive(ComparisonCounter& counter) : counter_(&counter) {}

  UpdateOutcome update(const Point& candidate) override;
  std::size_t size() const override { return points_.size(); }
  std::vector<Point> points() const override { return points_; }

 private:
  ComparisonCounter* counter_;
  std::vector<Point> points_;  // ascending by first objective
};

}  // namespace pareto
