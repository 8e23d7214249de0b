#include "pareto/sorted_list.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>

namespace pareto {

UpdateOutcome SortedListArchive::update(const Point& candidate) {
  if (candidate.size() != 2) {
    throw std::invalid_argument(
        "sorted list archive supports exactly 2 objectives");
  }
  UpdateOutcome outcome;
  auto it = std::lower_bound(
      points_.begin(), points_.end(), candidate[0],
      [](const Point& member, double value) { return member[0] < value; });
  std::size_t i = static_cast<std::size_t>(it - points_.begin());

  if (i < points_.size() && points_[i][0] == candidate[0]) {
    // At most one member can share the first objective; coverage decides.
    switch (compare(points_[i], candidate, *counter_)) {
      case DominanceOutcome::Dominates:
      case DominanceOutcome::Equal:
        return outcome;
      case DominanceOutcome::DominatedBy:
        outcome.evicted.push_back(std::move(points_[i]));
        points_.erase(points_.begin() + static_cast<std::ptrdiff_t>(i));
        break;
      case DominanceOutcome::Incomparable:
        assert(false && "equal first objectives are always comparable");
        return outcome;
    }
  } else if (i > 0) {
    // The predecessor has the largest first objective below the candidate's
    // and therefore the smallest second objective among those members: it is
    // the only possible coverer.
    if (covers(points_[i - 1], candidate, *counter_)) return outcome;
  }

  points_.insert(points_.begin() + static_cast<std::ptrdiff_t>(i), candidate);
  std::size_t j = i + 1;
  while (j < points_.size() && dominates(candidate, points_[j], *counter_)) {
    outcome.evicted.push_back(std::move(points_[j]));
    ++j;
  }
  points_.erase(points_.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                points_.begin() + static_cast<std::ptrdiff_t>(j));
  outcome.accepted = true;
  return outcome;
}

}  // namespace pareto
