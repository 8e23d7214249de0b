#include "pareto/linear_list.hpp"

#include <cassert>
#include <utility>

namespace pareto {

UpdateOutcome LinearListArchive::update(const Point& candidate) {
  assert(points_.empty() || candidate.size() == points_.front().size());
  UpdateOutcome outcome;
  std::size_t i = 0;
  while (i < points_.size()) {
    switch (compare(candidate, points_[i], *counter_)) {
      case DominanceOutcome::DominatedBy:
      case DominanceOutcome::Equal:
        // A member covering the candidate excludes dominated members, so
        // nothing was removed before this point.
        assert(outcome.evicted.empty());
        return outcome;
      case DominanceOutcome::Dominates:
        outcome.evicted.push_back(std::move(points_[i]));
        if (i + 1 != points_.size()) points_[i] = std::move(points_.back());
        points_.pop_back();
        break;  // the swapped-in member still needs a look, stay at i
      case DominanceOutcome::Incomparable:
        ++i;
        break;
    }
  }
  points_.push_back(candidate);
  outcome.accepted = true;
  return outcome;
}

}  // namespace pareto
