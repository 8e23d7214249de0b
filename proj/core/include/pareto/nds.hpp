#pragma once

#include "pareto/archive.hpp"

namespace pareto {

// Result of sorting a population into non-dominated fronts. fronts[0] is the
// non-dominated set of the whole population, fronts[1] the non-dominated set
// of the rest, and so on. front_of is parallel to the input; exact duplicates
// share a front. Within a front, points keep input order.
struct FrontAssignment {
  std::vector<std::vector<Point>> fronts;
  std::vector<std::size_t> front_of;
};

// Peels fronts by repeatedly streaming the unassigned points through a fresh
// archive of the chosen backend: what survives is the next front.
FrontAssignment nd_sort(const std::vector<Point>& population, Backend kind,
                        ComparisonCounter& counter,
                        const NdTreeConfig& tree_config = {});

// Full pairwise peeling; the reference implementation every backend is
// checked against.
FrontAssignment brute_force_sort(const std::vector<Point>& population,
                                 ComparisonCounter& counter);

}  // namespace pareto
