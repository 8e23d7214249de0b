#include "pareto/nds.hpp"

#include <cassert>
#include <map>
#include <stdexcept>

namespace pareto {

namespace {

void check_population(const std::vector<Point>& population) {
  if (population.empty()) {
    throw std::invalid_argument("cannot sort an empty population");
  }
  for (const auto& p : population) {
    if (p.size() != population.front().size()) {
      throw std::invalid_argument("population points disagree on dimensions");
    }
  }
}

FrontAssignment assemble(const std::vector<Point>& population,
                         std::vector<std::size_t> front_of,
                         std::size_t front_count) {
  FrontAssignment result;
  result.front_of = std::move(front_of);
  result.fronts.resize(front_count);
  for (std::size_t i = 0; i < population.size(); ++i) {
    result.fronts[result.front_of[i]].push_back(population[i]);
  }
  return result;
}

}  // namespace

FrontAssignment nd_sort(const std::vector<Point>& population, Backend kind,
                        ComparisonCounter& counter,
                        const NdTreeConfig& tree_config) {
  check_population(population);

  // Archives reject duplicates, which would orphan the extra copies; sort
  // distinct values and give every copy its representative's front.
  std::map<Point, std::size_t> slot_of;
  std::vector<std::size_t> group(population.size());
  std::vector<const Point*> distinct;
  for (std::size_t i = 0; i < population.size(); ++i) {
    auto [it, inserted] = slot_of.try_emplace(population[i], distinct.size());
    if (inserted) distinct.push_back(&population[i]);
    group[i] = it->second;
  }

  std::vector<std::size_t> slot_front(distinct.size(), 0);
  std::vector<char> assigned(distinct.size(), 0);
  std::size_t unassigned = distinct.size();
  std::size_t front = 0;
  while (unassigned > 0) {
    auto archive = make_archive(kind, counter, tree_config);
    for (std::size_t s = 0; s < distinct.size(); ++s) {
      if (!assigned[s]) archive->update(*distinct[s]);
    }
    for (const auto& p : archive->points()) {
      std::size_t s = slot_of.at(p);
      assert(!assigned[s]);
      assigned[s] = 1;
      slot_front[s] = front;
      --unassigned;
    }
    ++front;
  }

  std::vector<std::size_t> front_of(population.size());
  for (std::size_t i = 0; i < population.size(); ++i) {
    front_of[i] = slot_front[group[i]];
  }
  return assemble(population, std::move(front_of), front);
}

FrontAssignment brute_force_sort(const std::vector<Point>& population,
                                 ComparisonCounter& counter) {
  check_population(population);
  const std::size_t n = population.size();
  std::vector<std::size_t> front_of(n, 0);
  std::vector<char> assigned(n, 0);
  std::size_t unassigned = n;
  std::size_t front = 0;
  std::vector<std::size_t> current;
  while (unassigned > 0) {
    current.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (assigned[i]) continue;
      bool covered = false;
      for (std::size_t j = 0; j < n && !covered; ++j) {
        if (j == i || assigned[j]) continue;
        covered = dominates(population[j], population[i], counter);
      }
      if (!covered) current.push_back(i);
    }
    for (std::size_t i : current) {
      assigned[i] = 1;
      front_of[i] = front;
      --unassigned;
    }
    ++front;
  }
  return assemble(population, std::move(front_of), front);
}

}  // namespace pareto
