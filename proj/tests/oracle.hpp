#pragma once

// Brute-force reference logic for the tests. Deliberately reimplements
// dominance from scratch so library bugs cannot hide behind shared code.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "pareto/core.hpp"

namespace oracle {

inline bool weakly_less(const pareto::Point& a, const pareto::Point& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k]) return false;
  }
  return true;
}

inline bool strictly_dominates(const pareto::Point& a, const pareto::Point& b) {
  return weakly_less(a, b) && a != b;
}

// Final archive a sequential non-dominated filter would keep: a point
// survives iff no other stream point covers it, except that among exact
// duplicates only one copy stays.
inline std::vector<pareto::Point> non_dominated(
    const std::vector<pareto::Point>& stream) {
  std::vector<pareto::Point> kept;
  for (const auto& y : stream) {
    bool covered = false;
    for (const auto& z : kept) {
      if (weakly_less(z, y)) {
        covered = true;
        break;
      }
    }
    if (covered) continue;
    kept.erase(std::remove_if(kept.begin(), kept.end(),
                              [&](const pareto::Point& z) {
                                return strictly_dominates(y, z);
                              }),
               kept.end());
    kept.push_back(y);
  }
  return kept;
}

inline std::vector<pareto::Point> sorted(std::vector<pareto::Point> points) {
  std::sort(points.begin(), points.end());
  return points;
}

inline bool same_set(std::vector<pareto::Point> a, std::vector<pareto::Point> b) {
  return sorted(std::move(a)) == sorted(std::move(b));
}

// Small random streams for property tests. Coordinates are drawn from a
// coarse grid so ties and duplicates actually happen.
inline std::vector<pareto::Point> random_stream(std::uint64_t seed,
                                                std::size_t count,
                                                std::size_t objectives,
                                                std::uint64_t grid) {
  std::mt19937_64 rng(seed);
  std::vector<pareto::Point> stream(count);
  for (auto& point : stream) {
    point.resize(objectives);
    for (auto& coordinate : point) {
      coordinate = static_cast<double>(rng() % grid);
    }
  }
  return stream;
}

}  // namespace oracle
