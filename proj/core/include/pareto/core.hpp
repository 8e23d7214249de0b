#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace pareto {

// Objective vector, minimized componentwise. All archives and generators in
// this library work on raw coordinate vectors; dimension checks are the
// caller's contract (asserted, not thrown).
using Point = std::vector<double>;

enum class DominanceOutcome {
  Dominates,     // u is no worse everywhere and strictly better somewhere
  DominatedBy,   // v dominates u
  Equal,         // identical coordinates
  Incomparable,  // each is strictly better somewhere
};

// Every full point-vs-point decision in an archive routes through one of the
// three functions below, and each invocation costs exactly one tick. The
// counter is passed explicitly so concurrent runs can own independent ones.
struct ComparisonCounter {
  std::uint64_t count = 0;
};

inline DominanceOutcome compare(const Point& u, const Point& v,
                                ComparisonCounter& counter) {
  assert(u.size() == v.size());
  ++counter.count;
  bool u_better = false;
  bool v_better = false;
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k] < v[k]) {
      u_better = true;
      if (v_better) return DominanceOutcome::Incomparable;
    } else if (v[k] < u[k]) {
      v_better = true;
      if (u_better) return DominanceOutcome::Incomparable;
    }
  }
  if (u_better) return DominanceOutcome::Dominates;
  if (v_better) return DominanceOutcome::DominatedBy;
  return DominanceOutcome::Equal;
}

// u covers v: u_k <= v_k for all k (dominates or equal).
inline bool covers(const Point& u, const Point& v, ComparisonCounter& counter) {
  assert(u.size() == v.size());
  ++counter.count;
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k] > v[k]) return false;
  }
  return true;
}

inline bool dominates(const Point& u, const Point& v,
                      ComparisonCounter& counter) {
  assert(u.size() == v.size());
  ++counter.count;
  bool strict = false;
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k] > v[k]) return false;
    if (u[k] < v[k]) strict = true;
  }
  return strict;
}

}  // namespace pareto
