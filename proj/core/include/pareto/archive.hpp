#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "pareto/core.hpp"

namespace pareto {

// Result of offering one candidate to an archive. When the candidate is
// rejected (covered by some member) the archive is untouched and evicted is
// empty; when accepted, evicted holds every member the candidate dominated.
struct UpdateOutcome {
  bool accepted = false;
  std::vector<Point> evicted;
};

// Online Pareto archive: keeps exactly the non-dominated subset of the points
// offered so far, one update at a time.
class Archive {
 public:
  virtual ~Archive() = default;

  virtual UpdateOutcome update(const Point& candidate) = 0;
  virtual std::size_t size() const = 0;
  virtual std::vector<Point> points() const = 0;
};

enum class Backend {
  NdTree,
  LinearList,
  SortedList,
  QuadTree,
  MFront2,
};

struct NdTreeConfig {
  std::size_t max_leaf_size = 20;
  // 0 resolves to p + 1 when the first point arrives.
  std::size_t max_children = 0;
};

std::unique_ptr<Archive> make_archive(Backend kind, ComparisonCounter& counter,
                                      const NdTreeConfig& tree_config = {});

std::optional<Backend> backend_from_name(std::string_view name);
std::string_view backend_name(Backend kind);

// Backends in the order the CLI lists them; used by "--backend all".
const std::vector<Backend>& all_backends();

}  // namespace pareto
