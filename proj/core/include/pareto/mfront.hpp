#pragma once

#include <cstdint>
#include <memory>

#include "pareto/archive.hpp"

namespace pareto {

// Index-based archive. Each objective gets a dynamic array of (value, id)
// entries kept sorted, and a k-d tree over the members supplies an
// approximate nearest neighbor as reference point. Any member dominating the
// candidate lies, on some objective, between the reference and the candidate;
// so does any member the candidate dominates. The update therefore walks just
// those index intervals, comparing each member once (a mark array dedupes
// members that show up in several intervals), rejecting on the first coverer.
//
// Deletions tombstone the k-d leaf; the tree is rebuilt from the live members
// once tombstones outnumber them. The nearest-neighbor search is capped at
// four point-to-point distance evaluations, trading accuracy for a bounded
// cost; a worse reference only widens the walked intervals.
class MFrontArchive final : public Archive {
 public:
  explicit MFrontArchive(ComparisonCounter& counter) : counter_(&counter) {}

  UpdateOutcome update(const Point& candidate) override;
  std::size_t size() const override { return size_; }
  std::vector<Point> points() const override;

  // Reference-point lookup; requires a non-empty archive. Always returns a
  // live member, the four-evaluation budget only caps how far the search
  // refines.
  const Point& approx_nearest(const Point& query) const;

  struct IndexEntry {
    double key;
    std::uint32_t id;
  };
  // Diagnostics for tests: per-objective index and the backing pool.
  const std::vector<IndexEntry>& objective_index(std::size_t k) const {
    return index_[k];
  }
  const Point& pool_point(std::uint32_t id) const { return pool_[id]; }
  bool live(std::uint32_t id) const { return live_[id] != 0; }

 private:
  struct KdNode {
    int split_dim = -1;  // -1 marks a leaf
    double split_value = 0.0;
    std::uint32_t id = 0;
    bool dead = false;
    std::unique_ptr<KdNode> low;
    std::unique_ptr<KdNode> high;

    bool leaf() const { return split_dim < 0; }
  };

  struct NearestState {
    const Point* query = nullptr;
    double best_distance_sq = 0.0;
    std::uint32_t best_id = 0;
    bool found = false;
    int evaluations_left = 4;
  };

  std::uint32_t allocate(const Point& p);
  void release(std::uint32_t id);
  void index_insert(std::uint32_t id);
  void index_erase(std::uint32_t id);
  void kd_insert(std::uint32_t id);
  void kd_delete(std::uint32_t id);
  void kd_rebuild();
  void kd_nearest(const KdNode* node, NearestState& state) const;

  ComparisonCounter* counter_;
  std::size_t dimensions_ = 0;
  std::size_t size_ = 0;

  std::vector<Point> pool_;
  std::vector<char> live_;
  std::vector<std::uint32_t> free_ids_;
  std::vector<std::vector<IndexEntry>> index_;

  std::vector<std::uint64_t> mark_;
  std::uint64_t epoch_ = 0;

  std::unique_ptr<KdNode> kd_root_;
  std::size_t kd_live_ = 0;
  std::size_t kd_dead_ = 0;
};

}  // namespace pareto
