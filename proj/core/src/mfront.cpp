#include "pareto/mfront.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>
#include <utility>

namespace pareto {

namespace {

double distance_sq(const Point& a, const Point& b) {
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    double diff = a[k] - b[k];
    sum += diff * diff;
  }
  return sum;
}

}  // namespace

std::uint32_t MFrontArchive::allocate(const Point& p) {
  if (!free_ids_.empty()) {
    std::uint32_t id = free_ids_.back();
    free_ids_.pop_back();
    pool_[id] = p;
    live_[id] = 1;
    return id;
  }
  std::uint32_t id = static_cast<std::uint32_t>(pool_.size());
  pool_.push_back(p);
  live_.push_back(1);
  mark_.push_back(0);
  return id;
}

void MFrontArchive::release(std::uint32_t id) {
  live_[id] = 0;
  free_ids_.push_back(id);
}

void MFrontArchive::index_insert(std::uint32_t id) {
  for (std::size_t k = 0; k < dimensions_; ++k) {
    IndexEntry entry{pool_[id][k], id};
    auto& idx = index_[k];
    auto it = std::lower_bound(idx.begin(), idx.end(), entry,
                               [](const IndexEntry& a, const IndexEntry& b) {
                                 return a.key != b.key ? a.key < b.key
                                                       : a.id < b.id;
                               });
    idx.insert(it, entry);
  }
}

void MFrontArchive::index_erase(std::uint32_t id) {
  for (std::size_t k = 0; k < dimensions_; ++k) {
    IndexEntry entry{pool_[id][k], id};
    auto& idx = index_[k];
    auto it = std::lower_bound(idx.begin(), idx.end(), entry,
                               [](const IndexEntry& a, const IndexEntry& b) {
                                 return a.key != b.key ? a.key < b.key
                                                       : a.id < b.id;
                               });
    assert(it != idx.end() && it->id == id);
    idx.erase(it);
  }
}

void MFrontArchive::kd_insert(std::uint32_t id) {
  const Point& p = pool_[id];
  if (kd_root_ == nullptr) {
    kd_root_ = std::make_unique<KdNode>();
    kd_root_->id = id;
    ++kd_live_;
    return;
  }
  KdNode* cur = kd_root_.get();
  std::size_t depth = 0;
  while (!cur->leaf()) {
    cur = p[static_cast<std::size_t>(cur->split_dim)] < cur->split_value
              ? cur->low.get()
              : cur->high.get();
    ++depth;
  }
  if (cur->dead) {
    // The new point lands in a tombstoned region; take the slot over.
    cur->id = id;
    cur->dead = false;
    --kd_dead_;
    ++kd_live_;
    return;
  }

  const Point& q = pool_[cur->id];
  // Split on the depth's objective, advancing past tied coordinates; distinct
  // points always differ somewhere.
  std::size_t dim = depth % dimensions_;
  while (p[dim] == q[dim]) dim = (dim + 1) % dimensions_;
  double lo = std::min(p[dim], q[dim]);
  double hi = std::max(p[dim], q[dim]);
  double split = 0.5 * (lo + hi);
  if (!(lo < split && split <= hi)) split = hi;  // midpoint rounding guard

  auto low = std::make_unique<KdNode>();
  auto high = std::make_unique<KdNode>();
  if (p[dim] < q[dim]) {
    low->id = id;
    high->id = cur->id;
  } else {
    low->id = cur->id;
    high->id = id;
  }
  cur->split_dim = static_cast<int>(dim);
  cur->split_value = split;
  cur->low = std::move(low);
  cur->high = std::move(high);
  ++kd_live_;
}

void MFrontArchive::kd_delete(std::uint32_t id) {
  const Point& p = pool_[id];
  KdNode* cur = kd_root_.get();
  while (!cur->leaf()) {
    cur = p[static_cast<std::size_t>(cur->split_dim)] < cur->split_value
              ? cur->low.get()
              : cur->high.get();
  }
  assert(cur->id == id && !cur->dead);
  cur->dead = true;
  --kd_live_;
  ++kd_dead_;
  if (kd_dead_ > kd_live_) kd_rebuild();
}

void MFrontArchive::kd_rebuild() {
  kd_root_.reset();
  kd_live_ = 0;
  kd_dead_ = 0;
  for (std::uint32_t id = 0; id < pool_.size(); ++id) {
    if (live_[id]) kd_insert(id);
  }
}

void MFrontArchive::kd_nearest(const KdNode* node, NearestState& state) const {
  if (node == nullptr) return;
  if (state.found && state.evaluations_left == 0) return;
  if (node->leaf()) {
    if (node->dead || state.evaluations_left == 0) return;
    --state.evaluations_left;
    double d = distance_sq(*state.query, pool_[node->id]);
    if (!state.found || d < state.best_distance_sq) {
      state.found = true;
      state.best_distance_sq = d;
      state.best_id = node->id;
    }
    return;
  }
  double diff = (*state.query)[static_cast<std::size_t>(node->split_dim)] -
                node->split_value;
  const KdNode* near = diff < 0 ? node->low.get() : node->high.get();
  const KdNode* far = diff < 0 ? node->high.get() : node->low.get();
  kd_nearest(near, state);
  if (state.found && state.evaluations_left == 0) return;
  if (!state.found || diff * diff < state.best_distance_sq) {
    kd_nearest(far, state);
  }
}

const Point& MFrontArchive::approx_nearest(const Point& query) const {
  assert(size_ > 0);
  NearestState state;
  state.query = &query;
  kd_nearest(kd_root_.get(), state);
  assert(state.found);
  return pool_[state.best_id];
}

UpdateOutcome MFrontArchive::update(const Point& candidate) {
  UpdateOutcome outcome;
  if (size_ == 0) {
    dimensions_ = candidate.size();
    index_.assign(dimensions_, {});
    std::uint32_t id = allocate(candidate);
    index_insert(id);
    kd_insert(id);
    size_ = 1;
    outcome.accepted = true;
    return outcome;
  }
  assert(candidate.size() == dimensions_);

  const Point ref = approx_nearest(candidate);

  // Objectives where the reference sits at or below the candidate are walked
  // first; coverers of the candidate live on those intervals, so rejection
  // comes earliest there.
  std::vector<std::size_t> order(dimensions_);
  std::iota(order.begin(), order.end(), 0);
  std::stable_partition(order.begin(), order.end(),
                        [&](std::size_t k) { return ref[k] <= candidate[k]; });

  ++epoch_;
  std::vector<std::uint32_t> dominated;
  for (std::size_t k : order) {
    double lo = std::min(ref[k], candidate[k]);
    double hi = std::max(ref[k], candidate[k]);
    const auto& idx = index_[k];
    auto first = std::lower_bound(
        idx.begin(), idx.end(), lo,
        [](const IndexEntry& e, double value) { return e.key < value; });
    for (auto it = first; it != idx.end() && it->key <= hi; ++it) {
      if (mark_[it->id] == epoch_) continue;
      mark_[it->id] = epoch_;
      switch (compare(candidate, pool_[it->id], *counter_)) {
        case DominanceOutcome::DominatedBy:
        case DominanceOutcome::Equal:
          // Nothing has been modified yet; a coverer and a dominated member
          // cannot coexist in a mutually non-dominated archive.
          assert(dominated.empty());
          return outcome;
        case DominanceOutcome::Dominates:
          dominated.push_back(it->id);
          break;
        case DominanceOutcome::Incomparable:
          break;
      }
    }
  }

  for (std::uint32_t id : dominated) {
    // Flag the slot dead first so a rebuild inside kd_delete skips it; the
    // coordinates stay valid for the index and tree descents until the final
    // move.
    release(id);
    kd_delete(id);
    index_erase(id);
    outcome.evicted.push_back(std::move(pool_[id]));
  }
  std::uint32_t id = allocate(candidate);
  index_insert(id);
  kd_insert(id);
  size_ = size_ - dominated.size() + 1;
  outcome.accepted = true;
  return outcome;
}

std::vector<Point> MFrontArchive::points() const {
  std::vector<Point> out;
  out.reserve(size_);
  for (std::uint32_t id = 0; id < pool_.size(); ++id) {
    if (live_[id]) out.push_back(pool_[id]);
  }
  return out;
}

}  // namespace pareto
